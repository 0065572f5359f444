"""Vectors in a fixed-magnetization sector of (C^2)^{tensor N}."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator


Key = tuple  # sorted 1-based positions of down arrows


def sector_basis(N: int, K: int) -> Iterator[Key]:
    """Down-arrow position sets of size K in lexicographic order."""
    return combinations(range(1, N + 1), K)


def complement(positions: Key, N: int) -> Key:
    s = set(positions)
    return tuple(i for i in range(1, N + 1) if i not in s)


@dataclass
class SpinVector:
    """Exact vector over the basis e_{a_1..a_K} (down arrows at a_1 < ... < a_K).

    Missing keys are zero.
    """

    N: int
    K: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for key in self.entries:
            if len(key) != self.K or any(not 1 <= p <= self.N for p in key):
                raise ValueError(f"basis key {key} not in sector K={self.K} of size N={self.N}")

    def __getitem__(self, key: Key):
        return self.entries.get(tuple(key), 0)

    def nonzero(self) -> dict:
        return {k: v for k, v in self.entries.items() if v}

    def scaled(self, c) -> SpinVector:
        return SpinVector(self.N, self.K, {k: c * v for k, v in self.entries.items()})

    def __sub__(self, other: SpinVector) -> SpinVector:
        self._same_sector(other)
        keys = set(self.entries) | set(other.entries)
        return SpinVector(self.N, self.K, {k: self[k] - other[k] for k in keys})

    def __add__(self, other: SpinVector) -> SpinVector:
        self._same_sector(other)
        keys = set(self.entries) | set(other.entries)
        return SpinVector(self.N, self.K, {k: self[k] + other[k] for k in keys})

    def is_zero(self) -> bool:
        return not any(self.entries.values())

    def __eq__(self, other):
        if not isinstance(other, SpinVector) or (self.N, self.K) != (other.N, other.K):
            return False
        return (self - other).is_zero()

    def _same_sector(self, other: SpinVector):
        if (self.N, self.K) != (other.N, other.K):
            raise ValueError("vectors live in different sectors")
