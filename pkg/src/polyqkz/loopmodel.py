"""Temperley-Lieb loop model on 2n points of a circle.

A link pattern is stored as the tuple ``(pi(1), ..., pi(2n))`` of 1-based
partners. Patterns are ordered lexicographically on that tuple.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .linalg import nullspace, primitive_integer_vector
from .polyring import TauPoly

LinkPattern = tuple


def is_noncrossing(pi: LinkPattern) -> bool:
    m = len(pi)
    if m % 2:
        return False
    for i in range(1, m + 1):
        j = pi[i - 1]
        if j == i or not 1 <= j <= m or pi[j - 1] != i:
            return False
    for i in range(1, m + 1):
        j = pi[i - 1]
        if i < j:
            for k in range(i + 1, j):
                if not i < pi[k - 1] < j:
                    return False
    return True


@lru_cache(maxsize=None)
def enumerate_link_patterns(n: int) -> tuple:
    """All Catalan(n) noncrossing perfect matchings of 1..2n, lexicographically sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def build(points):
        if not points:
            yield {}
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            partner = points[idx]
            for inner in build(points[1:idx]):
                for outer in build(points[idx + 1:]):
                    d = {first: partner, partner: first}
                    d.update(inner)
                    d.update(outer)
                    yield d

    pats = [tuple(d[i] for i in range(1, 2 * n + 1)) for d in build(list(range(1, 2 * n + 1)))]
    return tuple(sorted(pats))


def e_apply(i: int, pi: LinkPattern) -> tuple[LinkPattern, bool]:
    """Action of e_i (points i and i+1 mod 2n). Returns (pattern, closed_loop)."""
    m = len(pi)
    if not 1 <= i <= m:
        raise ValueError(f"generator index {i} out of range 1..{m}")
    j = i % m + 1
    if pi[i - 1] == j:
        return pi, True
    a, b = pi[i - 1], pi[j - 1]
    out = list(pi)
    out[i - 1], out[j - 1] = j, i
    out[a - 1], out[b - 1] = b, a
    return tuple(out), False


def tl_apply(vec: dict, i: int, tau) -> dict:
    """e_i on a linear combination {pattern: coefficient}."""
    out: dict = {}
    for pi, c in vec.items():
        new, closed = e_apply(i, pi)
        val = c * tau if closed else c
        out[new] = out.get(new, 0) + val
    return {k: v for k, v in out.items() if v}


def hamiltonian_columns(n: int, tau=1) -> list[dict]:
    """Column j of H_TL = sum_i e_i acting on the j-th pattern, as {row: value}."""
    pats = enumerate_link_patterns(n)
    index = {p: k for k, p in enumerate(pats)}
    cols = []
    for p in pats:
        col: dict = {}
        for i in range(1, 2 * n + 1):
            new, closed = e_apply(i, p)
            r = index[new]
            col[r] = col.get(r, 0) + (tau if closed else 1)
        cols.append(col)
    return cols


def rotate_pattern(pi: LinkPattern, k: int = 1) -> LinkPattern:
    """Relabel every point i as i + k (mod 2n)."""
    m = len(pi)
    out = [0] * m
    for i in range(1, m + 1):
        out[(i - 1 + k) % m] = (pi[i - 1] - 1 + k) % m + 1
    return tuple(out)


def reflect_pattern(pi: LinkPattern) -> LinkPattern:
    """Relabel i as 2n + 1 - i."""
    m = len(pi)
    out = [0] * m
    for i in range(1, m + 1):
        out[m - i] = m + 1 - pi[i - 1]
    return tuple(out)


@dataclass
class LoopVector:
    n: int
    entries: dict  # LinkPattern -> value

    def total(self):
        return sum(self.entries.values())

    def to_json(self) -> str:
        pats = sorted(self.entries)
        return json.dumps({"n": self.n, "patterns": [list(p) for p in pats],
                           "values": [int(self.entries[p]) for p in pats]})


class KernelDimensionError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _ground_state(n: int) -> tuple:
    pats = enumerate_link_patterns(n)
    cols = hamiltonian_columns(n, 1)
    size = len(pats)
    rows = [dict() for _ in range(size)]
    for j, col in enumerate(cols):
        for r, v in col.items():
            rows[r][j] = rows[r].get(j, 0) + v
    for r in range(size):
        rows[r][r] = rows[r].get(r, 0) - 2 * n
    kernel = nullspace(rows, size)
    if len(kernel) != 1:
        raise KernelDimensionError(f"eigenvalue 2n has multiplicity {len(kernel)} at n={n}")
    return tuple(primitive_integer_vector(kernel[0]))


def loop_ground_state(n: int) -> LoopVector:
    """Perron-Frobenius eigenvector of H_TL at tau = 1 as coprime positive integers."""
    pats = enumerate_link_patterns(n)
    vals = _ground_state(n)
    if min(vals) <= 0:
        raise KernelDimensionError("ground state is not strictly positive")
    if min(vals) != 1:
        raise KernelDimensionError(f"smallest component is {min(vals)}, not 1")
    return LoopVector(n, dict(zip(pats, vals)))


def partial_sum_xi(a: int, xi: LoopVector) -> int:
    """Sum of xi_pi over patterns with pi(1) = a."""
    if a % 2:
        raise ValueError("point 1 can only be paired with an even point")
    if not 2 <= a <= 2 * xi.n:
        raise ValueError(f"point {a} out of range")
    return sum(v for p, v in xi.entries.items() if p[0] == a)


def chebyshev_U(k: int) -> TauPoly:
    """U_k with U_{-1} = 0, U_0 = 1, U_{k+1} = -tau U_k - U_{k-1}.

    Negative indices continue the recurrence backwards, U_{-k-2} = -U_k,
    matching U_{k-1} = (q^k - q^-k)/(q - q^-1) for all integers k.
    """
    if k < -1:
        return -chebyshev_U(-k - 2)
    return _U(k)


@lru_cache(maxsize=None)
def _U(k: int) -> TauPoly:
    if k == -1:
        return TauPoly()
    if k == 0:
        return TauPoly.const(1)
    return TauPoly((0, -1)) * _U(k - 1) - _U(k - 2)


def coeff_C(b, pi: LinkPattern) -> TauPoly:
    """prod over arches i < pi(i) of U_{#{l : i <= b_l < pi(i)} - (pi(i) - i + 1)/2}."""
    out = TauPoly.const(1)
    for i in range(1, len(pi) + 1):
        j = pi[i - 1]
        if i < j:
            count = sum(1 for x in b if i <= x < j)
            out = out * chebyshev_U(count - (j - i + 1) // 2)
            if not out:
                break
    return out


def openings(pi: LinkPattern) -> list[int]:
    return [i for i in range(1, len(pi) + 1) if i < pi[i - 1]]


def even_openings(pi: LinkPattern) -> int:
    return sum(1 for i in openings(pi) if i % 2 == 0)


def loop_expansion(b, xi: LoopVector) -> int:
    """sum_pi C^pi_b xi_pi at tau = 1."""
    return sum(int(coeff_C(b, p)(1)) * v for p, v in xi.entries.items())
