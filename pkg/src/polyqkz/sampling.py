"""Seeded draws of exact spectral parameters.

Everything is driven by a :class:`random.Random` instance, so a seed fixes
every draw.
"""
from __future__ import annotations

import random

from .qkz import check_admissible, cyclicity_rhs
from .scalar import DegenerateParameters, rat

GENERIC_Q = (rat(2), rat(3, 2), rat(5, 3), rat(7, 4))


def random_rat(rng: random.Random, pmax: int = 100, qmax: int = 10):
    return rat(rng.randint(1, pmax), rng.randint(1, qmax))


def random_generic_q(rng: random.Random):
    return rng.choice(GENERIC_Q)


def random_z(rng: random.Random, N: int, q, *, cyclic: bool = False, max_tries: int = 1000) -> list:
    """N admissible spectral parameters; with ``cyclic`` the shifted tuple is admissible too."""
    for _ in range(max_tries):
        z = [random_rat(rng) for _ in range(N)]
        try:
            check_admissible(z, q)
            if cyclic:
                check_admissible(cyclicity_rhs(z, q), q)
        except DegenerateParameters:
            continue
        return z
    raise RuntimeError("could not draw admissible spectral parameters")

