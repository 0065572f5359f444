"""Exact kernel computation over the rationals."""
from __future__ import annotations

from math import gcd

from .scalar import rat


def nullspace(rows: list[dict], ncols: int) -> list[list]:
    """Basis of {x : A x = 0} for a sparse matrix given as row dicts {col: value}.

    Gauss-Jordan elimination over Q with deterministic pivoting (lowest
    column, then first available row).
    """
    work = [{c: rat(v) for c, v in r.items() if v} for r in rows]
    pivots: dict[int, dict] = {}  # pivot column -> normalized row
    for row in work:
        # reduce against existing pivots
        for pc, prow in pivots.items():
            f = row.get(pc)
            if f:
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {c: v * inv for c, v in row.items()}
        # eliminate the new pivot from earlier pivot rows
        for other in pivots.values():
            f = other.get(pc)
            if f:
                for c, v in row.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        pivots[pc] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [rat(0)] * ncols
        x[fc] = rat(1)
        for pc, prow in pivots.items():
            x[pc] = -prow.get(fc, 0)
        basis.append(x)
    return basis


def primitive_integer_vector(x: list) -> list[int]:
    """Scale a rational vector to coprime integers with a positive first nonzero entry."""
    den = 1
    for v in x:
        d = rat(v).denominator
        den = den * d // gcd(den, d)
    ints = [int(rat(v) * den) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return ints
    ints = [v // g for v in ints]
    first = next(v for v in ints if v)
    return [-v for v in ints] if first < 0 else ints
