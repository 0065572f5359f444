"""Polynomial qKZ solution: inhomogeneous components by iterated residues,
homogeneous components by constant-term extraction.

Component indices are plain tuples of 1-based positions. A *down* index
``a`` has n strictly increasing entries in [1, 2n+1]; an *up* index ``b``
has n+1. They are related by :func:`~polyqkz.spinvector.complement`.
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import sixvertex
from .polyring import (
    AffineForm, CappedPoly, LinearFactorExpr, ResidueError, TauPoly,
    constant_term, residue_at_simple_pole,
)
from .scalar import DegenerateParameters, rat, render, scalar_pow
from .spinvector import SpinVector, complement, sector_basis

__all__ = [
    "check_down_index", "check_up_index", "check_admissible",
    "psi_inhom", "psibar_inhom", "psi_vector_inhom", "psibar_vector_inhom",
    "base_component", "check_exchange", "check_cyclicity", "cyclicity_rhs",
    "psi_hom", "psibar_hom", "psi_ct", "psibar_ct", "psi_table", "psibar_table",
    "table_as_spinvector", "recurrence_rhs", "rotated_recurrence_rhs",
    "table_to_json", "table_from_json",
]


def check_down_index(a: Sequence[int], n: int) -> tuple:
    a = tuple(a)
    N = 2 * n + 1
    if len(a) != n or any(x >= y for x, y in zip(a, a[1:])) or (a and not (1 <= a[0] and a[-1] <= N)):
        raise ValueError(f"{a} is not a strictly increasing {n}-subset of 1..{N}")
    return a


def check_up_index(b: Sequence[int], n: int) -> tuple:
    b = tuple(b)
    N = 2 * n + 1
    if len(b) != n + 1 or any(x >= y for x, y in zip(b, b[1:])) or not (1 <= b[0] and b[-1] <= N):
        raise ValueError(f"{b} is not a strictly increasing {n + 1}-subset of 1..{N}")
    return b


def _n_from_size(N: int) -> int:
    if N < 3 or N % 2 == 0:
        raise ValueError(f"system size must be odd and >= 3, got {N}")
    return (N - 1) // 2


# --------------------------------------------------------------------------
# inhomogeneous components
# --------------------------------------------------------------------------

def check_admissible(z: Sequence, q) -> None:
    """Raise DegenerateParameters unless z is pairwise distinct, nonzero and q-generic."""
    if q == 0 or q == 1 or q == -1:
        raise DegenerateParameters("q must not be 0 or +-1")
    q2 = q * q
    for i, zi in enumerate(z):
        if not zi:
            raise DegenerateParameters("spectral parameters must be nonzero")
        for j, zj in enumerate(z):
            if i == j:
                continue
            if zi == zj:
                raise DegenerateParameters(f"z_{i + 1} = z_{j + 1}")
            if q2 * zi == zj:
                raise DegenerateParameters(f"q^2 z_{i + 1} = z_{j + 1}")


def _vandermonde_prefactor(z, q):
    qi = 1 / q
    acc = rat(1)
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            acc = acc * (q * z[i] - qi * z[j])
    return acc


def _integrand(idx: Sequence[int], z, q, with_w: bool, pref) -> LinearFactorExpr:
    """Phi (with_w=True, n variables) or Phi-bar (with_w=False, n+1 variables)."""
    qi = 1 / q
    k = len(idx)
    N = len(z)
    num, den = [], []
    for l in range(k):
        if with_w:
            num.append(AffineForm.var(l))
        for m in range(l + 1, k):
            num.append(AffineForm({m: 1, l: -1}))
            num.append(AffineForm({l: q, m: -qi}))
        for i in range(1, idx[l] + 1):
            den.append(AffineForm.var(l, 1, -z[i - 1]))
        for i in range(idx[l], N + 1):
            den.append(AffineForm.var(l, q, -qi * z[i - 1]))
    return LinearFactorExpr(pref, num, den)


def _sum_residues(expr: LinearFactorExpr, idx: Sequence[int], z) -> object:
    """Sum of iterated simple-pole residues over injective assignments w_l = z_{i_l}, i_l <= idx[l]."""
    k = len(idx)
    total = rat(0)
    used = [False] * (len(z) + 1)

    def walk(level, e):
        nonlocal total
        if level == k:
            if e.numerator or e.denominator:
                raise ResidueError("integration variables left after all residues")
            total = total + e.prefactor
            return
        for i in range(1, idx[level] + 1):
            if used[i]:
                continue
            used[i] = True
            walk(level + 1, residue_at_simple_pole(e, level, z[i - 1]))
            used[i] = False

    walk(0, expr)
    return total


def psi_inhom(a: Sequence[int], z: Sequence, q, check: bool = True):
    """Psi_{a_1..a_n}(z_1..z_N) from the n-fold contour integral."""
    N = len(z)
    n = _n_from_size(N)
    a = check_down_index(a, n)
    if check:
        check_admissible(z, q)
    pref = scalar_pow(q - 1 / q, n)
    for x in a:
        pref = pref * z[x - 1]
    try:
        val = _sum_residues(_integrand(a, z, q, True, pref), a, z)
    except ResidueError as exc:
        raise DegenerateParameters(str(exc)) from exc
    return _vandermonde_prefactor(z, q) * val


def psibar_inhom(b: Sequence[int], z: Sequence, q, check: bool = True):
    """Psi-bar_{b_1..b_{n+1}}(z_1..z_N) from the (n+1)-fold contour integral."""
    N = len(z)
    n = _n_from_size(N)
    b = check_up_index(b, n)
    if check:
        check_admissible(z, q)
    # (q - 1/q)^(n+1): with the n-th power the two integrals differ by exactly q - 1/q
    pref = scalar_pow(q - 1 / q, n + 1)
    for zi in z:
        pref = pref * zi
    try:
        val = _sum_residues(_integrand(b, z, q, False, pref), b, z)
    except ResidueError as exc:
        raise DegenerateParameters(str(exc)) from exc
    return _vandermonde_prefactor(z, q) * val


def psi_vector_inhom(z: Sequence, q) -> SpinVector:
    N = len(z)
    n = _n_from_size(N)
    check_admissible(z, q)
    return SpinVector(N, n, {a: psi_inhom(a, z, q, check=False) for a in sector_basis(N, n)})


def psibar_vector_inhom(z: Sequence, q) -> SpinVector:
    """Psi-bar assembled in the same n-down sector (up positions b <-> down positions complement(b))."""
    N = len(z)
    n = _n_from_size(N)
    check_admissible(z, q)
    return SpinVector(N, n, {complement(b, N): psibar_inhom(b, z, q, check=False)
                             for b in sector_basis(N, n + 1)})


def base_component(z: Sequence, q):
    """Closed form of Psi_{1..n}: prod_{i<=n} z_i times two q-Vandermonde blocks."""
    N = len(z)
    n = _n_from_size(N)
    acc = rat(1)
    for i in range(n):
        acc = acc * z[i]
    return acc * _vandermonde_prefactor(z[:n], q) * _vandermonde_prefactor(z[n:], q)


def check_exchange(z: Sequence, q, i: int, psi: SpinVector | None = None) -> bool:
    """Rcheck_{i,i+1}(z_{i+1}/z_i) Psi(z) == Psi(z with z_i, z_{i+1} swapped).

    ``psi`` may pass a precomputed Psi(z) to avoid recomputing it per site.
    """
    N = len(z)
    if not 1 <= i <= N - 1:
        raise ValueError(f"site {i} out of range 1..{N - 1}")
    zs = list(z)
    zs[i - 1], zs[i] = zs[i], zs[i - 1]
    check_admissible(z, q)
    check_admissible(zs, q)
    if psi is None:
        psi = psi_vector_inhom(z, q)
    lhs = sixvertex.rcheck_apply(psi, i, z[i] / z[i - 1], q)
    return lhs == psi_vector_inhom(zs, q)


def cyclicity_rhs(z: Sequence, q) -> list:
    """(z_2, ..., z_N, q^6 z_1)."""
    return list(z[1:]) + [scalar_pow(q, 6) * z[0]]


def check_cyclicity(z: Sequence, q, psi: SpinVector | None = None) -> bool:
    """D sigma Psi(z) == Psi(z_2, ..., z_N, q^6 z_1)."""
    shifted = cyclicity_rhs(z, q)
    check_admissible(z, q)
    check_admissible(shifted, q)
    if psi is None:
        psi = psi_vector_inhom(z, q)
    lhs = sixvertex.d_apply(sixvertex.rotate_apply(psi), q)
    return lhs == psi_vector_inhom(shifted, q)


# --------------------------------------------------------------------------
# homogeneous components (constant terms)
# --------------------------------------------------------------------------

_T = TauPoly.tau()
_ONE = TauPoly.const(1)
_NEG = TauPoly.const(-1)
_NEG_T = TauPoly((0, -1))


def _single(cap):
    # 1 + tau u + u^2
    return [((0,), _ONE), ((1,), _T), ((2,), _ONE)]


def _pair(cl, cm):
    # (u_m - u_l)(1 + tau u_m + u_l u_m)
    return [((0, 1), _ONE), ((0, 2), _T), ((1, 2), _ONE),
            ((1, 0), _NEG), ((1, 1), _NEG_T), ((2, 1), _NEG)]


def psi_ct(indices: Sequence[int]) -> TauPoly:
    """Constant-term formula for psi on an arbitrary integer tuple (exponents index - 1).

    Entries need not be increasing or in range; the coefficient is simply
    zero where the monomial does not occur.
    """
    return constant_term([x - 1 for x in indices], _single, _pair)


def psibar_ct(indices: Sequence[int]) -> TauPoly:
    return constant_term([x - 1 for x in indices], None, _pair)


def psi_hom(a: Sequence[int]) -> TauPoly:
    """psi_{a_1..a_n} as an integer polynomial in tau."""
    a = check_down_index(a, len(a))
    return psi_ct(a)


def psibar_hom(b: Sequence[int]) -> TauPoly:
    """psi-bar_{b_1..b_{n+1}} as an integer polynomial in tau."""
    b = check_up_index(b, len(b) - 1)
    return psibar_ct(b)


def _lift(items, positions, nvars, caps):
    terms = []
    for e, c in items:
        full = [0] * nvars
        for pos, x in zip(positions, e):
            full[pos] = x
        terms.append((tuple(full), c))
    return CappedPoly.from_list(caps, terms)


def psi_table(n: int, tau=None) -> dict:
    """All C(2n+1, n) homogeneous components, keyed by down-index tuple.

    Values are TauPoly, or exact rationals when ``tau`` is given. Components
    sharing a prefix a_1..a_l share the elimination of u_1..u_l.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if tau is None:
        return dict(_table(n, None))
    # a numeric tau is folded into the factors, which keeps coefficients constant
    t = rat(tau)
    return {k: v(t) for k, v in _table(n, t)}


def _numeric_factors(t):
    ct, cnt = TauPoly.const(t), TauPoly.const(-t)

    def single(cap):
        return [((0,), _ONE), ((1,), ct), ((2,), _ONE)]

    def pair(cl, cm):
        return [((0, 1), _ONE), ((0, 2), ct), ((1, 2), _ONE),
                ((1, 0), _NEG), ((1, 1), cnt), ((2, 1), _NEG)]

    return single, pair


def _ct_walk(k: int, N: int, single, pair) -> tuple:
    """Constant terms for every strictly increasing k-subset of 1..N.

    Depth-first over index prefixes, so components sharing a_1..a_l share
    the elimination of u_1..u_l.
    """
    out: dict = {}
    caps0 = tuple(N - k + l for l in range(k))  # largest exponent a_l - 1 can take

    def walk(level, poly, prefix):
        if level == k:
            out[prefix] = poly.terms.get((), TauPoly())
            return
        caps = poly.caps
        local_n = k - level
        if single is not None:
            poly = poly * _lift(single(caps[0]), (0,), local_n, caps)
        for m in range(1, local_n):
            poly = poly * _lift(pair(caps[0], caps[m]), (0, m), local_n, caps)
        lo = prefix[-1] + 1 if prefix else 1
        hi = N - (k - 1 - level)
        for a in range(lo, hi + 1):
            walk(level + 1, poly.take(0, a - 1), prefix + (a,))

    walk(0, CappedPoly.one(caps0), ())
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _table(n: int, t) -> tuple:
    single, pair = (_single, _pair) if t is None else _numeric_factors(t)
    return _ct_walk(n, 2 * n + 1, single, pair)


@lru_cache(maxsize=None)
def _bar_table(n: int, t) -> tuple:
    pair = _pair if t is None else _numeric_factors(t)[1]
    return _ct_walk(n + 1, 2 * n + 1, None, pair)


def psibar_table(n: int, tau=None) -> dict:
    """All C(2n+1, n+1) components psi-bar_b, keyed by up-index tuple."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if tau is None:
        return dict(_bar_table(n, None))
    t = rat(tau)
    return {k: v(t) for k, v in _bar_table(n, t)}


def table_as_spinvector(n: int, table: dict) -> SpinVector:
    return SpinVector(2 * n + 1, n, dict(table))


def recurrence_rhs(a: Sequence[int]) -> TauPoly:
    """sum_eps tau^{|eps|} psi^{(n-1)}_{a_2-1-eps_2, ..., a_n-1-eps_n}, for a_1 = 1."""
    a = tuple(a)
    if not a or a[0] != 1:
        raise ValueError("recurrence needs a_1 = 1")
    rest = a[1:]
    total = TauPoly()
    for eps in product((0, 1), repeat=len(rest)):
        idx = [x - 1 - e for x, e in zip(rest, eps)]
        total = total + TauPoly((0,) * sum(eps) + (1,)) * psi_ct(idx)
    return total


def rotated_recurrence_rhs(a: Sequence[int]) -> int:
    """tau = 1 form: sum_eps psi^{(n-1)}_{a_2-a_1-eps_2, ..., a_n-a_1-eps_n}."""
    a = tuple(a)
    total = 0
    for eps in product((0, 1), repeat=len(a) - 1):
        idx = [x - a[0] - e for x, e in zip(a[1:], eps)]
        total += int(psi_ct(idx)(1))
    return total


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------

def table_to_json(n: int, table: dict, tau=None) -> str:
    comps = []
    for a, v in sorted(table.items()):
        value = v.to_list() if isinstance(v, TauPoly) else render(v)
        comps.append({"a": list(a), "value": value})
    doc = {"n": n, "tau": "sym" if tau is None else render(rat(tau)), "components": comps}
    return json.dumps(doc, indent=1)


def table_from_json(text: str) -> tuple[int, dict]:
    doc = json.loads(text)
    table = {}
    for c in doc["components"]:
        v = c["value"]
        table[tuple(c["a"])] = TauPoly(v) if isinstance(v, list) else rat(v)
    return doc["n"], table


def iter_components(n: int) -> Iterable[tuple]:
    return sector_basis(2 * n + 1, n)
