"""Independent reference implementations used only by the tests.

None of these share code with the residue engine, the constant-term
elimination or the matrix-free transfer matrix.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import sympy as sp
from gmpy2 import mpq

from polyqkz.scalar import Cyc3, rat


# --------------------------------------------------------------------------
# Psi from the base component and the index-increment relation
# --------------------------------------------------------------------------

def psi_by_increments(a, z, q):
    """Psi_a(z) built from Psi_{1..n} by raising one index at a time.

    Psi_{.., i+1, ..}(z) = (q z_i - z_{i+1}/q)/(z_{i+1} - z_i) Psi_{.., i, ..}(z swapped at i)
                           - (q - 1/q) z_{i+1}/(z_{i+1} - z_i) Psi_{.., i, ..}(z)
    """
    N = len(z)
    n = (N - 1) // 2

    @lru_cache(maxsize=None)
    def rec(a, z):
        if a == tuple(range(1, n + 1)):
            acc = rat(1)
            for i in range(n):
                acc *= z[i]
            for i in range(n):
                for j in range(i + 1, n):
                    acc *= q * z[i] - z[j] / q
            for i in range(n, N):
                for j in range(i + 1, N):
                    acc *= q * z[i] - z[j] / q
            return acc
        # lowest entry that can be lowered by one
        for l, x in enumerate(a):
            if x > 1 and (x - 1) not in a:
                break
        i = a[l] - 1  # 1-based site
        lower = a[:l] + (i,) + a[l + 1:]
        zi, zj = z[i - 1], z[i]
        zs = list(z)
        zs[i - 1], zs[i] = zj, zi
        d = zj - zi
        return (q * zi - zj / q) / d * rec(lower, tuple(zs)) - (q - 1 / q) * zj / d * rec(lower, z)

    return rec(tuple(a), tuple(z))


# --------------------------------------------------------------------------
# sympy residues of the n-fold integrand
# --------------------------------------------------------------------------

def _to_sympy(x):
    if isinstance(x, Cyc3):
        w = sp.Rational(-1, 2) + sp.sqrt(3) * sp.I / 2
        return sp.Rational(int(x.a.numerator), int(x.a.denominator)) + \
            sp.Rational(int(x.b.numerator), int(x.b.denominator)) * w
    x = rat(x)
    return sp.Rational(int(x.numerator), int(x.denominator))


def psi_by_sympy(a, z, q):
    """Psi_a(z) for rational q by iterated sympy residues of the integrand."""
    N = len(z)
    n = len(a)
    Q = _to_sympy(q)
    Z = [_to_sympy(x) for x in z]
    W = sp.symbols(f"w1:{n + 1}")
    f = sp.Integer(1)
    for l in range(n):
        for i in range(1, a[l] + 1):
            f /= W[l] - Z[i - 1]
        for i in range(a[l], N + 1):
            f /= Q * W[l] - Z[i - 1] / Q
        f *= W[l]
        for m in range(l + 1, n):
            f *= (W[m] - W[l]) * (Q * W[l] - W[m] / Q)
    f *= (Q - 1 / Q) ** n
    for l in range(n):
        f *= Z[a[l] - 1]
    total = sp.Integer(0)
    for choice in product(*[range(1, a[l] + 1) for l in range(n)]):
        if len(set(choice)) < n:
            continue
        g = f
        for l, i in enumerate(choice):
            g = sp.cancel((W[l] - Z[i - 1]) * g).subs(W[l], Z[i - 1])
        total += g
    for i in range(N):
        for j in range(i + 1, N):
            total *= Q * Z[i] - Z[j] / Q
    total = sp.nsimplify(sp.simplify(total))
    return mpq(int(sp.numer(total)), int(sp.denom(total)))


def residue_by_sympy(num_roots, den_roots, point, prefactor=1):
    """Residue at w = point of prefactor * prod (w - r) / prod (w - s), rational data."""
    w = sp.Symbol("w")
    f = sp.Rational(prefactor)
    for r in num_roots:
        f *= (w - sp.Rational(r))
    for s in den_roots:
        f /= (w - sp.Rational(s))
    val = sp.residue(f, w, sp.Rational(point))
    return mpq(int(sp.numer(val)), int(sp.denom(val)))


# --------------------------------------------------------------------------
# dense transfer matrix
# --------------------------------------------------------------------------

def _embed(M, i, j, nsites):
    """Dense matrix of M acting on sites (i, j), i the first tensor factor of M."""
    dim = 2 ** nsites
    out = [[rat(0)] * dim for _ in range(dim)]
    sh_i, sh_j = nsites - 1 - i, nsites - 1 - j
    for col in range(dim):
        cin = 2 * ((col >> sh_i) & 1) + ((col >> sh_j) & 1)
        for rout in range(4):
            v = M[rout][cin]
            if v:
                row = col & ~(1 << sh_i) & ~(1 << sh_j)
                row |= ((rout >> 1) << sh_i) | ((rout & 1) << sh_j)
                out[row][col] += v
    return out


def _mm(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum((x * y for x, y in zip(A[r], Bt[c]) if x and y), rat(0)) for c in range(n)]
            for r in range(n)]


def dense_transfer(y, z, q, r_matrix, aux_first=False):
    """Full 2^N matrix tr_0 [R_{0,1}(y/z_1) ... R_{0,N}(y/z_N)] as a literal
    ordered product of dense (N+1)-site matrices followed by a partial trace.

    Site 0 is auxiliary. By default quantum site k is the first tensor
    factor of the k-th R; ``aux_first`` swaps that placement. Basis states are bit strings, site 1
    most significant.
    """
    N = len(z)
    M = None
    for k in range(1, N + 1):
        R = r_matrix(y / z[k - 1], q)
        E = _embed(R, 0, k, N + 1) if aux_first else _embed(R, k, 0, N + 1)
        M = E if M is None else _mm(M, E)
    dim = 2 ** N
    return [[M[r][c] + M[r + dim][c + dim] for c in range(dim)] for r in range(dim)]


def asm_counts_by_enumeration(n: int) -> list[int]:
    """[A(n,1), ..., A(n,n)] by walking column partial sums row by row.

    Row k of an ASM is the difference of two 0/1 column-sum vectors with k and
    k-1 ones; the difference must read +1, -1, +1, ..., +1 once zeros are dropped.
    """
    def alternating(row):
        nz = [x for x in row if x]
        return bool(nz) and all(x == (1 if i % 2 == 0 else -1) for i, x in enumerate(nz)) and nz[-1] == 1

    states = [s for s in product((0, 1), repeat=n)]
    by_weight = {}
    for s in states:
        by_weight.setdefault(sum(s), []).append(s)
    counts = [0] * n
    for r in range(n):
        first = tuple(1 if c == r else 0 for c in range(n))
        layer = {first: 1}
        for k in range(2, n + 1):
            nxt = {}
            for s, c in layer.items():
                for t in by_weight[k]:
                    if alternating([b - a for a, b in zip(s, t)]):
                        nxt[t] = nxt.get(t, 0) + c
            layer = nxt
        counts[r] = sum(layer.values())
    return counts
