"""Six-vertex R-matrix, transfer matrix, scattering matrices and the XXZ chain.

Two-site basis order is up-up, up-down, down-up, down-down (index
2*s1 + s2 with s = 0 for up, 1 for down). Operators act matrix-free on
:class:`~polyqkz.spinvector.SpinVector` sectors.
"""
from __future__ import annotations

from .scalar import DegenerateParameters, rat, scalar_pow
from .spinvector import SpinVector, sector_basis

UP, DOWN = 0, 1


def weights(x, q):
    """Boltzmann weights (a, b, c, c') at spectral parameter x."""
    qi = 1 / q
    den = q - qi * x
    if not den:
        raise DegenerateParameters(f"weights have a pole at x = {x}")
    return (q * x - qi) / den, (x - 1) / den, (q - qi) * x / den, (q - qi) / den


def r_matrix(x, q) -> list[list]:
    a, b, c, cp = weights(x, q)
    z = rat(0)
    return [
        [a, z, z, z],
        [z, b, c, z],
        [z, cp, b, z],
        [z, z, z, a],
    ]


def rcheck_matrix(x, q) -> list[list]:
    """P * R(x); equals the identity at x = 1."""
    r = r_matrix(x, q)
    return [r[0], r[2], r[1], r[3]]


def delta_from_weights(x, q):
    a, b, c, cp = weights(x, q)
    return (a * a + b * b - c * cp) / (2 * a * b)


def matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(p):
            acc = rat(0)
            for k in range(m):
                if Ai[k] and B[k][j]:
                    acc = acc + Ai[k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def identity(n: int) -> list[list]:
    return [[rat(1 if i == j else 0) for j in range(n)] for i in range(n)]


def _embed_two_site(M, i: int, j: int, nsites: int) -> list[list]:
    """Dense 2^nsites matrix acting as M on sites i, j (0-based) and trivially elsewhere."""
    dim = 2 ** nsites
    out = [[rat(0)] * dim for _ in range(dim)]

    def bit(s, k):
        return (s >> (nsites - 1 - k)) & 1

    for col in range(dim):
        cin = 2 * bit(col, i) + bit(col, j)
        for rout in range(4):
            val = M[rout][cin]
            if not val:
                continue
            s = col
            for k, v in ((i, rout >> 1), (j, rout & 1)):
                mask = 1 << (nsites - 1 - k)
                s = (s | mask) if v else (s & ~mask)
            out[s][col] = out[s][col] + val
    return out


def yang_baxter_check(x1, x2, x3, q) -> bool:
    """R12(x1/x2) R13(x1/x3) R23(x2/x3) == R23 R13 R12 on three sites."""
    R12 = _embed_two_site(r_matrix(x1 / x2, q), 0, 1, 3)
    R13 = _embed_two_site(r_matrix(x1 / x3, q), 0, 2, 3)
    R23 = _embed_two_site(r_matrix(x2 / x3, q), 1, 2, 3)
    lhs = matmul(matmul(R12, R13), R23)
    rhs = matmul(matmul(R23, R13), R12)
    return lhs == rhs


def unitarity_check(x, q) -> bool:
    """Rcheck(x) Rcheck(1/x) == 1."""
    return matmul(rcheck_matrix(x, q), rcheck_matrix(1 / x, q)) == identity(4)


# --------------------------------------------------------------------------
# matrix-free operators on sectors
# --------------------------------------------------------------------------

def _spins(key, N):
    s = [UP] * (N + 1)
    for p in key:
        s[p] = DOWN
    return s


def _key(spins, N):
    return tuple(i for i in range(1, N + 1) if spins[i] == DOWN)


def two_site_apply(v: SpinVector, i: int, j: int, M) -> SpinVector:
    """Apply a 4x4 matrix M to sites i, j (1-based); M must conserve magnetization."""
    N = v.N
    out: dict = {}
    for key, val in v.entries.items():
        if not val:
            continue
        s = _spins(key, N)
        cin = 2 * s[i] + s[j]
        for rout in range(4):
            m = M[rout][cin]
            if not m:
                continue
            t = list(s)
            t[i], t[j] = rout >> 1, rout & 1
            k = _key(t, N)
            if len(k) != v.K:
                raise ValueError("operator does not conserve magnetization")
            out[k] = out.get(k, 0) + m * val
    return SpinVector(N, v.K, out)


def rcheck_apply(v: SpinVector, i: int, x, q) -> SpinVector:
    """Rcheck_{i,i+1}(x) v."""
    return two_site_apply(v, i, i + 1, rcheck_matrix(x, q))


def rotate_apply(v: SpinVector) -> SpinVector:
    """Left rotation sigma: v_1 x v_2 x ... x v_N -> v_2 x ... x v_N x v_1."""
    N = v.N
    out = {}
    for key, val in v.entries.items():
        out[tuple(sorted(p - 1 if p > 1 else N for p in key))] = val
    return SpinVector(N, v.K, out)


def d_apply(v: SpinVector, q) -> SpinVector:
    """The twist on the last site: q^(3n+3) if site N is down, q^(3n) if up (N = 2n+1)."""
    N = v.N
    n = (N - 1) // 2
    up = scalar_pow(q, 3 * n)
    down = scalar_pow(q, 3 * n + 3)
    return SpinVector(N, v.K, {k: (down if k and k[-1] == N else up) * val
                               for k, val in v.entries.items()})


def transfer_apply(v: SpinVector, y, z, q) -> SpinVector:
    """T(y | z) v with T = tr_0 R_{0,1}(y/z_1) ... R_{0,N}(y/z_N).

    In R_{0,i} the quantum site i is the first tensor factor of the 4x4
    matrix and the auxiliary space the second; this is the placement under
    which S_i(z) = T(z_i | z) at q^3 = 1.

    The auxiliary index is threaded through the sites; states are keyed by
    (initial aux, current aux, partially rewritten configuration). With
    current aux a, next aux a', incoming site value nu and outgoing mu, the
    weight read off is R[(a', nu), (a, mu)].
    """
    N = v.N
    if len(z) != N:
        raise ValueError("need one spectral parameter per site")
    mats = [r_matrix(y / zi, q) for zi in z]
    states: dict = {}
    for key, val in v.entries.items():
        if not val:
            continue
        s = tuple(_spins(key, N)[1:])
        for a0 in (UP, DOWN):
            k = (a0, a0, s)
            states[k] = states.get(k, 0) + val
    for site in range(N):
        R = mats[site]
        nxt: dict = {}
        for (a0, a, s), val in states.items():
            nu = s[site]
            for alpha_next in (UP, DOWN):
                row = R[2 * alpha_next + nu]
                for mu in (UP, DOWN):
                    w = row[2 * a + mu]
                    if not w:
                        continue
                    t = s[:site] + (mu,) + s[site + 1:]
                    k = (a0, alpha_next, t)
                    nxt[k] = nxt.get(k, 0) + w * val
        states = nxt
    out: dict = {}
    for (a0, a, s), val in states.items():
        if a != a0:
            continue
        key = tuple(i + 1 for i, x in enumerate(s) if x == DOWN)
        out[key] = out.get(key, 0) + val
    return SpinVector(N, v.K, out)


def t0_eigenvalue(N: int, K: int, q):
    """(-1)^N (q^(-2N+K) + q^(-N-K)): T(0|z) on the K-down sector."""
    sign = -1 if N % 2 else 1
    return sign * (scalar_pow(q, -2 * N + K) + scalar_pow(q, -N - K))


def commuting_transfer_check(y1, y2, z, q, v: SpinVector | None = None) -> bool:
    """T(y1) T(y2) v == T(y2) T(y1) v; with v omitted, every basis vector of every sector."""
    if v is not None:
        a = transfer_apply(transfer_apply(v, y2, z, q), y1, z, q)
        b = transfer_apply(transfer_apply(v, y1, z, q), y2, z, q)
        return a == b
    N = len(z)
    for K in range(N + 1):
        for key in sector_basis(N, K):
            if not commuting_transfer_check(y1, y2, z, q, SpinVector(N, K, {key: rat(1)})):
                return False
    return True


def xxz_apply(v: SpinVector, delta) -> SpinVector:
    """H = -1/2 sum_i [sx sx + sy sy + delta sz sz], periodic."""
    N = v.N
    half_delta = rat(delta) / 2
    out: dict = {}
    for key, val in v.entries.items():
        if not val:
            continue
        s = _spins(key, N)
        diag = rat(0)
        for i in range(1, N + 1):
            j = i % N + 1
            if s[i] == s[j]:
                diag -= half_delta
            else:
                diag += half_delta
                t = list(s)
                t[i], t[j] = t[j], t[i]
                k = _key(t, N)
                out[k] = out.get(k, 0) - val
        out[key] = out.get(key, 0) + diag * val
    return SpinVector(N, v.K, out)


def scattering_apply(v: SpinVector, i: int, z, q) -> SpinVector:
    """S_i(z) v = Rc_{i,i+1}(s z_i/z_{i+1})...Rc_{N-1,N}(s z_i/z_N) D sigma Rc_{1,2}(z_i/z_1)...Rc_{i-1,i}(z_i/z_{i-1}) v."""
    N = v.N
    s = scalar_pow(q, 6)
    zi = z[i - 1]
    w = v
    for k in range(i - 1, 0, -1):
        w = rcheck_apply(w, k, zi / z[k - 1], q)
    w = d_apply(rotate_apply(w), q)
    for k in range(N - 1, i - 1, -1):
        w = rcheck_apply(w, k, s * zi / z[k], q)
    return w


def scattering_inverse_apply(v: SpinVector, i: int, z, q) -> SpinVector:
    """S_i(z)^{-1} v, using Rcheck(x)^{-1} = Rcheck(1/x)."""
    N = v.N
    s = scalar_pow(q, 6)
    zi = z[i - 1]
    w = v
    for k in range(i, N):
        w = rcheck_apply(w, k, z[k] / (s * zi), q)
    w = rotate_inverse_apply(d_inverse_apply(w, q))
    for k in range(1, i):
        w = rcheck_apply(w, k, z[k - 1] / zi, q)
    return w


def rotate_inverse_apply(v: SpinVector) -> SpinVector:
    N = v.N
    return SpinVector(N, v.K, {tuple(sorted(p + 1 if p < N else 1 for p in key)): val
                               for key, val in v.entries.items()})


def d_inverse_apply(v: SpinVector, q) -> SpinVector:
    return d_apply(v, 1 / q)
