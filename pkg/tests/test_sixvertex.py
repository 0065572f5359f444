import random
from functools import reduce

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from polyqkz import qkz, sixvertex as sv
from polyqkz.sampling import GENERIC_Q, random_z
from polyqkz.scalar import DegenerateParameters, q_root_of_unity, rat, scalar_pow
from polyqkz.spinvector import SpinVector, sector_basis
from oracles import dense_transfer
from strategies import positive_rats

OMEGA = q_root_of_unity(1)
QS = list(GENERIC_Q) + [OMEGA, q_root_of_unity(-1)]


def test_rcheck_at_one_is_identity():
    for q in QS:
        assert sv.rcheck_matrix(rat(1), q) == sv.identity(4)


@settings(max_examples=50, deadline=None)
@given(positive_rats, st.sampled_from([OMEGA, q_root_of_unity(-1)]))
def test_a_plus_b_at_cube_root(x, q):
    a, b, c, cp = sv.weights(x, q)
    assert a + b == 1


@settings(max_examples=50, deadline=None)
@given(positive_rats, st.sampled_from(QS))
def test_anisotropy(x, q):
    try:
        d = sv.delta_from_weights(x, q)
    except (DegenerateParameters, ZeroDivisionError):
        return
    assert d == (q + 1 / q) / 2


def test_weight_pole():
    with pytest.raises(DegenerateParameters):
        sv.r_matrix(rat(4), rat(2))  # q - x/q = 0


@settings(max_examples=25, deadline=None)
@given(positive_rats, positive_rats, positive_rats, st.sampled_from(QS))
def test_yang_baxter(x1, x2, x3, q):
    try:
        assert sv.yang_baxter_check(x1, x2, x3, q)
    except DegenerateParameters:
        pass


def test_yang_baxter_equal_arguments():
    assert sv.yang_baxter_check(rat(3), rat(3), rat(3), rat(5, 3))


@settings(max_examples=50, deadline=None)
@given(positive_rats, st.sampled_from(QS))
def test_unitarity(x, q):
    try:
        assert sv.unitarity_check(x, q)
    except DegenerateParameters:
        pass


def _dense_of(N, apply):
    """Matrix of a sector-preserving operator, assembled column by column."""
    dim = 2 ** N
    M = [[rat(0)] * dim for _ in range(dim)]
    for K in range(N + 1):
        for key in sector_basis(N, K):
            col = sum(1 << (N - p) for p in key)
            out = apply(SpinVector(N, K, {key: rat(1)}))
            for k2, v in out.entries.items():
                M[sum(1 << (N - p) for p in k2)][col] += v
    return M


@pytest.mark.parametrize("N,q", [(3, rat(3, 2)), (3, OMEGA), (4, rat(2)), (5, rat(5, 3))])
def test_transfer_matches_dense_product(N, q):
    rng = random.Random(N)
    z = [rat(rng.randint(1, 30), rng.randint(1, 5)) for _ in range(N)]
    y = rat(rng.randint(-30, 30), rng.randint(1, 5))
    expected = dense_transfer(y, z, q, sv.r_matrix)
    assert _dense_of(N, lambda v: sv.transfer_apply(v, y, z, q)) == expected


@pytest.mark.parametrize("N", [3, 4, 5])
@pytest.mark.parametrize("q", [rat(3, 2), OMEGA])
def test_transfer_at_zero(N, q):
    z = [rat(k + 2, k + 1) for k in range(N)]
    for K in range(N + 1):
        lam = sv.t0_eigenvalue(N, K, q)
        for key in sector_basis(N, K):
            v = SpinVector(N, K, {key: rat(1)})
            assert sv.transfer_apply(v, rat(0), z, q) == v.scaled(lam)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_t0_eigenvalue_one_at_omega(n):
    for sign in (1, -1):
        assert sv.t0_eigenvalue(2 * n + 1, n, q_root_of_unity(sign)) == 1


def test_commuting_transfer_full():
    z = [rat(2), rat(7, 3), rat(1, 5)]
    assert sv.commuting_transfer_check(rat(3, 4), rat(-5), z, rat(3, 2))
    assert sv.commuting_transfer_check(rat(3, 4), rat(3, 4), z, rat(3, 2))


def test_commuting_transfer_omega():
    rng = random.Random(5)
    z = [rat(rng.randint(1, 40), rng.randint(1, 6)) for _ in range(5)]
    v = SpinVector(5, 2, {k: rat(rng.randint(-9, 9)) for k in sector_basis(5, 2)})
    assert sv.commuting_transfer_check(rat(2, 3), rat(-7, 2), z, OMEGA, v)


def _pauli_xxz(N, delta):
    sx = sp.Matrix([[0, 1], [1, 0]])
    sy = sp.Matrix([[0, -sp.I], [sp.I, 0]])
    sz = sp.Matrix([[1, 0], [0, -1]])  # basis (up, down)
    one = sp.eye(2)

    def site_op(ops):
        return reduce(lambda a, b: sp.kronecker_product(a, b), ops)

    H = sp.zeros(2 ** N, 2 ** N)
    for i in range(N):
        j = (i + 1) % N
        for s, c in ((sx, 1), (sy, 1), (sz, delta)):
            ops = [one] * N
            ops[i], ops[j] = s, s
            H += c * site_op(ops)
    return -H / 2


@pytest.mark.parametrize("N", [3, 4])
def test_xxz_matches_pauli_form(N):
    delta = sp.Rational(-1, 2)
    H = _pauli_xxz(N, delta)
    ours = _dense_of(N, lambda v: sv.xxz_apply(v, rat(-1, 2)))
    dim = 2 ** N
    for r in range(dim):
        for c in range(dim):
            assert sp.Rational(str(ours[r][c])) == H[r, c]


def test_xxz_preserves_sector():
    v = SpinVector(5, 2, {(1, 3): rat(1), (2, 5): rat(-3)})
    out = sv.xxz_apply(v, rat(7, 3))
    assert out.K == 2 and all(len(k) == 2 for k in out.entries)


@pytest.mark.parametrize("n", range(1, 5))
def test_xxz_ground_state(n):
    N = 2 * n + 1
    v = qkz.table_as_spinvector(n, qkz.psi_table(n, tau=1))
    assert sv.xxz_apply(v, rat(-1, 2)) == v.scaled(rat(-3 * N, 4))


@pytest.mark.parametrize("q", [rat(3, 2), rat(7, 4)])
def test_scattering_generic_q(q):
    N = 5
    rng = random.Random(21)
    s = scalar_pow(q, 6)
    for _ in range(20):
        z = random_z(rng, N, q)
        try:
            for i in range(1, N + 1):
                zs = list(z)
                zs[i - 1] = s * zs[i - 1]
                qkz.check_admissible(zs, q)
        except DegenerateParameters:
            continue
        break
    psi = qkz.psi_vector_inhom(z, q)
    for i in range(1, N + 1):
        zs = list(z)
        zs[i - 1] = s * zs[i - 1]
        assert sv.scattering_apply(psi, i, z, q) == qkz.psi_vector_inhom(zs, q)


def test_scattering_inverse():
    q = rat(5, 3)
    z = [rat(2), rat(9, 4), rat(1, 3), rat(7), rat(5, 6)]
    v = SpinVector(5, 2, {k: rat(i + 1) for i, k in enumerate(sector_basis(5, 2))})
    for i in range(1, 6):
        assert sv.scattering_inverse_apply(sv.scattering_apply(v, i, z, q), i, z, q) == v


@pytest.mark.parametrize("N", [3, 5, 7])
def test_scattering_equals_transfer_at_omega(N):
    q = OMEGA
    z = random_z(random.Random(N + 40), N, q)
    K = (N - 1) // 2
    for key in sector_basis(N, K):
        v = SpinVector(N, K, {key: rat(1)})
        for i in (1, N // 2 + 1, N):
            assert sv.scattering_apply(v, i, z, q) == sv.transfer_apply(v, z[i - 1], z, q)


@pytest.mark.parametrize("N", [3, 5])
def test_eigenvector_at_omega(N):
    q = OMEGA
    z = random_z(random.Random(N + 9), N, q)
    psi = qkz.psi_vector_inhom(z, q)
    for y in [rat(0), rat(5, 7), rat(-3), z[0]]:
        assert sv.transfer_apply(psi, y, z, q) == psi
    for i in range(1, N + 1):
        assert sv.scattering_apply(psi, i, z, q) == psi
        j = i % N + 1
        assert sv.scattering_apply(sv.scattering_inverse_apply(psi, j, z, q), i, z, q) == psi


def test_rotation_and_twist():
    v = SpinVector(3, 1, {(1,): rat(1), (2,): rat(2), (3,): rat(3)})
    r = sv.rotate_apply(v)
    assert r[(3,)] == 1 and r[(1,)] == 2 and r[(2,)] == 3
    assert sv.rotate_inverse_apply(r) == v
    q = rat(2)
    d = sv.d_apply(v, q)
    assert d[(3,)] == 3 * q ** 6 and d[(1,)] == q ** 3
    assert sv.d_inverse_apply(d, q) == v


def test_auxiliary_first_placement_is_not_the_eigen_operator():
    # the two tensor placements of the auxiliary space give different operators,
    # and only the site-first one fixes Psi at q = omega
    N, q = 5, OMEGA
    z = random_z(random.Random(77), N, q)
    psi = qkz.psi_vector_inhom(z, q)
    y = rat(5, 7)
    other = dense_transfer(y, z, q, sv.r_matrix, aux_first=True)
    dim = 2 ** N
    vec = [rat(0)] * dim
    for key, val in psi.entries.items():
        vec[sum(1 << (N - p) for p in key)] = val
    image = [sum((other[r][c] * vec[c] for c in range(dim) if vec[c]), rat(0)) for r in range(dim)]
    assert image != vec
    assert sv.transfer_apply(psi, y, z, q) == psi
