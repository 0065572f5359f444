from math import comb, gcd
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyqkz import loopmodel as lm
from polyqkz.asm import asm_count
from polyqkz.polyring import TauPoly
from polyqkz.scalar import rat

T = TauPoly.tau()


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def pattern(*arches, size):
    p = [0] * size
    for i, j in arches:
        p[i - 1], p[j - 1] = j, i
    return tuple(p)


@pytest.mark.parametrize("n", range(1, 8))
def test_catalan_count(n):
    pats = lm.enumerate_link_patterns(n)
    assert len(pats) == catalan(n) == len(set(pats))
    assert list(pats) == sorted(pats)
    for p in pats:
        assert lm.is_noncrossing(p)
        assert all((p[i - 1] - i) % 2 for i in range(1, 2 * n + 1))


def test_small_sizes():
    assert lm.enumerate_link_patterns(1) == ((2, 1),)
    assert len(lm.enumerate_link_patterns(3)) == 5
    with pytest.raises(ValueError):
        lm.enumerate_link_patterns(0)


def test_is_noncrossing_rejects_crossing():
    assert not lm.is_noncrossing(pattern((1, 3), (2, 4), size=4))
    assert lm.is_noncrossing(pattern((1, 4), (2, 3), size=4))


def test_e1_example():
    start = pattern((2, 3), (4, 5), (6, 1), size=6)
    out, closed = lm.e_apply(1, start)
    assert out == pattern((1, 2), (3, 6), (4, 5), size=6) and not closed


def test_e_on_existing_arch():
    p = pattern((1, 2), (3, 6), (4, 5), size=6)
    assert lm.e_apply(1, p) == (p, True)
    assert lm.e_apply(4, p) == (p, True)
    q = pattern((2, 3), (4, 5), (6, 1), size=6)
    assert lm.e_apply(6, q) == (q, True)  # wraps around: points 6 and 1


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_e_apply_stays_noncrossing(data):
    n = data.draw(st.integers(1, 6))
    pats = lm.enumerate_link_patterns(n)
    p = data.draw(st.sampled_from(pats))
    i = data.draw(st.integers(1, 2 * n))
    out, closed = lm.e_apply(i, p)
    assert lm.is_noncrossing(out)
    assert out[i - 1] == i % (2 * n) + 1
    assert closed == (out == p and p[i - 1] == i % (2 * n) + 1)


def _apply_word(word, p):
    vec = {p: TauPoly.const(1)}
    for i in reversed(word):
        vec = lm.tl_apply(vec, i, T)
    return vec


@pytest.mark.parametrize("n", [2, 3, 4])
def test_temperley_lieb_relations(n):
    m = 2 * n
    for p in lm.enumerate_link_patterns(n):
        for i in range(1, m + 1):
            e_i = _apply_word([i], p)
            assert _apply_word([i, i], p) == {k: T * v for k, v in e_i.items()}
            for j in (i % m + 1, (i - 2) % m + 1):
                assert _apply_word([i, j, i], p) == e_i
            for j in range(1, m + 1):
                if min((i - j) % m, (j - i) % m) >= 2:
                    assert _apply_word([i, j], p) == _apply_word([j, i], p)


def test_ground_state_small():
    assert list(lm.loop_ground_state(1).entries.values()) == [1]
    xi3 = lm.loop_ground_state(3)
    assert xi3.total() == 7 and min(xi3.entries.values()) == 1


def test_ground_state_n4_partial_sums():
    xi = lm.loop_ground_state(4)
    assert [lm.partial_sum_xi(a, xi) for a in (2, 4, 6, 8)] == [17, 4, 4, 17]


def test_partial_sum_rejects_odd():
    xi = lm.loop_ground_state(2)
    with pytest.raises(ValueError):
        lm.partial_sum_xi(3, xi)


@pytest.mark.parametrize("n", range(1, 7))
def test_ground_state_properties(n):
    xi = lm.loop_ground_state(n)
    vals = list(xi.entries.values())
    assert all(isinstance(v, int) and v > 0 for v in vals)
    assert reduce(gcd, vals) == 1
    assert xi.total() == asm_count(n)
    assert sum(lm.partial_sum_xi(a, xi) for a in range(2, 2 * n + 1, 2)) == asm_count(n)
    for p, v in xi.entries.items():
        assert xi.entries[lm.rotate_pattern(p, 1)] == v
        assert xi.entries[lm.reflect_pattern(p)] == v
    # eigenvector check straight from the e_i action
    image = {}
    for p, v in xi.entries.items():
        for i in range(1, 2 * n + 1):
            out, _ = lm.e_apply(i, p)
            image[out] = image.get(out, 0) + v
    assert image == {p: 2 * n * v for p, v in xi.entries.items()}


@pytest.mark.parametrize("n", range(2, 7))
def test_minimum_on_rainbow_rotations(n):
    xi = lm.loop_ground_state(n)
    rainbow = tuple(2 * n + 1 - i for i in range(1, 2 * n + 1))
    orbit = {lm.rotate_pattern(rainbow, k) for k in range(2 * n)}
    ones = {p for p, v in xi.entries.items() if v == 1}
    assert ones == orbit


def test_rotate_and_reflect():
    p = pattern((1, 2), (3, 6), (4, 5), size=6)
    assert lm.rotate_pattern(p, 1) == pattern((2, 3), (4, 1), (5, 6), size=6)
    assert lm.reflect_pattern(lm.reflect_pattern(p)) == p
    assert lm.rotate_pattern(p, 6) == p


def test_chebyshev_values():
    assert lm.chebyshev_U(-1) == TauPoly()
    assert lm.chebyshev_U(0) == TauPoly.const(1)
    assert lm.chebyshev_U(1) == -T
    assert lm.chebyshev_U(2) == T * T - 1


@settings(max_examples=100, deadline=None)
@given(st.integers(-8, 12), st.sampled_from([rat(2), rat(3, 2), rat(-5, 3), rat(7, 4)]))
def test_chebyshev_q_form(k, q):
    # U_{k-1} = (q^k - q^-k)/(q - q^-1) with tau = -q - 1/q, for every integer k
    tau = -q - 1 / q
    assert lm.chebyshev_U(k - 1)(tau) == (q ** k - q ** (-k)) / (q - 1 / q)


def test_even_openings_examples():
    assert lm.even_openings(pattern((1, 2), (3, 4), (5, 6), size=6)) == 0
    # (6, 1) closes at 6 since pi(6) = 1 < 6, so only 2 and 4 open
    assert lm.openings(pattern((2, 3), (4, 5), (6, 1), size=6)) == [1, 2, 4]
    assert lm.even_openings(pattern((2, 3), (4, 5), (6, 1), size=6)) == 2
    assert lm.openings(pattern((1, 4), (2, 3), (5, 6), size=6)) == [1, 2, 5]


@pytest.mark.parametrize("n", range(2, 6))
def test_coeff_C_parity_sequences(n):
    # b_l in {2l-1, 2l} for l < n, b_n = 2n - 1: C is 0 or 1, and 1 exactly when
    # 2l < pi(2l) iff b_l = 2l for every l < n
    from itertools import product
    for eps in product((0, 1), repeat=n - 1):
        b = tuple(2 * l - 1 + e for l, e in zip(range(1, n), eps)) + (2 * n - 1,)
        for p in lm.enumerate_link_patterns(n):
            c = lm.coeff_C(b, p)
            assert c in (TauPoly(), TauPoly.const(1))
            cond = all((2 * l < p[2 * l - 1]) == (b[l - 1] == 2 * l) for l in range(1, n))
            assert (c == TauPoly.const(1)) == cond


def test_coeff_C_zero_from_deficit():
    # arch (1, 2n) with no b inside gives U_{-n}; a short arch (i, i+1) with no b_l = i gives U_{-1} = 0
    p = pattern((1, 2), (3, 4), size=4)
    assert lm.coeff_C((3, 4), p) == TauPoly()


def test_loop_vector_json():
    import json
    xi = lm.loop_ground_state(3)
    doc = json.loads(xi.to_json())
    assert doc["n"] == 3 and len(doc["patterns"]) == 5 and sum(doc["values"]) == 7
    assert doc["patterns"] == [list(p) for p in lm.enumerate_link_patterns(3)]
