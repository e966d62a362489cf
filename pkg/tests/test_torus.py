import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import levels, rand_torus, torus_elements
from skeinfrob import (
    CharElement, CharFraction, LevelMismatchError, TorusSkein, a_power, centrality_check,
    certify_C_basis, char_to_torus, identity_matrix, laurent_embed, mat_det, torus_B,
    torus_Bprime, torus_expand_cleared, torus_invert, torus_left_matrix, torus_pairing_det,
    torus_pairing_det_block_form, torus_pairing_det_closed_form, torus_pairing_matrix,
    torus_reduce_to_B, torus_reduce_to_Bprime, torus_reduce_to_C, torus_round_trip,
    torus_thread, torus_trace, torus_trace_matrix, verify_identities,
)
from skeinfrob import torus as tor

K = TorusSkein.key


def C(N, p, q, c=1):
    return CharElement.key("torus", N, (p, q), c)


def test_product_examples():
    N = 3
    A = lambda k: a_power(k, N)  # noqa: E731
    assert K(N, (1, 0)) * K(N, (0, 1)) == K(N, (1, 1), A(1)) + K(N, (1, -1), A(-1))
    assert K(N, (0, 1)) * K(N, (1, 0)) == K(N, (1, 1), A(-1)) + K(N, (1, -1), A(1))
    assert K(N, (1, 0)) * K(N, (1, 0)) == K(N, (2, 0)) + TorusSkein.unit(N, 2)


def test_canonical_keys():
    assert K(3, (-1, -2)) == K(3, (1, 2))
    assert K(3, (0, -1)) == K(3, (0, 1))
    assert TorusSkein.curve(3, 0, 0) == TorusSkein.unit(3, 2)
    assert K(3, (0, 0)) == TorusSkein.unit(3)


def test_level_mismatch():
    with pytest.raises(LevelMismatchError):
        K(3, (1, 0)) * K(5, (1, 0))


def test_thread_and_centrality():
    N = 3
    assert torus_thread(K(N, (1, 0))) == K(N, (N, 0))
    assert torus_thread(TorusSkein.unit(N)) == TorusSkein.unit(N)
    assert torus_thread(K(N, (1, 1)) + K(N, (2, 0))) == K(N, (N, N)) + K(N, (2 * N, 0))
    assert centrality_check(K(N, (N, 0)), K(N, (0, 1)))
    assert not centrality_check(K(N, (1, 0)), K(N, (0, 1)))
    assert centrality_check(TorusSkein.unit(N), K(N, (2, -1)))


@given(st.data())
def test_threaded_elements_are_central(data):
    N = data.draw(levels)
    c = torus_thread(data.draw(torus_elements(N, 2, 2)))
    v = data.draw(torus_elements(N))
    assert centrality_check(c, v)


@given(st.data())
def test_product_associative(data):
    N = data.draw(levels)
    u, v, w = (data.draw(torus_elements(N, 2)) for _ in range(3))
    assert (u * v) * w == u * (v * w)


@pytest.mark.parametrize("N", [3, 5])
def test_identity_suite(N):
    checks = verify_identities(N)
    assert checks and all(c.ok for c in checks)


def test_B_sets():
    assert torus_B(3) == [(0, 0), (0, 1), (0, 2), (1, -1), (1, 0), (1, 1), (1, 2), (1, 3),
                          (2, -1), (2, 0), (2, 1), (2, 2), (3, 1)]
    assert torus_Bprime(3) == [(p, q) for p in range(3) for q in range(3)]
    assert len(torus_Bprime(5)) == 25


def test_rule_step1_first_coordinate():
    r = tor._rule(3, 4, 0)
    assert r.name == "step1-first-coordinate"
    assert tor.verify_rule(3, r)


def test_reduce_to_B_examples():
    N = 3
    assert torus_reduce_to_B(K(N, (1, 2))) == {(1, 2): C(N, 0, 0)}
    d = torus_reduce_to_B(K(N, (4, 0)))
    assert d == {(1, 0): C(N, 1, 0), (2, 0): -C(N, 0, 0)}
    # A^3 = -1 and A^-6 = 1 at level 3
    d = torus_reduce_to_B(K(N, (1, -3)))
    assert d == {(1, 0): -C(N, 0, 1), (1, 3): -C(N, 0, 0)}


def test_reduce_to_Bprime_examples():
    N = 3
    r = torus_reduce_to_Bprime(K(N, (1, 2)))
    assert all((c.den.is_scalar() for c in r.coeffs))
    r = torus_reduce_to_Bprime(K(N, (1, -1)))
    den = C(N, 0, 0, 2) - C(N, 2, 2)
    nonzero = {k for k, c in zip(r.basis, r.coeffs) if not c.is_zero()}
    assert nonzero == {(1, 2), (2, 1)}
    assert r[(1, 2)] == CharFraction(C(N, 2, 1) - C(N, 0, 1), den)
    assert torus_round_trip(K(N, (3, 1)))


@settings(max_examples=20)
@given(st.data())
def test_round_trip(data):
    N = data.draw(levels)
    u = data.draw(torus_elements(N, 2, 3 * N))
    assert torus_round_trip(u)


def test_left_matrix_unit_is_identity():
    L = torus_left_matrix(TorusSkein.unit(3))
    assert L == identity_matrix(9, CharFraction(C(3, 0, 0)))


def test_central_left_matrices_commute():
    N = 3
    a = torus_left_matrix(K(N, (N, 0)))
    b = torus_left_matrix(K(N, (1, 1)))
    assert a @ b == b @ a


def test_trace_examples():
    N = 3
    assert torus_trace(K(N, (1, 2))).is_zero()
    assert torus_trace(K(N, (N, N))) == C(N, 1, 1)
    assert torus_trace(TorusSkein.unit(N)) == C(N, 0, 0)
    assert torus_trace_matrix(K(N, (1, 0))).is_zero()


def test_trace_matches_matrix_trace_random():
    rng = random.Random(31)
    for N in (3, 5):
        for _ in range(8):
            u = rand_torus(rng, N, terms=2)
            assert torus_trace_matrix(u) == torus_trace(u)


def test_trace_cyclic_random():
    rng = random.Random(32)
    for _ in range(20):
        u, v = rand_torus(rng, 3), rand_torus(rng, 3)
        assert torus_trace(u * v) == torus_trace(v * u)


def test_pairing_entries_level3():
    N = 3
    m = torus_pairing_matrix(N)
    order = torus_Bprime(N)
    assert m[order.index((1, 1)), order.index((2, 2))] == C(N, 1, 1)
    assert m[0, 0] == C(N, 0, 0, 4)
    assert m == tor.torus_pairing_matrix_rules(N)


@pytest.mark.parametrize("N", [3, 5])
def test_pairing_det_block_form(N):
    assert torus_pairing_det(N) == torus_pairing_det_block_form(N)
    assert torus_pairing_det(N, method="gauss") == torus_pairing_det(N)


@pytest.mark.parametrize("N", [3, 5])
def test_pairing_det_is_nonzero(N):
    assert not laurent_embed(torus_pairing_det(N)).is_zero()


def test_block_form_squares_the_last_factor():
    N = 3
    one, nn = C(N, 0, 0, 2), C(N, 1, 1)
    ratio = torus_pairing_det_block_form(N) * 1
    closed = torus_pairing_det_closed_form(N)
    assert ratio == closed * (one * one - nn * nn)


def test_basis_C():
    N = 3
    r = tor.basis_C_expand(N, 1, 1)
    assert r[(1, 1)] == CharFraction(C(N, 0, 0, a_power(1, N)))
    assert tor.basis_C_expand(N, 0, 0)[(0, 0)] == CharFraction(C(N, 0, 0, 4))
    assert certify_C_basis(N) != 0


def test_reduce_to_C_round_trip():
    N = 3
    u = K(N, (1, 2)) + K(N, (2, 0), a_power(1, N))
    total = TorusSkein.zero(N)
    common = CharElement.unit("torus", N)
    parts = torus_reduce_to_C(u)
    for _, c in parts:
        common = common * c.den
    for (p, q), c in parts:
        f = (c * common).reduced()
        assert f.den.is_scalar()
        total = total + char_to_torus(f.num) * tor.basis_C_element(N, p, q)
    assert total == u * char_to_torus(common)


def test_invert_examples():
    N = 3
    inv = torus_invert(TorusSkein.unit(N))
    assert inv[(0, 0)] == CharFraction(C(N, 0, 0))
    inv = torus_invert(K(N, (N, 0)))
    assert inv[(0, 0)] == CharFraction(C(N, 0, 0), C(N, 1, 0))
    u = K(N, (1, 0))
    S, D = torus_expand_cleared(torus_invert(u))
    assert u * S == char_to_torus(D)


def test_left_det_of_curve_nonzero():
    assert not mat_det(torus_left_matrix(K(3, (1, 0)))).is_zero()
