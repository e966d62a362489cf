import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import rand_char
from skeinfrob import (
    CharElement, DomainError, NotComputableError, Place, a_power, annulus_place,
    annulus_roots_check, left_det_at_place, on_locus, scalar, specialize_char,
    specialized_frobenius_check, torus_place, torus_place_from_traces, trace_coordinates,
)
from skeinfrob.places import pairing_matrix


def test_annulus_specialization():
    N = 5
    pl = annulus_place(N, z=Fraction(3, 2))
    assert specialize_char(CharElement.key("annulus", N, 1), pl) == Fraction(3, 2)
    assert specialize_char(CharElement.unit("annulus", N), pl) == 1
    # T_{2N} = T_2(T_N)
    assert specialize_char(CharElement.key("annulus", N, 2), pl) == Fraction(9, 4) - 2


def test_torus_specialization():
    N = 3
    pl = torus_place(N, 2, 3)
    assert specialize_char(CharElement.key("torus", N, (1, 0)), pl) == -(8 + Fraction(1, 8))
    assert specialize_char(CharElement.unit("torus", N), pl) == 1


@given(st.integers(0, 10 ** 6))
def test_specialization_is_homomorphism(seed):
    rng = random.Random(seed)
    N = rng.choice((3, 5))
    cases = [
        ("torus", torus_place(N, Fraction(rng.randint(1, 5), rng.randint(1, 5)),
                              a_power(rng.randint(0, 2 * N), N))),
        ("annulus", annulus_place(N, z=Fraction(rng.randint(-9, 9), rng.randint(1, 4)))),
        ("pants", Place("pants", N, {"z1": rng.randint(-3, 3), "z2": 1, "z3": a_power(1, N)})),
    ]
    for surface, pl in cases:
        u, v = rand_char(rng, surface, N, 2, 2), rand_char(rng, surface, N, 2, 2)
        assert specialize_char(u * v, pl) == specialize_char(u, pl) * specialize_char(v, pl)
        assert specialize_char(u + v, pl) == specialize_char(u, pl) + specialize_char(v, pl)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool),
       st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool))
def test_trace_coordinates_on_locus(lam, mu):
    pl = torus_place(3, lam, mu)
    assert on_locus(pl)
    assert on_locus(pl, power=3)


def test_trace_coordinate_input_round_trip():
    pl = torus_place(3, 2, 3)
    x, y, z = (c.rational_value() for c in trace_coordinates(pl))
    back = torus_place_from_traces(3, x, y, z)
    assert trace_coordinates(back) == trace_coordinates(pl)
    with pytest.raises(DomainError):
        torus_place_from_traces(3, 0, 0, 0)


@pytest.mark.parametrize("q", [2, Fraction(1, 3), -5])
def test_annulus_roots(q):
    assert annulus_roots_check(3, q)
    assert annulus_roots_check(5, q)
    assert annulus_roots_check(3, a_power(1, 3) * q)


def test_frobenius_examples():
    v = specialized_frobenius_check("annulus", 3, annulus_place(3, z=0))
    assert v.verdict == "frobenius" and v.determinant == 16
    for N in (3, 5, 7):
        v = specialized_frobenius_check("annulus", N, annulus_place(N, z=2))
        assert v.verdict == "degenerate" and v.determinant.is_zero()
    v = specialized_frobenius_check("torus", 3, torus_place(3, 2, 3))
    assert v.is_frobenius


def test_annulus_specialized_determinant_values():
    # 4 (4 - z^2)^((N-1)/2)
    for N in (3, 5):
        for z in range(-3, 4):
            v = specialized_frobenius_check("annulus", N, annulus_place(N, z=z))
            assert v.determinant == 4 * (4 - z * z) ** ((N - 1) // 2)


def test_torus_degenerate_at_unit_lambda():
    # lambda = 1 gives x = -2
    v = specialized_frobenius_check("torus", 3, torus_place(3, 1, 3))
    assert v.verdict == "degenerate"


def test_pants_places():
    N = 3
    good = Place("pants", N, {"z1": 0, "z2": 1, "z3": 3})
    assert specialized_frobenius_check("pants", N, good).is_frobenius
    bad = Place("pants", N, {"z1": 0, "z2": -2, "z3": 3})
    assert specialized_frobenius_check("pants", N, bad).verdict == "degenerate"


def test_punctured_not_computable():
    v = specialized_frobenius_check("ptorus", 3, None)
    assert v.verdict == "not computable" and v.determinant is None
    with pytest.raises(NotComputableError):
        pairing_matrix("ptorus", 3)


def test_punctured_boundary_specialization():
    N = 3
    pl = Place("ptorus", N, {"lambda": 2, "mu": 3, "w": 2})
    u = CharElement.key("ptorus", N, (1, 0, 0))
    assert specialize_char(u, pl) == scalar(N, 8 + Fraction(1, 8))


def test_left_det_examples():
    assert left_det_at_place(5, 1, 7) == 7
    assert left_det_at_place(3, 1, 0) == 0
    z = Fraction(5, 3)
    assert left_det_at_place(3, 2, z) == z * z - 2
    with pytest.raises(DomainError):
        left_det_at_place(3, 3, 1)


def test_place_validation():
    with pytest.raises(DomainError):
        torus_place(3, 0, 1)
    with pytest.raises(DomainError):
        Place("torus", 3, {"lambda": 2})
    assert annulus_place(3, q=2)["z"] == 8 + Fraction(1, 8)
