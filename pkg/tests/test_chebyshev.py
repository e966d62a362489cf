from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skeinfrob import (
    IntPolynomial, cheb_T, cheb_eval, from_cheb_basis, to_cheb_basis, verify_cheb_identities,
    x_power_relation,
)
from skeinfrob.chebyshev import x_power_relation_terms

x = IntPolynomial.x()


def test_first_polynomials():
    assert cheb_T(0) == IntPolynomial.constant(2)
    assert cheb_T(1) == x
    assert cheb_T(2) == x**2 - 2
    assert cheb_T(5) == x**5 - 5 * x**3 + 5 * x


@pytest.mark.parametrize("k", range(1, 20))
def test_monic_of_degree_k(k):
    t = cheb_T(k)
    assert t.degree() == k and t.leading_coefficient() == 1


def test_to_cheb_basis_examples():
    assert to_cheb_basis(x**3) == {3: 1, 1: 3}
    assert to_cheb_basis(IntPolynomial.constant(2)) == {0: 1}
    assert to_cheb_basis(cheb_T(7)) == {7: 1}


def test_identity_examples():
    assert verify_cheb_identities(2, 3)
    assert cheb_T(2) * cheb_T(3) == cheb_T(5) + cheb_T(1)
    assert cheb_T(0) * cheb_T(5) == cheb_T(5) + cheb_T(5)
    assert cheb_T(3) * cheb_T(3) == cheb_T(6) + cheb_T(0)


def test_x_power_relation_examples():
    assert x_power_relation(3) == cheb_T(3) + 3 * x
    assert x_power_relation(5) == cheb_T(5) + 5 * x**3 - 5 * x
    assert x_power_relation(7) == x**7
    assert x_power_relation_terms(3) == {1: Fraction(3)}


@given(st.integers(0, 12), st.integers(0, 12))
def test_identities_hold(m, n):
    assert verify_cheb_identities(m, n)
    assert cheb_T(m) * cheb_T(n) == cheb_T(m + n) + cheb_T(abs(m - n))
    assert cheb_T(m)(cheb_T(n)) == cheb_T(m * n)


@given(st.dictionaries(st.integers(0, 12), st.fractions(max_denominator=5).filter(bool),
                       max_size=5))
def test_basis_round_trip(coeffs):
    p = from_cheb_basis(coeffs)
    assert to_cheb_basis(p) == coeffs
    assert from_cheb_basis(to_cheb_basis(p)) == p


@given(st.integers(0, 15), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_cheb_eval_matches_polynomial(k, v):
    assert cheb_eval(k, v, Fraction(1)) == cheb_T(k)(v)
