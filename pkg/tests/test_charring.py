import pytest
from hypothesis import given, strategies as st

from helpers import levels, torus_chars
from skeinfrob import (
    CharElement, CharFraction, DomainError, LaurentPoly, LevelMismatchError, TorusSkein,
    canonical_pair, char_is_zero, laurent_embed,
)
from skeinfrob.charring import LAURENT_NAMES


def lam_mu(N, terms):
    return LaurentPoly(2, N, terms, LAURENT_NAMES)


def test_canonical_pair():
    assert canonical_pair(-1, 2) == (1, -2)
    assert canonical_pair(0, -3) == (0, 3)
    assert canonical_pair(2, -1) == (2, -1)


def test_torus_product_example():
    N = 3
    u = CharElement.key("torus", N, (1, 0)) * CharElement.key("torus", N, (0, 1))
    assert u == -CharElement.key("torus", N, (1, 1)) - CharElement.key("torus", N, (1, -1))


def test_zero_pair_is_twice_unit():
    N = 3
    assert CharElement.key("torus", N, (1, 0)) * CharElement.key("torus", N, (-1, 0)) == \
        CharElement.key("torus", N, (2, 0)) + CharElement.unit("torus", N, 2)


def test_annulus_product_example():
    N = 5
    t = CharElement.key("annulus", N, 1)
    assert t * t == CharElement.key("annulus", N, 2) + CharElement.unit("annulus", N, 2)


def test_unit_law():
    v = CharElement.key("torus", 5, (2, -1), 3)
    assert CharElement.unit("torus", 5) * v == v


def test_zero_examples():
    N = 3
    a, b = CharElement.key("torus", N, (1, 0)), CharElement.key("torus", N, (0, 1))
    assert char_is_zero(CharElement.zero("torus", N))
    assert char_is_zero(a - a)
    assert not char_is_zero(a + b)


def test_embed_examples():
    N = 3
    assert laurent_embed(CharElement.unit("torus", N)) == lam_mu(N, {(0, 0): 1})
    s = TorusSkein.key(N, (1, 0))
    assert laurent_embed(s) == lam_mu(N, {(1, 0): -1, (-1, 0): -1})
    s2 = TorusSkein.key(N, (2, 0))
    assert laurent_embed(s2) == lam_mu(N, {(2, 0): 1, (-2, 0): 1})
    assert laurent_embed(s * s) == laurent_embed(s) ** 2


def test_embed_rejects_annulus():
    with pytest.raises(DomainError):
        laurent_embed(CharElement.unit("annulus", 3))


def test_surface_mismatch():
    with pytest.raises(LevelMismatchError):
        CharElement.unit("torus", 3) + CharElement.unit("torus", 5)


@given(st.data())
def test_embed_is_ring_homomorphism(data):
    N = data.draw(levels)
    u, v = data.draw(torus_chars(N)), data.draw(torus_chars(N))
    assert laurent_embed(u * v) == laurent_embed(u) * laurent_embed(v)
    assert laurent_embed(u + v) == laurent_embed(u) + laurent_embed(v)
    assert char_is_zero(u - v) == laurent_embed(u - v).is_zero()


@given(st.data())
def test_product_commutative_associative(data):
    N = data.draw(levels)
    u, v, w = (data.draw(torus_chars(N, max_terms=3, radius=3)) for _ in range(3))
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)


def test_fraction_examples():
    N = 3
    u = CharElement.key("torus", N, (1, 0)) + 1
    s = CharElement.key("torus", N, (0, 1), 2) - 3
    t = CharElement.key("torus", N, (1, 1))
    assert (CharFraction(u, s) + CharFraction(-u, s)).is_zero()
    assert CharFraction(u, s) * CharFraction(s, u) == CharFraction(CharElement.unit("torus", N))
    assert CharFraction(u * t, s * t) == CharFraction(u, s)
    with pytest.raises(ZeroDivisionError):
        CharFraction(u, CharElement.zero("torus", N))


@given(st.data())
def test_fraction_field_laws(data):
    N = 3
    a, b, c, d = (data.draw(torus_chars(N, max_terms=2, radius=2)) for _ in range(4))
    if b.is_zero() or d.is_zero():
        return
    x, y = CharFraction(a, b), CharFraction(c, d)
    assert x + y == y + x
    assert x * y == CharFraction(a * c, b * d)
    assert (x - x).is_zero()
    if not a.is_zero():
        assert x * (1 / x) == CharFraction(CharElement.unit("torus", N))
