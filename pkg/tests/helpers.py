"""Random element generators shared by the property tests and the acceptance suite."""
from __future__ import annotations

import random

from hypothesis import strategies as st

from skeinfrob import (
    AnnulusSkein, CharElement, CycloScalar, PantsSkein, PuncturedSkein, TorusSkein, a_power,
)
from skeinfrob.cyclotomic import degree

LEVELS = (3, 5)


def rand_scalar(rng: random.Random, N: int, size=3) -> CycloScalar:
    c = CycloScalar.zero(N)
    for _ in range(rng.randint(1, 2)):
        c = c + a_power(rng.randint(-2 * N, 2 * N), N) * rng.randint(-size, size)
    return c if not c.is_zero() else CycloScalar.one(N)


def rand_torus(rng, N, terms=3, radius=None) -> TorusSkein:
    r = radius or 2 * N
    return TorusSkein(N, {(rng.randint(-r, r), rng.randint(-r, r)): rand_scalar(rng, N)
                          for _ in range(terms)})


def rand_annulus(rng, N, terms=3, top=None) -> AnnulusSkein:
    top = top or 3 * N
    return AnnulusSkein(N, {rng.randint(0, top): rand_scalar(rng, N) for _ in range(terms)})


def rand_pants(rng, N, terms=3, top=None) -> PantsSkein:
    top = top or 2 * N
    return PantsSkein(N, {tuple(rng.randint(0, top) for _ in range(3)): rand_scalar(rng, N)
                          for _ in range(terms)})


def rand_punctured(rng, N, terms=4, basis="delta") -> PuncturedSkein:
    return PuncturedSkein(N, {(rng.randint(0, 2 * N), rng.randint(-2 * N, 2 * N),
                               rng.randint(-2 * N, 2 * N)): rand_scalar(rng, N)
                              for _ in range(terms)}, basis=basis)


def rand_char(rng, surface, N, terms=3, radius=3) -> CharElement:
    def key():
        if surface == "annulus":
            return rng.randint(0, radius)
        if surface == "pants":
            return tuple(rng.randint(0, radius) for _ in range(3))
        return (rng.randint(-radius, radius), rng.randint(-radius, radius))
    return CharElement(surface, N, {key(): rand_scalar(rng, N) for _ in range(terms)})


# -- hypothesis strategies -----------------------------------------------------------------

levels = st.sampled_from(LEVELS)


@st.composite
def scalars(draw, N, small=True):
    bound = 4 if small else 50
    coeffs = draw(st.lists(st.integers(-bound, bound), min_size=degree(N), max_size=degree(N)))
    den = draw(st.integers(1, 3))
    return CycloScalar(N, coeffs, den)


@st.composite
def nonzero_scalars(draw, N):
    c = draw(scalars(N))
    return c if not c.is_zero() else CycloScalar.one(N)


@st.composite
def torus_elements(draw, N, max_terms=3, radius=None):
    r = radius or 2 * N
    keys = draw(st.lists(st.tuples(st.integers(-r, r), st.integers(-r, r)),
                         min_size=1, max_size=max_terms))
    return TorusSkein(N, {k: draw(nonzero_scalars(N)) for k in keys})


@st.composite
def annulus_elements(draw, N, max_terms=3, top=None):
    keys = draw(st.lists(st.integers(0, top or 3 * N), min_size=1, max_size=max_terms))
    return AnnulusSkein(N, {k: draw(nonzero_scalars(N)) for k in keys})


@st.composite
def torus_chars(draw, N, max_terms=4, radius=4):
    keys = draw(st.lists(st.tuples(st.integers(-radius, radius), st.integers(-radius, radius)),
                         min_size=0, max_size=max_terms))
    return CharElement("torus", N, {k: draw(nonzero_scalars(N)) for k in keys})
