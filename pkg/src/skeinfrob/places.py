"""
Places phi: chi(F) -> C with exact values, and the Frobenius test for the
specialized algebras K_N(F)_phi.

Parameters live in Q(A) (rationals included), so every specialization is an
exact ``CycloScalar``. The torus is parametrized multiplicatively by
(lambda, mu); the annulus by z = phi(T_N(x)) or by q with z = q^N + q^-N.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .annulus import AnnulusSkein, ann_left_matrix, ann_pairing_matrix
from .charring import CharElement, CharFraction, laurent_embed
from .chebyshev import cheb_eval
from .cyclotomic import CycloScalar, a_power, scalar
from .errors import DomainError, NotComputableError
from .linalg import RingMatrix, mat_det
from .pants import pants_pairing_matrix_kronecker
from .torus import torus_pairing_matrix

_PARAMS = {
    "annulus": ("z",),
    "pants": ("z1", "z2", "z3"),
    "torus": ("lambda", "mu"),
    "ptorus": ("lambda", "mu", "w"),
}


@dataclass(frozen=True)
class Place:
    """A place of chi(F) at level N; ``params`` maps parameter names to CycloScalars."""

    surface: str
    N: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.surface not in _PARAMS:
            raise DomainError(f"unknown surface {self.surface!r}")
        p = {k: scalar(self.N, v) for k, v in self.params.items()}
        if self.surface == "annulus" and "z" not in p and "q" in p:
            q = p["q"]
            if q.is_zero():
                raise DomainError("q must be nonzero")
            p["z"] = q**self.N + q.inverse() ** self.N
        missing = [k for k in _PARAMS[self.surface] if k not in p]
        if missing:
            raise DomainError(f"{self.surface} place needs {', '.join(missing)}")
        for k in ("lambda", "mu", "w", "q"):
            if k in p and p[k].is_zero():
                raise DomainError(f"{k} must be nonzero")
        object.__setattr__(self, "params", p)

    def __getitem__(self, name):
        return self.params[name]

    def __hash__(self):
        return hash((self.surface, self.N, tuple(sorted(self.params.items()))))

    def __str__(self):
        return ",".join(f"{k}={v}" for k, v in self.params.items())


def annulus_place(N, z=None, q=None) -> Place:
    if z is None and q is None:
        raise DomainError("give z or q")
    return Place("annulus", N, {"z": z} if z is not None else {"q": q})


def torus_place(N, lam, mu) -> Place:
    return Place("torus", N, {"lambda": lam, "mu": mu})


# -- specialization ----------------------------------------------------------------


def _cheb(N, k, v):
    return cheb_eval(k, v, CycloScalar.one(N)) if k else CycloScalar.one(N)


def specialize_char(u, place: Place) -> CycloScalar:
    """phi(u) for a CharElement (or CharFraction with nonvanishing denominator)."""
    if isinstance(u, CharFraction):
        d = specialize_char(u.den, place)
        if d.is_zero():
            raise ZeroDivisionError("the denominator vanishes at this place")
        return specialize_char(u.num, place) * d.inverse()
    if u.surface != place.surface or u.N != place.N:
        raise DomainError(f"{u.surface}@{u.N} element at a {place.surface}@{place.N} place")
    N, P = u.N, place.params
    if u.surface == "torus":
        return laurent_embed(u).evaluate([P["lambda"], P["mu"]])
    total = CycloScalar.zero(N)
    for key, c in u.terms.items():
        if u.surface == "annulus":
            v = _cheb(N, key, P["z"])
        elif u.surface == "pants":
            v = c.one(N)
            for k, z in zip(key, (P["z1"], P["z2"], P["z3"])):
                v = v * _cheb(N, k, z)
        else:
            k, p, q = key
            # delta -> w + 1/w, so T_{kN}(delta) -> w^{kN} + w^{-kN}
            w = P["w"]
            v = (w ** (k * N) + w.inverse() ** (k * N)) if k else CycloScalar.one(N)
            v = v * laurent_embed(CharElement("torus", N, {(p, q): 1})).evaluate(
                [P["lambda"], P["mu"]])
        total = total + c * v
    return total


def specialize_matrix(m: RingMatrix, place: Place) -> RingMatrix:
    return RingMatrix([[specialize_char(x, place) for x in r] for r in m.rows])


def boundary_value(place: Place) -> CycloScalar:
    """phi(T_N(delta)) = w^N + w^-N on the punctured torus."""
    if place.surface != "ptorus":
        raise DomainError("boundary value is defined for the punctured torus")
    w = place["w"]
    return w**place.N + w.inverse() ** place.N


# -- torus trace coordinates ---------------------------------------------------------


def trace_coordinates(place: Place, power: int = 1) -> tuple:
    """
    (x, y, z) = (-(l + 1/l), -(m + 1/m), -(lm + 1/(lm))) with l = lambda^power,
    m = mu^power. ``power = N`` gives the coordinates seen by threaded curves.
    """
    if place.surface not in ("torus", "ptorus"):
        raise DomainError("trace coordinates belong to the torus")
    lam, mu = place["lambda"] ** power, place["mu"] ** power
    lm = lam * mu
    return (-(lam + lam.inverse()), -(mu + mu.inverse()), -(lm + lm.inverse()))


def locus_value(x, y, z):
    return x * x + y * y + z * z + x * y * z - 4


def on_locus(place: Place, power: int = 1) -> bool:
    return locus_value(*trace_coordinates(place, power)).is_zero()


def _rational_sqrt(v: Fraction):
    if v < 0:
        return None
    n, d = v.numerator, v.denominator
    rn, rd = _isqrt(n), _isqrt(d)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt(n):
    r = isqrt(n)
    return r if r * r == n else None


def _lift(t: Fraction):
    # a rational l with -(l + 1/l) = t, when one exists
    s = _rational_sqrt(t * t - 4)
    if s is None:
        raise DomainError(f"trace coordinate {t} has no rational multiplicative lift")
    return (-t + s) / 2


def torus_place_from_traces(N: int, x, y, z) -> Place:
    """
    The torus place with trace coordinates (x, y, z), for rational input whose
    lift stays rational. Raises DomainError off the locus or without an exact lift.
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if x * x + y * y + z * z + x * y * z - 4 != 0:
        raise DomainError("(x, y, z) is not on the character variety of the torus")
    lam = _lift(x)
    mu = _lift(y)
    for m in (mu, 1 / mu):
        if -(lam * m + 1 / (lam * m)) == z:
            return torus_place(N, lam, m)
    raise DomainError("no exact (lambda, mu) for these coordinates")


# -- annulus checks ------------------------------------------------------------------


def annulus_roots_check(N: int, q) -> bool:
    """T_N(zeta q + 1/(zeta q)) = q^N + q^-N for every N-th root of unity zeta = A^{2j}."""
    q = scalar(N, q)
    z = q**N + q.inverse() ** N
    for j in range(N):
        zq = a_power(2 * j, N) * q
        if not (cheb_eval(N, zq + zq.inverse(), CycloScalar.one(N)) - z).is_zero():
            return False
    return True


def left_det_at_place(N: int, k: int, z) -> CycloScalar:
    """det of left multiplication by T_k on the annulus, specialized at T_N(x) = z."""
    if not 1 <= k <= N - 1:
        raise DomainError(f"need 1 <= k <= N-1, got k={k}")
    L = ann_left_matrix(AnnulusSkein.key(N, k))
    return mat_det(specialize_matrix(L, annulus_place(N, z=z)))


# -- Frobenius verdicts ----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    verdict: str  # "frobenius", "degenerate" or "not computable"
    determinant: CycloScalar | None = None
    reason: str = ""

    @property
    def is_frobenius(self) -> bool:
        return self.verdict == "frobenius"

    def __str__(self):
        if self.determinant is None:
            return f"{self.verdict}: {self.reason}" if self.reason else self.verdict
        return f"{self.verdict} (determinant {self.determinant})"


def pairing_matrix(surface: str, N: int) -> RingMatrix:
    if surface == "annulus":
        return ann_pairing_matrix(N)
    if surface == "pants":
        return pants_pairing_matrix_kronecker(N)
    if surface == "torus":
        return torus_pairing_matrix(N)
    raise NotComputableError(f"no pairing matrix for {surface}")


def specialized_frobenius_check(surface: str, N: int, place: Place) -> Verdict:
    """
    Specialize the trace pairing entrywise at ``place`` and take its exact
    determinant: "frobenius" iff nonzero. The punctured torus answers
    "not computable", since its generic pairing is unknown.
    """
    if surface == "ptorus":
        return Verdict(
            "not computable",
            reason="the trace pairing of the punctured torus needs the full product, "
                   "which is not determined",
        )
    if place.surface != surface or place.N != N:
        raise DomainError(f"place is for {place.surface}@{place.N}, not {surface}@{N}")
    det = mat_det(specialize_matrix(pairing_matrix(surface, N), place))
    return Verdict("frobenius" if not det.is_zero() else "degenerate", det)
