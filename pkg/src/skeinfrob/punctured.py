"""
The once-punctured torus, modelled only as far as its central structure
pins it down.

Keys are (k, p, q) meaning delta^k (p,q)_T in the delta-power basis, or
eta^k (p,q)_T in the eta-power basis, where eta = delta + (A^2 + A^-2). The
torus part follows the torus conventions: (0,0) is the empty skein.

The product of two skeins with nontrivial torus parts involves a correction
term that is only bounded, never determined, so multiplication is limited to
the case where one factor is a polynomial in the boundary curve.
"""
from __future__ import annotations

from math import comb

from .charring import CharElement, canonical_pair, format_terms
from .chebyshev import IntPolynomial, cheb_T, x_power_relation_terms
from .cyclotomic import CycloScalar, quantum_loop, scalar
from .errors import DomainError, NotComputableError
from .skein import SkeinElement
from .torus import TorusSkein

SURFACE = "ptorus"
BASES = ("delta", "eta")
UNIT = (0, 0, 0)


class PuncturedSkein(SkeinElement):
    """sum c_kpq delta^k (p,q)_T, or eta^k (p,q)_T when ``basis == "eta"``."""

    __slots__ = ("basis",)
    surface = SURFACE

    def __init__(self, N: int, terms=None, basis: str = "delta"):
        if basis not in BASES:
            raise DomainError(f"unknown punctured-torus basis {basis!r}")
        self.basis = basis
        super().__init__(N, terms)

    @classmethod
    def unit(cls, N, c=1, basis="delta"):
        return cls(N, {UNIT: c}, basis)

    @classmethod
    def zero(cls, N, basis="delta"):
        return cls(N, None, basis)

    @classmethod
    def key(cls, N, key, c=1, basis="delta"):
        return cls(N, {key: c}, basis)

    def _new(self, terms):
        out = SkeinElement._new(self, terms)
        out.basis = self.basis
        return out

    def _coerce(self, other):
        if isinstance(other, PuncturedSkein):
            if other.basis != self.basis:
                other = eta_delta_convert(other, self.basis)
            return super()._coerce(other)
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return PuncturedSkein.unit(self.N, other, self.basis)
        return super()._coerce(other)

    def is_central_poly(self) -> bool:
        """True when every term is a pure power of the boundary curve."""
        return all(k[1:] == (0, 0) for k in self.terms)

    def __mul__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        other = self._coerce(other)
        if not (self.is_central_poly() or other.is_central_poly()):
            raise NotComputableError(
                "the product of two punctured-torus skeins with nontrivial torus parts "
                "involves an undetermined correction term in (eta)"
            )
        return SkeinElement.__mul__(self, other)

    def _key_product(self, k1, k2):
        tor = k1[1:] if k1[1:] != (0, 0) else k2[1:]
        return [((k1[0] + k2[0],) + tor, 1)]

    def __eq__(self, other):
        if isinstance(other, PuncturedSkein):
            if other.basis != self.basis:
                other = eta_delta_convert(other, self.basis)
            return self.N == other.N and self.terms == other.terms
        return super().__eq__(other)

    __hash__ = SkeinElement.__hash__

    def key_text(self, key):
        return punctured_key_text(key, self.basis)

    def __str__(self):
        return format_terms(self.terms, self.key_text, UNIT)


def punctured_key_text(key, basis="delta") -> str:
    k, p, q = key
    v = "d" if basis == "delta" else "e"
    parts = []
    if k:
        parts.append(v if k == 1 else f"{v}^{k}")
    if (p, q) != (0, 0):
        parts.append(f"({p},{q})")
    return "*".join(parts)


# -- basis changes -------------------------------------------------------------------


def _binomial_shift(u: PuncturedSkein, shift: CycloScalar, basis: str) -> PuncturedSkein:
    # x^k = (y + shift)^k expanded in y
    out: dict = {}
    for (k, p, q), c in u.terms.items():
        for i in range(k + 1):
            t = c * shift ** (k - i) * comb(k, i)
            key = (i, p, q)
            out[key] = out[key] + t if key in out else t
    return PuncturedSkein(u.N, out, basis)


def eta_delta_convert(u: PuncturedSkein, direction: str) -> PuncturedSkein:
    """
    Rewrite u in the other power basis; ``direction`` is "to_eta" or "to_delta"
    (or the target basis name). Already being in the target basis is a no-op.
    """
    target = {"to_eta": "eta", "to_delta": "delta"}.get(direction, direction)
    if target not in BASES:
        raise DomainError(f"unknown conversion {direction!r}")
    if u.basis == target:
        return u
    c = quantum_loop(u.N)
    if target == "delta":
        # eta = delta + c
        return _binomial_shift(u, c, "delta")
    # delta = eta - c
    return _binomial_shift(u, -c, "eta")


def delta_poly(N: int, f) -> PuncturedSkein:
    """A polynomial in delta (IntPolynomial, or {power: coeff}) as a central skein."""
    coeffs = f.coeffs if isinstance(f, IntPolynomial) else f
    return PuncturedSkein(N, {(k, 0, 0): c for k, c in coeffs.items()})


def cheb_delta(N: int, a: int) -> PuncturedSkein:
    """T_a(delta), with T_0 = 2."""
    return delta_poly(N, cheb_T(a))


def delta_poly_mul(f, u: PuncturedSkein) -> PuncturedSkein:
    """Multiply u by a polynomial in delta (IntPolynomial, dict, or central PuncturedSkein)."""
    if not isinstance(f, PuncturedSkein):
        f = delta_poly(u.N, f)
    if not f.is_central_poly():
        raise DomainError("delta_poly_mul needs a polynomial in delta")
    return eta_delta_convert(f, "delta") * eta_delta_convert(u, "delta")


def delta_power_relation(N: int) -> tuple[PuncturedSkein, PuncturedSkein]:
    """
    Both sides of delta^N = T_N(delta) - sum_i (-1)^i N/(N-i) C(N-i,i) delta^(N-2i),
    the right side expanded in delta powers.
    """
    lhs = PuncturedSkein.key(N, (N, 0, 0))
    rhs = cheb_delta(N, N) + PuncturedSkein(
        N, {(e, 0, 0): c for e, c in x_power_relation_terms(N).items()}
    )
    return lhs, rhs


def verify_delta_power_relation(N: int) -> bool:
    lhs, rhs = delta_power_relation(N)
    return lhs == rhs


# -- the T_k(delta) view -----------------------------------------------------------------


def to_cheb_view(u: PuncturedSkein) -> dict:
    """
    Coordinates against T_k(delta) (p,q)_T in the unit convention: key (0, p, q)
    carries the coefficient of the bare (p,q)_T, i.e. twice the T_0(delta) one.
    """
    u = eta_delta_convert(u, "delta")
    groups: dict = {}
    for (k, p, q), c in u.terms.items():
        groups.setdefault((p, q), {})[k] = c
    out: dict = {}
    for (p, q), poly in groups.items():
        rest = dict(poly)
        while rest:
            k = max(rest)
            c = rest.pop(k)
            if c.is_zero():
                continue
            if k == 0:
                out[(0, p, q)] = c
                break
            out[(k, p, q)] = c
            for e, t in cheb_T(k).coeffs.items():
                if e == k:
                    continue
                # the constant of T_k lands on the unit slot as is
                rest[e] = rest.get(e, scalar(u.N, 0)) - c * t
            rest = {e: v for e, v in rest.items() if not v.is_zero()}
    return {k: v for k, v in sorted(out.items()) if not v.is_zero()}


def from_cheb_view(N: int, coords: dict) -> PuncturedSkein:
    out = PuncturedSkein.zero(N)
    for (k, p, q), c in coords.items():
        if k == 0:
            out = out + PuncturedSkein.key(N, (0, p, q), c)
        else:
            out = out + delta_poly_mul(cheb_T(k), PuncturedSkein.key(N, (0, p, q), c))
    return out


def punctured_trace(u: PuncturedSkein) -> CharElement:
    """Keep the T_k(delta) (p,q)_T with N | k, N | p and N | q."""
    N = u.N
    return CharElement(
        SURFACE, N,
        {
            (k // N, p // N, q // N): c
            for (k, p, q), c in to_cheb_view(u).items()
            if k % N == 0 and p % N == 0 and q % N == 0
        },
    )


# -- the quotient by (eta) -----------------------------------------------------------------


def quotient_to_torus(u: PuncturedSkein) -> TorusSkein:
    """Kill every eta^k with k >= 1; (p,q)_T maps to (p,q)_T."""
    e = eta_delta_convert(u, "to_eta")
    return TorusSkein(u.N, {(p, q): c for (k, p, q), c in e.terms.items() if k == 0})


def weight(u: PuncturedSkein) -> int:
    """Largest |p| + |q| over the eta-basis terms; the zero skein has weight -1."""
    e = eta_delta_convert(u, "to_eta")
    return max((abs(p) + abs(q) for (_, p, q) in e.terms), default=-1)


def eta_degree(u: PuncturedSkein) -> int:
    e = eta_delta_convert(u, "to_eta")
    return max((k for (k, _, _) in e.terms), default=-1)


def epsilon_bound_predicate(eps: PuncturedSkein, p: int, q: int, r: int, s: int,
                            require_ideal: bool = True) -> bool:
    """
    Does ``eps`` satisfy the known bounds on the correction term of
    (p,q)_T * (r,s)_T?

    weight(eps) <= |p|+|q|+|r|+|s| - 4 and the eta-degree is at most
    floor(min(|p|+|r|, |q|+|s|) / 2). With ``require_ideal`` every term must
    also carry at least one factor of eta.
    """
    e = eta_delta_convert(eps, "to_eta")
    if e.is_zero():
        return True
    if require_ideal and any(k == 0 for (k, _, _) in e.terms):
        return False
    if weight(e) > abs(p) + abs(q) + abs(r) + abs(s) - 4:
        return False
    return eta_degree(e) <= min(abs(p) + abs(r), abs(q) + abs(s)) // 2


def torus_part(key) -> tuple:
    return canonical_pair(key[1], key[2])
