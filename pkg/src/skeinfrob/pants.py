"""
K_N(Sigma_{0,3}) as the tensor cube of the annulus algebra.

A key (a, b, c) is T_a(x) T_b(y) T_c(z); index 0 in any slot is the empty
skein there, so T_0 contributes a factor 2.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .annulus import (
    AnnulusSkein, _reduce_key, ann_left_matrix, ann_pairing_det, ann_pairing_matrix, ann_trace,
)
from .charring import CharElement, format_terms
from .chebyshev import cheb_index_product
from .cyclotomic import scalar
from .linalg import RingMatrix, mat_det, mat_trace
from .skein import ReducedSkein, SkeinElement

SURFACE = "pants"


class PantsSkein(SkeinElement):
    __slots__ = ()
    surface = SURFACE

    @classmethod
    def T(cls, N, a, b, c, coeff=1):
        """T_a(x) T_b(y) T_c(z) with T_0 = 2 in each slot."""
        twos = sum(1 for k in (a, b, c) if k == 0)
        return cls.key(N, (a, b, c), scalar(N, coeff) * 2**twos)

    def _key_product(self, k1, k2):
        out = [((), 1)]
        for a, b in zip(k1, k2):
            out = [(key + (c,), m * n) for key, m in out for c, n in cheb_index_product(a, b)]
        return out

    def key_text(self, key):
        return f"P({key[0]},{key[1]},{key[2]})"

    def __str__(self):
        # P(a,b,c) reads with T_0 = 2 in every slot, so a stored key with
        # zero slots prints with its coefficient divided by 2 per zero
        terms = {
            k: (c if k == (0, 0, 0) else c * Fraction(1, 2 ** k.count(0)))
            for k, c in self.terms.items()
        }
        return format_terms(terms, self.key_text, (0, 0, 0))


def pants_mul(u: PantsSkein, v: PantsSkein) -> PantsSkein:
    return u * v


def pants_thread(u: PantsSkein) -> PantsSkein:
    N = u.N
    return PantsSkein(N, {tuple(N * k for k in key): c for key, c in u.terms.items()})


def pure_tensor(u: AnnulusSkein, v: AnnulusSkein, w: AnnulusSkein) -> PantsSkein:
    """u(x) v(y) w(z) as a pants skein."""
    N = u.N
    out: dict = {}
    for (a, ca), (b, cb), (c, cc) in product(u.terms.items(), v.terms.items(), w.terms.items()):
        out[(a, b, c)] = ca * cb * cc
    return PantsSkein(N, out)


def lift_char(c: CharElement, slot: int) -> CharElement:
    """An annulus character-ring element placed in slot 0, 1 or 2."""
    terms = {}
    for a, v in c.terms.items():
        key = [0, 0, 0]
        key[slot] = a
        terms[tuple(key)] = v
    return CharElement(SURFACE, c.N, terms)


def tensor_char(u: CharElement, v: CharElement, w: CharElement) -> CharElement:
    """Outer product of three annulus character-ring elements."""
    terms = {}
    for (a, ca), (b, cb), (c, cc) in product(u.terms.items(), v.terms.items(), w.terms.items()):
        terms[(a, b, c)] = ca * cb * cc
    return CharElement(SURFACE, u.N, terms)


def pants_trace(u: PantsSkein) -> CharElement:
    """Delete every T_a T_b T_c with some index not divisible by N."""
    N = u.N
    return CharElement(
        SURFACE, N,
        {tuple(k // N for k in key): c for key, c in u.terms.items() if all(k % N == 0 for k in key)},
    )


def pants_trace_matrix(u: PantsSkein) -> CharElement:
    """
    (1/N^3) * trace of left multiplication on the N^3 tensor basis.

    L_{T_a T_b T_c} is the Kronecker product of the three annulus matrices, and
    the trace of a Kronecker product is the product of the traces.
    """
    N = u.N
    total = CharElement.zero(SURFACE, N)
    cache: dict = {}

    def tr(k):
        if k not in cache:
            cache[k] = mat_trace(ann_left_matrix(AnnulusSkein.key(N, k)))
        return cache[k]

    for key, c in u.terms.items():
        total = total + tensor_char(tr(key[0]), tr(key[1]), tr(key[2])).scale(c)
    return total.scale(Fraction(1, N**3))


def pants_basis(N: int) -> list:
    return [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]


def pants_reduce(u: PantsSkein) -> ReducedSkein:
    """Coordinates against the N^3 tensor basis (unit convention in every slot)."""
    N = u.N
    index = {k: i for i, k in enumerate(pants_basis(N))}
    acc = [CharElement.zero(SURFACE, N)] * len(index)
    for key, c in u.terms.items():
        slots = [_reduce_key(N, k) for k in key]
        for i, a in enumerate(slots[0]):
            if a.is_zero():
                continue
            for j, b in enumerate(slots[1]):
                if b.is_zero():
                    continue
                for k, d in enumerate(slots[2]):
                    if not d.is_zero():
                        t = tensor_char(a, b, d).scale(c)
                        acc[index[(i, j, k)]] = acc[index[(i, j, k)]] + t
    return ReducedSkein(SURFACE, N, pants_basis(N), acc)


def pants_expand(r: ReducedSkein) -> PantsSkein:
    """Inverse of pants_reduce for integral coordinates."""
    nums, den = r.cleared()
    if not den.is_scalar():
        raise ValueError("expansion needs integral coefficients")
    out = PantsSkein.zero(r.N)
    for key, c in zip(r.basis, nums):
        for ck, v in c.terms.items():
            threaded = PantsSkein.key(r.N, tuple(r.N * a for a in ck), v)
            out = out + threaded * PantsSkein.key(r.N, key)
    return out.scale(den.scalar_value().inverse())


def pants_pairing_matrix(N: int) -> RingMatrix:
    """Tr(b_i b_j) on the T_a T_b T_c basis, 0 <= a, b, c < N, lexicographic."""
    basis = [PantsSkein.T(N, *k) for k in pants_basis(N)]
    return RingMatrix([[pants_trace(a * b) for b in basis] for a in basis])


def pants_pairing_matrix_kronecker(N: int) -> RingMatrix:
    """The same matrix as P (x) P (x) P for the annulus pairing matrix P."""
    P = ann_pairing_matrix(N)
    keys = pants_basis(N)
    return RingMatrix([
        [tensor_char(P[i[0], j[0]], P[i[1], j[1]], P[i[2], j[2]]) for j in keys] for i in keys
    ])


class FactoredElement:
    """A product of powers of character-ring elements, kept unexpanded."""

    def __init__(self, factors):
        self.factors = [(f, int(e)) for f, e in factors]

    def is_zero(self) -> bool:
        return any(f.is_zero() for f, e in self.factors if e > 0)

    def expand(self) -> CharElement:
        out = None
        for f, e in self.factors:
            t = f**e
            out = t if out is None else out * t
        return out

    def map(self, fn):
        """Apply a ring homomorphism factor by factor; returns the product of images."""
        out = None
        for f, e in self.factors:
            t = fn(f) ** e
            out = t if out is None else out * t
        return out

    def __str__(self):
        return " * ".join(f"({f})^{e}" if e != 1 else f"({f})" for f, e in self.factors)

    def __repr__(self):
        return f"FactoredElement('{self}')"


def pants_pairing_det(N: int) -> FactoredElement:
    """
    det(P (x) P (x) P) = det(P)^(N^2) in each of the three variables.

    Kept factored: expanded it has (2N^2 (N-1)/2 + 1)^3 terms.
    """
    d = ann_pairing_det(N)
    return FactoredElement([(lift_char(d, s), N * N) for s in range(3)])


def pants_pairing_det_direct(N: int, method: str = "bareiss") -> CharElement:
    """Determinant of the full N^3 x N^3 pairing matrix by elimination."""
    return mat_det(pants_pairing_matrix(N), method=method)


def ann_traces_product(u: AnnulusSkein, v: AnnulusSkein, w: AnnulusSkein) -> CharElement:
    return tensor_char(ann_trace(u), ann_trace(v), ann_trace(w))
