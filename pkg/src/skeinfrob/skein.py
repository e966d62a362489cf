"""
Absolute skein elements: finite sums of basis keys with Q(A) coefficients,
plus reduced forms over the character ring.

Keys follow the character-ring conventions: 0 / (0,0) / (0,0,0) is the
empty skein, and a Chebyshev T_0 or (0,0)_T is stored as 2 * unit.
"""
from __future__ import annotations

from .charring import CharElement, CharFraction, canonical_key, format_terms, unit_key
from .cyclotomic import CycloScalar, scalar
from .errors import DomainError, LevelMismatchError


class SkeinElement:
    """Base class; subclasses set ``surface`` and implement ``_key_product``."""

    __slots__ = ("N", "terms")
    surface = ""
    is_character = False

    def __init__(self, N: int, terms=None):
        self.N = N
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = scalar(N, c)
                if c.is_zero():
                    continue
                k = self._canon(k)
                prev = self.terms.get(k)
                c = c if prev is None else prev + c
                if c.is_zero():
                    self.terms.pop(k, None)
                else:
                    self.terms[k] = c

    # subclass hooks
    def _canon(self, key):
        return canonical_key(self.surface, key)

    def _key_product(self, k1, k2):
        raise NotImplementedError

    def key_text(self, key) -> str:
        raise NotImplementedError

    @classmethod
    def unit(cls, N, c=1):
        return cls(N, {unit_key(cls.surface): c})

    @classmethod
    def zero(cls, N):
        return cls(N)

    @classmethod
    def key(cls, N, key, c=1):
        return cls(N, {key: c})

    def _new(self, terms):
        out = self.__class__.__new__(self.__class__)
        out.N, out.terms = self.N, terms
        return out

    def _coerce(self, other):
        if isinstance(other, SkeinElement):
            if other.surface != self.surface or other.N != self.N:
                raise LevelMismatchError(
                    f"{self.surface}@{self.N} vs {other.surface}@{other.N}"
                )
            return other
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return self.unit(self.N, other)
        raise TypeError(f"cannot coerce {type(other).__name__} to a {self.surface} skein")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = scalar(self.N, c)
        if c.is_zero():
            return self._new({})
        return self._new({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for k, w in self._key_product(k1, k2):
                    t = c * w
                    s = out.get(k)
                    out[k] = t if s is None else s + t
        return self._new({k: c for k, c in out.items() if not c.is_zero()})

    def __rmul__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        result = self.unit(self.N)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SkeinElement):
            return (self.surface, self.N, self.terms) == (other.surface, other.N, other.terms)
        if isinstance(other, (int, CycloScalar)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.surface, self.N, frozenset(self.terms.items())))

    def __str__(self):
        return format_terms(self.terms, self.key_text, unit_key(self.surface))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.N}, '{self}')"


class ReducedSkein:
    """
    Coordinates of an element of S^-1 K_N(F) against a finite basis.

    ``basis`` lists skein keys; slot keys follow the unit convention, so a
    basis key equal to the unit means the empty skein (not T_0 or (0,0)_T).
    Coefficients are CharFractions.
    """

    __slots__ = ("surface", "N", "basis", "coeffs")

    def __init__(self, surface, N, basis, coeffs):
        if len(basis) != len(coeffs):
            raise DomainError("basis and coefficient lengths differ")
        self.surface = surface
        self.N = N
        self.basis = tuple(basis)
        like = CharElement.unit(surface, N)
        self.coeffs = [CharFraction.lift(c, like) for c in coeffs]

    def __getitem__(self, key):
        return self.coeffs[self.basis.index(key)]

    def __len__(self):
        return len(self.coeffs)

    def items(self):
        return zip(self.basis, self.coeffs)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def common_denominator(self) -> CharElement:
        den = CharElement.unit(self.surface, self.N)
        seen = []
        for c in self.coeffs:
            if c.is_zero() or c.den.is_scalar():
                continue
            if not any(c.den == d for d in seen):
                seen.append(c.den)
                den = den * c.den
        return den

    def cleared(self) -> tuple[list, CharElement]:
        """(numerators in chi(F), D) with coeff_i = numerator_i / D."""
        den = self.common_denominator()
        nums = []
        for c in self.coeffs:
            v = (c * den).reduced()
            if not v.is_integral():
                raise ArithmeticError("common denominator failed to clear a coefficient")
            nums.append(v.num)
        return nums, den

    def __eq__(self, other):
        if not isinstance(other, ReducedSkein):
            return NotImplemented
        return (self.surface, self.N, self.basis) == (other.surface, other.N, other.basis) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __str__(self):
        parts = []
        for key, c in self.items():
            if not c.is_zero():
                parts.append(f"[{key}] {c}")
        return "; ".join(parts) if parts else "0"

    def __repr__(self):
        return f"ReducedSkein({self.surface!r}, {self.N}, '{self}')"
