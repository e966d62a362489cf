"""
Character rings: the images of the threading map, their fraction fields,
and the Laurent embedding of the torus character ring.

A ``CharElement`` is a finitely supported map from canonical keys to Q(A).
Keys are written in units of N, so a torus key (p, q) stands for the
threaded curve (Np, Nq)_T. In every surface the all-zero key is the empty
skein (the unit); a Chebyshev factor T_0 is twice the unit and never stored.

    annulus  a          -> T_{Na}(x)
    pants    (a, b, c)  -> T_{Na}(x) T_{Nb}(y) T_{Nc}(z)
    torus    (p, q)     -> (Np, Nq)_T,  p > 0 or (p == 0 and q >= 0)
    ptorus   (k, p, q)  -> T_{kN}(delta) (Np, Nq)_T
"""
from __future__ import annotations

from math import gcd

from .chebyshev import cheb_index_product
from .cyclotomic import CycloScalar, as_monomial, scalar
from .errors import DomainError, LevelMismatchError, NotComputableError
from .laurent import LaurentPoly

SURFACES = ("annulus", "pants", "torus", "ptorus")

_UNIT = {"annulus": 0, "pants": (0, 0, 0), "torus": (0, 0), "ptorus": (0, 0, 0)}


def unit_key(surface: str):
    try:
        return _UNIT[surface]
    except KeyError:
        raise DomainError(f"unknown surface {surface!r}") from None


def canonical_pair(p: int, q: int) -> tuple[int, int]:
    """Identify (p, q) with (-p, -q): keep p > 0, or p == 0 and q >= 0."""
    if p < 0 or (p == 0 and q < 0):
        return (-p, -q)
    return (p, q)


def canonical_key(surface: str, key):
    if surface == "annulus":
        key = int(key)
        if key < 0:
            raise DomainError(f"annulus key must be >= 0, got {key}")
        return key
    if surface == "pants":
        key = tuple(int(k) for k in key)
        if len(key) != 3 or min(key) < 0:
            raise DomainError(f"pants key must be three nonnegative ints, got {key}")
        return key
    if surface == "torus":
        p, q = key
        return canonical_pair(int(p), int(q))
    if surface == "ptorus":
        k, p, q = key
        if k < 0:
            raise DomainError(f"delta index must be >= 0, got {k}")
        return (int(k),) + canonical_pair(int(p), int(q))
    raise DomainError(f"unknown surface {surface!r}")


def torus_pair_product(v, w, sign_of):
    """
    Product-to-sum on canonical torus pairs, with (0, 0) the unit.

    ``sign_of(det)`` supplies the scalar weight A^det of the first term;
    the second term gets ``sign_of(-det)``. Returns [(key, weight)] where
    a (0, 0)_T output has already been doubled into the unit.
    """
    if v == (0, 0):
        return [(w, sign_of(0))]
    if w == (0, 0):
        return [(v, sign_of(0))]
    p, q = v
    r, s = w
    det = p * s - q * r
    out = []
    for key, weight in ((canonical_pair(p + r, q + s), sign_of(det)),
                        (canonical_pair(p - r, q - s), sign_of(-det))):
        if key == (0, 0):
            weight = weight * 2
        out.append((key, weight))
    return out


def _parity_sign(det):
    return -1 if det % 2 else 1


def key_product(surface: str, k1, k2):
    """Product of two character-ring keys as [(key, integer multiplicity)]."""
    if surface == "annulus":
        return list(cheb_index_product(k1, k2))
    if surface == "pants":
        out = [((), 1)]
        for a, b in zip(k1, k2):
            out = [(key + (c,), m * n) for key, m in out for c, n in cheb_index_product(a, b)]
        return out
    if surface == "torus":
        # A^{N^2 det} = (-1)^det for odd N
        return torus_pair_product(k1, k2, _parity_sign)
    if surface == "ptorus":
        if k1[1:] != (0, 0) and k2[1:] != (0, 0):
            raise NotComputableError(
                "product of two non-central-boundary punctured-torus skeins needs the "
                "correction term in (eta), which is not determined"
            )
        tor = k1[1:] if k1[1:] != (0, 0) else k2[1:]
        return [((c,) + tor, n) for c, n in cheb_index_product(k1[0], k2[0])]
    raise DomainError(f"unknown surface {surface!r}")


class CharElement:
    """Element of the character ring chi(F) at level N."""

    __slots__ = ("surface", "N", "terms")
    is_character = True

    def __init__(self, surface: str, N: int, terms=None):
        unit_key(surface)
        self.surface = surface
        self.N = N
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = scalar(N, c)
                if c.is_zero():
                    continue
                k = canonical_key(surface, k)
                prev = self.terms.get(k)
                c = c if prev is None else prev + c
                if c.is_zero():
                    self.terms.pop(k, None)
                else:
                    self.terms[k] = c

    @classmethod
    def unit(cls, surface, N, c=1):
        return cls(surface, N, {unit_key(surface): c})

    @classmethod
    def zero(cls, surface, N):
        return cls(surface, N)

    @classmethod
    def key(cls, surface, N, key, c=1):
        return cls(surface, N, {key: c})

    def _new(self, terms):
        out = CharElement.__new__(CharElement)
        out.surface, out.N, out.terms = self.surface, self.N, terms
        return out

    def _coerce(self, other):
        if isinstance(other, CharElement):
            if other.surface != self.surface or other.N != self.N:
                raise LevelMismatchError(
                    f"{self.surface}@{self.N} vs {other.surface}@{other.N}"
                )
            return other
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return CharElement.unit(self.surface, self.N, other)
        raise TypeError(f"cannot coerce {type(other).__name__} to CharElement")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_scalar(self) -> bool:
        return set(self.terms) <= {unit_key(self.surface)}

    def scalar_value(self) -> CycloScalar:
        if not self.is_scalar():
            raise DomainError(f"{self} is not a scalar")
        return self.terms.get(unit_key(self.surface), scalar(self.N, 0))

    # -- arithmetic ---------------------------------------------------------

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

    def scale(self, c) -> CharElement:
        c = scalar(self.N, c)
        if c.is_zero():
            return self._new({})
        return self._new({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        if isinstance(other, CharFraction):
            return NotImplemented
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return char_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = CharElement.unit(self.surface, self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return self.scale(scalar(self.N, other).inverse())
        if isinstance(other, CharElement):
            return CharFraction(self, other)
        if isinstance(other, CharFraction):
            return CharFraction(self) / other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, CharElement):
            return (self.surface, self.N, self.terms) == (other.surface, other.N, other.terms)
        if isinstance(other, CharFraction):
            return other == self
        if isinstance(other, (int, CycloScalar)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.surface, self.N, frozenset(self.terms.items())))

    # -- embeddings ---------------------------------------------------------

    def to_laurent(self) -> LaurentPoly:
        """Injective ring map into Laurent polynomials, exponents in units of N."""
        return _to_laurent(self)

    @classmethod
    def from_laurent(cls, surface, N, poly: LaurentPoly) -> CharElement:
        return _from_laurent(surface, N, poly)

    def exact_div(self, other: CharElement) -> CharElement | None:
        """self / other inside chi(F) when the division is exact, else None."""
        other = self._coerce(other)
        if other.is_scalar():
            return self.scale(other.scalar_value().inverse())
        q = self.to_laurent().exact_div(other.to_laurent())
        return None if q is None else _from_laurent(self.surface, self.N, q)

    def __str__(self):
        return format_char(self)

    def __repr__(self):
        return f"CharElement({self.surface!r}, {self.N}, '{self}')"


def char_mul(u: CharElement, v: CharElement) -> CharElement:
    """Bilinear extension of ``key_product``."""
    if u.surface != v.surface or u.N != v.N:
        raise LevelMismatchError(f"{u.surface}@{u.N} vs {v.surface}@{v.N}")
    out: dict = {}
    for k1, c1 in u.terms.items():
        for k2, c2 in v.terms.items():
            c = c1 * c2
            for k, m in key_product(u.surface, k1, k2):
                t = c * m
                s = out.get(k)
                out[k] = t if s is None else s + t
    return u._new({k: c for k, c in out.items() if not c.is_zero()})


def char_is_zero(u: CharElement) -> bool:
    return u.is_zero()


# -- Laurent models -----------------------------------------------------------

_NVARS = {"annulus": 1, "pants": 3, "torus": 2}


def _sym(k):
    # q^k + q^-k as {exponent: multiplicity}; k = 0 is the unit
    return {0: 1} if k == 0 else {k: 1, -k: 1}


def _to_laurent(u: CharElement) -> LaurentPoly:
    s = u.surface
    if s not in _NVARS:
        raise NotComputableError(f"no Laurent model for the {s} character ring")
    n = _NVARS[s]
    out: dict = {}
    for key, c in u.terms.items():
        if s == "annulus":
            parts = [{(e,): m for e, m in _sym(key).items()}]
        elif s == "pants":
            parts = [{(e,): m for e, m in _sym(k).items()} for k in key]
        else:
            p, q = key
            if key == (0, 0):
                parts = [{(0, 0): 1}]
            else:
                sg = -1 if gcd(p, q) % 2 else 1
                parts = [{(p, q): sg, (-p, -q): sg}]
        mono = {(): 1}
        for part in parts:
            mono = {a + b: m * n_ for a, m in mono.items() for b, n_ in part.items()}
        for e, m in mono.items():
            t = c * m
            prev = out.get(e)
            out[e] = t if prev is None else prev + t
    return LaurentPoly(n, u.N, out)


def _from_laurent(surface, N, poly: LaurentPoly) -> CharElement:
    terms = {}
    for e, c in poly.terms.items():
        if surface == "annulus":
            if e[0] >= 0:
                terms[e[0]] = c
        elif surface == "pants":
            if min(e) >= 0:
                terms[e] = c
        elif surface == "torus":
            p, q = e
            if (p, q) == canonical_pair(p, q):
                sg = -1 if (p, q) != (0, 0) and gcd(p, q) % 2 else 1
                terms[(p, q)] = c * sg
        else:
            raise NotComputableError(f"no Laurent model for {surface}")
    out = CharElement(surface, N, terms)
    if _to_laurent(out) != poly:
        raise ArithmeticError("Laurent polynomial is not in the image of the character ring")
    return out


def embed_torus_pair(P: int, Q: int, N: int) -> LaurentPoly:
    """(-1)^gcd(P,Q) (lam^P mu^Q + lam^-P mu^-Q) for an integer torus key; unit -> 1."""
    if (P, Q) == (0, 0):
        return LaurentPoly.constant(2, N, 1, LAURENT_NAMES)
    sg = -1 if gcd(P, Q) % 2 else 1
    return LaurentPoly(2, N, {(P, Q): sg, (-P, -Q): sg}, LAURENT_NAMES)


LAURENT_NAMES = ("lam", "mu")
LaurentElement = LaurentPoly


def laurent_embed(u) -> LaurentPoly:
    """
    Image in C[lam^+-1, mu^+-1] of a torus character-ring element or skein.

    Each curve (P, Q)_T goes to (-1)^d (lam^P mu^Q + lam^-P mu^-Q),
    d = gcd(P, Q); the empty skein goes to 1. Character-ring keys are
    scaled by N first. On the character ring this is an injective ring
    homomorphism.
    """
    if getattr(u, "surface", None) != "torus":
        raise DomainError("laurent_embed is defined on the torus only")
    scale = u.N if getattr(u, "is_character", False) else 1
    out = LaurentPoly(2, u.N, None, LAURENT_NAMES)
    for (p, q), c in u.terms.items():
        out = out + embed_torus_pair(scale * p, scale * q, u.N).scale(c)
    return out


# -- fraction field -------------------------------------------------------------


class CharFraction:
    """
    Element [num, den] of the fraction field of chi(F).

    Equality is by cross-multiplication. No lowest-terms form is kept;
    scalar denominators are folded into the numerator, and ``reduced``
    cancels the denominator when it divides the numerator exactly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = CharElement.unit(num.surface, num.N)
        elif not isinstance(den, CharElement):
            den = CharElement.unit(num.surface, num.N, den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in CharFraction")
        if num.surface != den.surface or num.N != den.N:
            raise LevelMismatchError("numerator and denominator live in different rings")
        if den.is_scalar():
            s = den.scalar_value()
            if not s.is_one():
                num = num.scale(s.inverse())
                den = CharElement.unit(den.surface, den.N)
        self.num = num
        self.den = den

    @property
    def surface(self):
        return self.num.surface

    @property
    def N(self):
        return self.num.N

    @staticmethod
    def lift(x, like) -> CharFraction:
        if isinstance(x, CharFraction):
            return x
        if isinstance(x, CharElement):
            return CharFraction(x)
        return CharFraction(CharElement.unit(like.surface, like.N, x))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den.is_scalar()

    def reduced(self) -> CharFraction:
        if self.den.is_scalar():
            return self
        if self.num == self.den:
            return CharFraction(CharElement.unit(self.surface, self.N))
        q = self.num.exact_div(self.den)
        return self if q is None else CharFraction(q)

    def __add__(self, other):
        try:
            other = CharFraction.lift(other, self)
        except (TypeError, AttributeError):
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return CharFraction(self.num + other.num, self.den)
        return CharFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CharFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-CharFraction.lift(other, self))

    def __rsub__(self, other):
        return CharFraction.lift(other, self) - self

    def __mul__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return CharFraction(self.num.scale(other), self.den)
        other = CharFraction.lift(other, self)
        if self.num.is_zero() or other.num.is_zero():
            return CharFraction(self.num._new({}))
        if self.den == other.num:
            return CharFraction(self.num, other.den)
        if other.den == self.num:
            return CharFraction(other.num, self.den)
        return CharFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CharFraction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero fraction")
        return CharFraction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, CycloScalar)) or hasattr(other, "denominator"):
            return CharFraction(self.num.scale(scalar(self.N, other).inverse()), self.den)
        return self * CharFraction.lift(other, self).inverse()

    def __rtruediv__(self, other):
        return CharFraction.lift(other, self) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return CharFraction(self.num**k, self.den**k)

    def __eq__(self, other):
        if isinstance(other, (CharFraction, CharElement, int, CycloScalar)):
            other = CharFraction.lift(other, self)
            if self.den == other.den:
                return self.num == other.num
            return self.num * other.den == other.num * self.den
        return NotImplemented

    def __hash__(self):
        raise TypeError("CharFraction equality is by cross-multiplication; not hashable")

    def __str__(self):
        if self.den.is_scalar():
            return str(self.num)
        return f"{_paren(self.num)} / {_paren(self.den)}"

    def __repr__(self):
        return f"CharFraction('{self}')"


def _paren(u: CharElement) -> str:
    s = format_char(u)
    return f"({s})" if len(u.terms) > 1 else s


# -- text forms -------------------------------------------------------------------


def char_key_text(surface, key) -> str:
    """Text for a non-unit key; the unit prints as a bare coefficient."""
    if surface == "annulus":
        return f"X[{key}]"
    if surface == "torus":
        return f"C({key[0]},{key[1]})"
    if surface == "pants":
        return "*".join(f"{v}[{k}]" for v, k in zip("XYZ", key) if k)
    if surface == "ptorus":
        parts = []
        if key[0]:
            parts.append(f"D[{key[0]}]")
        if key[1:] != (0, 0):
            parts.append(f"C({key[1]},{key[2]})")
        return "*".join(parts)
    raise DomainError(surface)


def format_terms(terms, key_text, unit, sort_key=None) -> str:
    """Shared pretty printer: ``coeff*key`` terms joined with +/-."""
    if not terms:
        return "0"
    parts = []
    for key in sorted(terms, key=sort_key):
        c = terms[key]
        cs = str(c)
        if key == unit:
            body, neg = cs, False
            if as_monomial(c) is None:
                body = f"({cs})" if len(terms) > 1 else cs
            elif cs.startswith("-"):
                body, neg = cs[1:], True
        else:
            kt = key_text(key)
            if cs == "1":
                body, neg = kt, False
            elif cs == "-1":
                body, neg = kt, True
            elif as_monomial(c) is not None:
                neg = cs.startswith("-")
                body = f"{cs.lstrip('-')}*{kt}"
            else:
                body, neg = f"({cs})*{kt}", False
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def format_char(u: CharElement) -> str:
    return format_terms(u.terms, lambda k: char_key_text(u.surface, k), unit_key(u.surface))
