"""
Exact arithmetic in Q(A) where A = exp(pi*i/N) is a primitive 2N-th root of unity.

Elements are stored as integer coefficient vectors over the power basis
1, A, ..., A^(d-1) with a single positive common denominator, where
d = phi(2N) and the modulus is the 2N-th cyclotomic polynomial.

>>> A = a_power(1, 5)
>>> A**10 == 1, A**5 == -1
(True, True)
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import DomainError, LevelMismatchError


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """
    Coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise DomainError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide_monic(num, den):
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


class _Level(NamedTuple):
    N: int
    degree: int
    modulus: tuple[int, ...]
    # row k holds A^(degree + k) in the power basis, for k = 0 .. degree-2
    overflow: tuple[tuple[int, ...], ...]
    # row k holds A^k for k = 0 .. 2N-1
    powers: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _level(N: int) -> _Level:
    if N < 3 or N % 2 == 0:
        raise DomainError(f"level N must be odd and >= 3, got {N}")
    modulus = cyclotomic_polynomial(2 * N)
    d = len(modulus) - 1

    def times_a(vec):
        top = vec[-1]
        shifted = [0] + list(vec[:-1])
        return tuple(s - top * m for s, m in zip(shifted, modulus))

    powers = []
    vec = tuple([1] + [0] * (d - 1))
    for _ in range(2 * N):
        powers.append(vec)
        vec = times_a(vec)
    assert vec == powers[0], "A^(2N) != 1"
    overflow = tuple(powers[d + k] for k in range(max(d - 1, 0)))
    return _Level(N, d, modulus, overflow, tuple(powers))


def degree(N: int) -> int:
    """Dimension of Q(A) over Q at level N."""
    return _level(N).degree


class CycloScalar:
    """An element of Q(A), A = exp(pi*i/N). Immutable and hashable."""

    __slots__ = ("N", "num", "den", "_hash")

    def __init__(self, N: int, num, den: int = 1):
        lvl = _level(N)
        num = tuple(int(c) for c in num)
        if len(num) != lvl.degree:
            raise ValueError(f"expected {lvl.degree} coefficients, got {len(num)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        self.N = N
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, N: int, value) -> CycloScalar:
        value = Fraction(value)
        d = _level(N).degree
        return cls(N, (value.numerator,) + (0,) * (d - 1), value.denominator)

    @classmethod
    def zero(cls, N: int) -> CycloScalar:
        return _zero(N)

    @classmethod
    def one(cls, N: int) -> CycloScalar:
        return _one(N)

    @classmethod
    def from_fractions(cls, N: int, coeffs) -> CycloScalar:
        """Build from rational coefficients of 1, A, ..., A^(d-1)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        return cls(N, [c.numerator * (den // c.denominator) for c in coeffs], den)

    def coerce(self, other) -> CycloScalar:
        if isinstance(other, CycloScalar):
            if other.N != self.N:
                raise LevelMismatchError(f"levels {self.N} and {other.N} differ")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_rational(self.N, other)
        raise TypeError(f"cannot coerce {type(other).__name__} to CycloScalar")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and self.is_rational()

    def coefficients(self) -> list[Fraction]:
        return [Fraction(c, self.den) for c in self.num]

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return CycloScalar(self.N, [a + b for a, b in zip(self.num, other.num)], self.den)
        return CycloScalar(
            self.N,
            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.N, [-a for a in self.num], self.den)

    def __sub__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloScalar(
                self.N, [a * other.numerator for a in self.num], self.den * other.denominator
            )
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational():
            return CycloScalar(self.N, [a * other.num[0] for a in self.num], self.den * other.den)
        if self.is_rational():
            return CycloScalar(self.N, [self.num[0] * b for b in other.num], self.den * other.den)
        lvl = _level(self.N)
        d = lvl.degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        prod[i + j] += a * b
        out = prod[:d]
        for k, c in enumerate(prod[d:]):
            if c:
                row = lvl.overflow[k]
                for i in range(d):
                    out[i] += c * row[i]
        return CycloScalar(self.N, out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycloScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(A)")
        if self.is_rational():
            return CycloScalar.from_rational(self.N, Fraction(self.den, self.num[0]))
        # solve (self * v) = 1 in the power basis
        lvl = _level(self.N)
        d = lvl.degree
        cols = []
        basis = CycloScalar(self.N, lvl.powers[0])
        a_gen = CycloScalar(self.N, lvl.powers[1])
        vec = basis
        for _ in range(d):
            cols.append((self * vec).coefficients())
            vec = vec * a_gen
        rows = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            p = rows[c][c]
            rows[c] = [x / p for x in rows[c]]
            for r in range(d):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return CycloScalar.from_fractions(self.N, [rows[i][d] for i in range(d)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = _one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycloScalar:
        """Image under A -> A^-1 (complex conjugation)."""
        return self.galois(-1)

    def galois(self, k: int) -> CycloScalar:
        """Image under the automorphism A -> A^k, k coprime to 2N."""
        if math.gcd(k, 2 * self.N) != 1:
            raise DomainError(f"A -> A^{k} is not an automorphism at level {self.N}")
        lvl = _level(self.N)
        out = [0] * lvl.degree
        for i, c in enumerate(self.num):
            if c:
                row = lvl.powers[(i * k) % (2 * self.N)]
                for j in range(lvl.degree):
                    out[j] += c * row[j]
        return CycloScalar(self.N, out, self.den)

    # -- comparison, hashing, display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            return self.N == other.N and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.N, self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def to_complex(self) -> complex:
        a = cmath.exp(1j * math.pi / self.N)
        return sum(c * a**i for i, c in enumerate(self.num)) / self.den

    def terms(self) -> list[tuple[int, int, int]]:
        """Nonzero components as (numerator, denominator, A-exponent), exponent ascending."""
        out = []
        for i, c in enumerate(self.num):
            if c:
                f = Fraction(c, self.den)
                out.append((f.numerator, f.denominator, i))
        return out

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"CycloScalar({self.N}, '{format_scalar(self)}')"


def as_monomial(x: CycloScalar):
    """(r, k) with x = r * A^k, |k| minimal and ties broken toward r > 0; None otherwise."""
    if x.is_zero():
        return None
    N = x.N
    powers = _level(N).powers
    hit = None
    for k in range(2 * N):
        p = powers[k]
        i = next(j for j, c in enumerate(p) if c)
        r = Fraction(x.num[i], x.den * p[i])
        if all(Fraction(a, x.den) == r * b for a, b in zip(x.num, p)):
            hit = (r, k)
            break
    if hit is None:
        return None
    r, k = hit
    k = k - 2 * N if k > N else k
    alt = (-r, k - N if k > 0 else k + N)
    return min((r, k), alt, key=lambda t: (abs(t[1]), t[0] < 0))


def format_scalar(x: CycloScalar) -> str:
    """
    A single power prints as ``r*A^k`` with the shortest exponent (``A^-1``);
    anything else as a polynomial in A, highest exponent first, e.g.
    ``3/2*A^2 - A + 1``.
    """
    mono = as_monomial(x)
    if mono is not None:
        r, k = mono
        if k == 0:
            return str(r)
        a = "A" if k == 1 else f"A^{k}"
        if abs(r) == 1:
            return ("-" if r < 0 else "") + a
        return f"{r}*{a}"
    parts = []
    for num, den, e in reversed(x.terms()):
        mag = Fraction(abs(num), den)
        if e == 0:
            body = str(mag)
        else:
            mono = "A" if e == 1 else f"A^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if num < 0 else "") + body)
        else:
            parts.append((" - " if num < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _zero(N: int) -> CycloScalar:
    return CycloScalar(N, (0,) * _level(N).degree)


@lru_cache(maxsize=None)
def _one(N: int) -> CycloScalar:
    return CycloScalar(N, _level(N).powers[0])


@lru_cache(maxsize=None)
def _power(N: int, k: int) -> CycloScalar:
    return CycloScalar(N, _level(N).powers[k])


def a_power(k: int, N: int) -> CycloScalar:
    """A^k at level N; k is reduced modulo 2N."""
    return _power(N, k % (2 * N))


def scalar(N: int, value) -> CycloScalar:
    """Coerce an int, Fraction or CycloScalar to a CycloScalar at level N."""
    if isinstance(value, CycloScalar):
        if value.N != N:
            raise LevelMismatchError(f"levels {N} and {value.N} differ")
        return value
    return CycloScalar.from_rational(N, value)


def quantum_loop(N: int) -> CycloScalar:
    """A^2 + A^-2, the shift between the boundary skeins of the punctured torus."""
    return a_power(2, N) + a_power(-2, N)
