"""
Chebyshev polynomials of the first type with the normalization T_0 = 2.

    T_0 = 2,  T_1 = x,  T_{n+1} = x T_n - T_{n-1},

so that T_k(q + 1/q) = q^k + q^-k and T_m T_n = T_{m+n} + T_{|m-n|} for all
m, n >= 0 (the m = n case produces T_0 = 2).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


class IntPolynomial:
    """Univariate polynomial with rational coefficients, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {int(k): Fraction(v) for k, v in coeffs.items() if v != 0}

    @classmethod
    def x(cls):
        return cls({1: 1})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs.get(self.degree(), Fraction(0))

    def _lift(self, other):
        if isinstance(other, IntPolynomial):
            return other
        return IntPolynomial.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = IntPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may be a number or another polynomial."""
        result = 0 * value if not isinstance(value, IntPolynomial) else IntPolynomial()
        for k in range(self.degree(), -1, -1):
            result = result * value + self.coeffs.get(k, 0)
        return result

    def compose(self, inner: IntPolynomial) -> IntPolynomial:
        return self(inner)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == IntPolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self):
        return f"IntPolynomial('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append(body if not parts and c > 0 else (f"-{body}" if not parts else f" {sign} {body}"))
        return "".join(parts)


@lru_cache(maxsize=None)
def cheb_T(k: int) -> IntPolynomial:
    """
    The k-th Chebyshev polynomial of the first type, T_0 = 2.

    >>> str(cheb_T(5))
    'x^5 - 5*x^3 + 5*x'
    """
    if k < 0:
        raise ValueError(f"Chebyshev index must be nonnegative, got {k}")
    if k == 0:
        return IntPolynomial.constant(2)
    if k == 1:
        return IntPolynomial.x()
    return IntPolynomial.x() * cheb_T(k - 1) - cheb_T(k - 2)


def to_cheb_basis(p: IntPolynomial) -> dict[int, Fraction]:
    """
    Coefficients c_k with p = sum c_k T_k.

    Peels off the leading term repeatedly; T_k is monic for k >= 1 and
    T_0 = 2, so the constant left at the end is halved.
    """
    rest = p
    out: dict[int, Fraction] = {}
    while not rest.is_zero():
        k = rest.degree()
        c = rest.leading_coefficient()
        if k == 0:
            out[0] = c / 2
            break
        out[k] = c
        rest = rest - c * cheb_T(k)
    return out


def from_cheb_basis(coeffs: dict[int, Fraction]) -> IntPolynomial:
    result = IntPolynomial()
    for k, c in coeffs.items():
        result = result + c * cheb_T(k)
    return result


def verify_cheb_identities(m: int, n: int) -> bool:
    """Check T_m(T_n) = T_{mn} and T_m T_n = T_{m+n} + T_{|m-n|} exactly."""
    composition = cheb_T(m).compose(cheb_T(n)) == cheb_T(m * n)
    product = cheb_T(m) * cheb_T(n) == cheb_T(m + n) + cheb_T(abs(m - n))
    return composition and product


def x_power_relation(N: int) -> IntPolynomial:
    """
    Right-hand side of x^N = T_N(x) - sum_i (-1)^i N/(N-i) C(N-i, i) x^(N-2i).

    Raises AssertionError if the closed form does not reproduce x^N.
    """
    x = IntPolynomial.x()
    rhs = cheb_T(N)
    for i in range(1, N // 2 + 1):
        rhs = rhs - (-1) ** i * Fraction(N, N - i) * comb(N - i, i) * x ** (N - 2 * i)
    assert rhs == x**N, f"x^N closed form fails at N={N}"
    return rhs


def x_power_relation_terms(N: int) -> dict[int, Fraction]:
    """The monomial tail of x^N - T_N(x), keyed by exponent."""
    return {
        N - 2 * i: -((-1) ** i) * Fraction(N, N - i) * comb(N - i, i)
        for i in range(1, N // 2 + 1)
    }


def cheb_index_product(m: int, n: int) -> tuple[tuple[int, int], ...]:
    """
    T_m T_n in the unit convention: index 0 stands for the unit, not T_0.

    Returns (index, multiplicity) pairs; T_0 = 2 * unit shows up as (0, 2).
    """
    if m == 0:
        return ((n, 1),)
    if n == 0:
        return ((m, 1),)
    if m == n:
        return ((2 * m, 1), (0, 2))
    return ((m + n, 1), (abs(m - n), 1))


def cheb_eval(k: int, value, one):
    """T_k(value) for a ring element ``value``; ``one`` is the ring's unit."""
    if k == 0:
        return one * 2
    prev, cur = one * 2, value
    for _ in range(k - 1):
        prev, cur = cur, value * cur - prev
    return cur
