"""
Sparse multivariate Laurent polynomials over Q(A).

Used as the concrete model of character rings (every character ring here
embeds in such a ring) and as the workhorse for exact division during
fraction-free elimination.
"""
from __future__ import annotations

import heapq

from .cyclotomic import CycloScalar, as_monomial, scalar
from .errors import LevelMismatchError


class LaurentPoly:
    """sum c_e x^e over exponent tuples e in Z^n; immutable."""

    __slots__ = ("nvars", "N", "terms", "names")

    def __init__(self, nvars: int, N: int, terms=None, names=None):
        self.nvars = nvars
        self.N = N
        self.names = names
        self.terms = {}
        if terms:
            for e, c in terms.items():
                c = scalar(N, c)
                if not c.is_zero():
                    self.terms[tuple(e)] = c

    @classmethod
    def constant(cls, nvars, N, c=1, names=None):
        return cls(nvars, N, {(0,) * nvars: c}, names)

    @classmethod
    def monomial(cls, nvars, N, exps, c=1, names=None):
        return cls(nvars, N, {tuple(exps): c}, names)

    def _new(self, terms):
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.N, out.names = self.nvars, self.N, self.names
        out.terms = terms
        return out

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly.constant(self.nvars, self.N, other, self.names)
        if other.nvars != self.nvars or other.N != self.N:
            raise LevelMismatchError("Laurent polynomials live in different rings")
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.N == other.N and self.terms == other.terms
        if isinstance(other, (int, CycloScalar)):
            return self == self._check(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> LaurentPoly:
        c = scalar(self.N, c)
        if c.is_zero():
            return self._new({})
        return self._new({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, CycloScalar)):
            return self.scale(other)
        other = self._check(other)
        if len(other.terms) < len(self.terms):
            small, big = other, self
        else:
            small, big = self, other
        out: dict = {}
        for e1, c1 in small.terms.items():
            for e2, c2 in big.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                s = out.get(e)
                out[e] = p if s is None else s + p
        return self._new({e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = LaurentPoly.constant(self.nvars, self.N, 1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: LaurentPoly) -> LaurentPoly | None:
        """
        The quotient self/other when it is a Laurent polynomial, else None.

        Lex-leading-term division. Newton polytopes add under multiplication,
        so every quotient exponent must lie in the box between the
        coordinatewise minima and maxima differences; leaving it proves
        non-divisibility and guarantees termination.
        """
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("exact_div by zero Laurent polynomial")
        if self.is_zero():
            return self._new({})
        if len(other.terms) == 1:
            (e0, c0), = other.terms.items()
            inv = c0.inverse()
            return self._new(
                {tuple(a - b for a, b in zip(e, e0)): c * inv for e, c in self.terms.items()}
            )
        n = self.nvars
        lo = [min(e[i] for e in self.terms) - min(e[i] for e in other.terms) for i in range(n)]
        hi = [max(e[i] for e in self.terms) - max(e[i] for e in other.terms) for i in range(n)]
        if any(l > h for l, h in zip(lo, hi)):
            return None
        lead_e = max(other.terms)
        lead_inv = other.terms[lead_e].inverse()
        rest = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rest]
        heapq.heapify(heap)
        quot = {}
        while rest:
            neg = heapq.heappop(heap)
            e = tuple(-x for x in neg)
            c = rest.get(e)
            if c is None:
                continue
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < l or x > h for x, l, h in zip(qe, lo, hi)):
                return None
            qc = c * lead_inv
            quot[qe] = qc
            for oe, oc in other.terms.items():
                te = tuple(a + b for a, b in zip(qe, oe))
                v = rest.get(te)
                nv = -(qc * oc) if v is None else v - qc * oc
                if nv.is_zero():
                    rest.pop(te, None)
                else:
                    if v is None:
                        heapq.heappush(heap, tuple(-x for x in te))
                    rest[te] = nv
        return self._new(quot)

    def evaluate(self, values):
        """Substitute exact nonzero values (CycloScalar or rational) for the variables."""
        values = [scalar(self.N, v) for v in values]
        total = scalar(self.N, 0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            cs = str(c)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            elif as_monomial(c) is None:
                body = f"({cs})*{mono}"
            else:
                body = f"{cs}*{mono}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly('{self}')"
