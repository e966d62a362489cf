"""
Text forms of skeins.

    expr  := term (('+' | '-') term)*
    term  := factor ('*' factor)*
    factor:= number | A['^'int] | '(' expr-in-A ')' | key
    key   := T[k]            annulus
           | P(a,b,c)        pants, T_0 = 2 in every slot
           | (p,q)           torus and punctured torus
           | d['^'k] e['^'k] powers of delta and eta (punctured torus)

Coefficients are polynomials in A with rational coefficients; printing goes
through each element's ``__str__``, so ``parse_skein(str(u)) == u``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .annulus import AnnulusSkein
from .cyclotomic import CycloScalar, a_power, scalar
from .errors import DomainError, ParseError
from .pants import PantsSkein
from .places import Place, torus_place_from_traces
from .punctured import PuncturedSkein, eta_delta_convert
from .torus import TorusSkein

SURFACES = ("annulus", "pants", "torus", "ptorus")

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or (m.group(1) is None and m.group(2) is None):
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1) + 1))
        else:
            out.append((m.group(2), m.group(2), m.start(2) + 1))
        pos = m.end()
    out.append(("end", None, len(text.rstrip()) + 1))
    return out


class _Parser:
    def __init__(self, text, surface, N):
        if surface not in SURFACES:
            raise DomainError(f"unknown surface {surface!r}")
        self.text, self.surface, self.N = text, surface, N
        self.toks = _tokenize(text)
        self.i = 0

    # -- token helpers
    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind=None):
        t = self.peek()
        if kind is not None and t[0] != kind:
            want = "a number" if kind == "int" else repr(kind)
            got = "end of input" if t[0] == "end" else repr(t[1])
            self.fail(f"expected {want}, got {got}", t)
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def signed_int(self):
        neg = False
        if self.peek()[0] == "-":
            self.take()
            neg = True
        v = self.take("int")[1]
        return -v if neg else v

    # -- grammar
    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        out = self.expr(top=True)
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self, top):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        total = self.term(top).scale(sign) if top else self.term(top) * sign
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            t = self.term(top)
            total = total + (t.scale(sign) if top else t * sign)
        return total

    def term(self, top):
        coeff = CycloScalar.one(self.N)
        key = None
        while True:
            tok = self.peek()
            c, k = self.factor(top)
            if k is not None:
                if key is not None:
                    key = self.combine_keys(key, k, tok)
                else:
                    key = k
            if c is not None:
                coeff = coeff * c
            if self.peek()[0] != "*":
                break
            self.take()
        if not top:
            if key is not None:
                self.fail("skein key inside a coefficient")
            return coeff
        return self.build(coeff, key)

    def combine_keys(self, a, b, tok):
        if self.surface == "ptorus":
            # delta/eta power times a torus curve
            pw = [x for x in (a, b) if x[0] in ("d", "e")]
            cv = [x for x in (a, b) if x[0] == "curve"]
            if len(pw) == 1 and len(cv) == 1:
                return ("ptorus", pw[0][0], pw[0][1], cv[0][1])
            if len(pw) == 2 and pw[0][0] == pw[1][0]:
                return (pw[0][0], pw[0][1] + pw[1][1])
        self.fail("a term may hold only one skein key", tok)

    def factor(self, top):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            v = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                d = self.take("int")
                if d[1] == 0:
                    self.fail("division by zero", d)
                v = v / d[1]
            return scalar(self.N, v), None
        if kind == "A":
            self.take()
            e = 1
            if self.peek()[0] == "^":
                self.take()
                e = self.signed_int()
            return a_power(e, self.N), None
        if kind == "(":
            if top and self.is_pair():
                return None, self.pair_key()
            self.take()
            v = self.expr(top=False)
            self.take(")")
            return v, None
        if not top:
            self.fail(f"unexpected {tok[1]!r} in a coefficient")
        if kind == "T" and self.surface == "annulus":
            self.take()
            self.take("[")
            k = self.take("int")[1]
            self.take("]")
            return None, ("T", k)
        if kind == "P" and self.surface == "pants":
            self.take()
            self.take("(")
            a = self.take("int")[1]
            self.take(",")
            b = self.take("int")[1]
            self.take(",")
            c = self.take("int")[1]
            self.take(")")
            return None, ("P", (a, b, c))
        if kind in ("d", "e") and self.surface == "ptorus":
            self.take()
            k = 1
            if self.peek()[0] == "^":
                self.take()
                k = self.take("int")[1]
            return None, (kind, k)
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok[1]!r} for the {self.surface} surface")

    def is_pair(self):
        k = 1
        if self.peek(k)[0] == "-":
            k += 1
        return self.peek(k)[0] == "int" and self.peek(k + 1)[0] == ","

    def pair_key(self):
        if self.surface not in ("torus", "ptorus"):
            self.fail(f"(p,q) keys belong to the torus, not {self.surface}")
        self.take("(")
        p = self.signed_int()
        self.take(",")
        q = self.signed_int()
        self.take(")")
        return ("curve", (p, q))

    def build(self, coeff, key):
        N, s = self.N, self.surface
        if s == "annulus":
            if key is None:
                return AnnulusSkein.unit(N, coeff)
            return AnnulusSkein.T(N, key[1], coeff)
        if s == "pants":
            if key is None:
                return PantsSkein.unit(N, coeff)
            return PantsSkein.T(N, *key[1], coeff)
        if s == "torus":
            if key is None:
                return TorusSkein.unit(N, coeff)
            return TorusSkein.curve(N, *key[1], coeff)
        # punctured torus
        basis, k, pq = "delta", 0, (0, 0)
        if key is not None:
            if key[0] == "curve":
                pq = key[1]
            elif key[0] in ("d", "e"):
                basis, k = ("delta" if key[0] == "d" else "eta"), key[1]
            else:
                basis, k, pq = ("delta" if key[1] == "d" else "eta"), key[2], key[3]
        # an explicit (0,0)_T is twice the empty skein
        written = key is not None and key[0] not in ("d", "e")
        c = coeff * 2 if written and pq == (0, 0) else coeff
        return PuncturedSkein.key(N, (k,) + tuple(pq), c, basis=basis)


def parse_skein(text: str, surface: str, N: int):
    """Parse ``text`` into a skein on ``surface`` at level N; ParseError carries the column."""
    out = _Parser(text, surface, N).parse()
    if surface == "ptorus":
        out = _settle_basis(text, out)
    return out


def _settle_basis(text, u):
    # an expression written only with eta powers stays in the eta basis
    if "e" in text and "d" not in text:
        return eta_delta_convert(u, "eta")
    return eta_delta_convert(u, "delta")


def format_skein(u) -> str:
    return str(u)


def parse_scalar(text: str, N: int) -> CycloScalar:
    """A coefficient expression in A, e.g. ``3/2``, ``A^-1`` or ``A^2 + 1``."""
    p = _Parser(text, "annulus", N)
    if p.peek()[0] == "end":
        p.fail("empty expression")
    out = p.expr(top=False)
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return out


def parse_place(text: str, surface: str, N: int):
    """
    ``z=3/2`` (annulus), ``q=A``, ``z1=0,z2=1,z3=3`` (pants), ``lambda=2,mu=3``
    (torus), ``lambda=2,mu=3,w=A`` (punctured torus), or rational trace
    coordinates ``x=..,y=..,z=..`` on the torus when they lift exactly.
    """
    params = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, eq, value = item.partition("=")
        if not eq:
            raise ParseError(f"expected name=value, got {item!r}", text, text.find(item) + 1)
        try:
            params[name.strip()] = parse_scalar(value, N)
        except ParseError as exc:
            col = text.find(item) + len(name) + 1 + (exc.column or 1)
            raise ParseError(str(exc).split(": ", 1)[-1], text, col) from None
    if surface == "torus" and set(params) == {"x", "y", "z"}:
        vals = []
        for k in ("x", "y", "z"):
            if not params[k].is_rational():
                raise DomainError("trace coordinates must be rational")
            vals.append(params[k].rational_value())
        return torus_place_from_traces(N, *vals)
    return Place(surface, N, params)
