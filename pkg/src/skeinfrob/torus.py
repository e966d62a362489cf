"""
The torus skein algebra K_N(Sigma_{1,0}).

Multiplication is the product-to-sum rule on the (p,q)_T basis. Reduction
happens in two stages: rewriting identities bring any (p,q)_T into the
spanning set B with character-ring coefficients, and the quadratic relation
among B then eliminates B - B' over the fraction field, leaving coordinates
against B' = {0..N-1}^2.

Every rewriting identity is checked by expanding both sides with the
product rule before its first use; a failure raises
``IdentityVerificationError`` naming the identity and its parameters.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .charring import (
    CharElement,
    CharFraction,
    canonical_pair,
    laurent_embed,
    torus_pair_product,
)
from .cyclotomic import a_power, scalar
from .errors import IdentityVerificationError, InternalArithmeticError, SingularMatrixError
from .linalg import RingMatrix, mat_det, mat_solve, mat_trace
from .skein import ReducedSkein, SkeinElement

SURFACE = "torus"
UNIT = (0, 0)


class TorusSkein(SkeinElement):
    """sum c_pq (p,q)_T over canonical pairs; (0,0) is the empty skein, (0,0)_T = 2."""

    __slots__ = ()
    surface = SURFACE

    @classmethod
    def curve(cls, N, p, q, c=1):
        """(p,q)_T with the (0,0)_T = 2 * unit rule applied."""
        if (p, q) == UNIT:
            return cls.unit(N, scalar(N, c) * 2)
        return cls.key(N, (p, q), c)

    def _key_product(self, k1, k2):
        N = self.N
        return torus_pair_product(k1, k2, lambda d: a_power(d, N))

    def key_text(self, key):
        return f"({key[0]},{key[1]})"


def torus_mul(u: TorusSkein, v: TorusSkein) -> TorusSkein:
    return u * v


def torus_thread(u: TorusSkein) -> TorusSkein:
    N = u.N
    return TorusSkein(N, {(N * p, N * q): c for (p, q), c in u.terms.items()})


def char_to_torus(c: CharElement) -> TorusSkein:
    N = c.N
    return TorusSkein(N, {(N * p, N * q): v for (p, q), v in c.terms.items()})


def centrality_check(c: TorusSkein, v: TorusSkein) -> bool:
    return c * v == v * c


def _chi(N, a, b, c=1):
    return CharElement.key(SURFACE, N, (a, b), c)


# -- spanning set B and basis B' ---------------------------------------------------------


def torus_B(N: int) -> list:
    h = (N - 1) // 2
    out = [(0, b) for b in range(N)]
    out += [(a, b) for a in range(1, N) for b in range(-h, N)]
    out += [(N, b) for b in range(1, h + 1)]
    out += [(a, N) for a in range(1, h + 1)]
    return sorted(out)


def torus_Bprime(N: int) -> list:
    return [(a, b) for a in range(N) for b in range(N)]


def _in_B(N, p, q):
    h = (N - 1) // 2
    if p == 0:
        return 0 <= q <= N - 1
    if 1 <= p <= N - 1:
        return -h <= q <= N - 1 or (q == N and p <= h)
    if p == N:
        return 1 <= q <= h
    return False


# -- rewriting identities --------------------------------------------------------------


class Rule(NamedTuple):
    """(p,q)_T = sum c * (N a, N b)_T * (r, s)_T; central None means the empty skein."""

    name: str
    key: tuple
    terms: tuple  # of (scalar, central (a, b) or None, torus key)


def _sgn(k):
    return -1 if k % 2 else 1


def _rule(N: int, p: int, q: int):
    """The rewriting identity that applies to canonical (p,q), or None."""
    A = lambda k: a_power(k, N)  # noqa: E731
    half = Fraction(1, 2)
    if p > N and p % N:
        p1, a1 = divmod(p, N)
        return Rule("step1-first-coordinate", (p, q), (
            (A(-N * p1 * q), (p1, 0), (a1, q)),
            (-A(-2 * N * p1 * q), None, (N * p1 - a1, -q)),
        ))
    if p >= 2 * N:
        k = p // N
        return Rule("step1-multiple-of-N", (p, q), (
            (scalar(N, _sgn((k - 1) * q)), (k - 1, 0), (N, q)),
            (-scalar(N, _sgn(2 * (k - 1) * q)), None, (N * (k - 2), -q)),
        ))
    if abs(q) > N:
        m = (abs(q) - 1) // N
        Q = N * m if q > 0 else -N * m
        return Rule("step1-second-coordinate", (p, q), (
            (A(Q * p), (0, Q // N), (p, q - Q)),
            (-A(2 * Q * p), None, (-p, 2 * Q - q)),
        ))
    if 1 <= p <= N - 1:
        if q == -N:
            k = p
            return Rule("step2-(k,-N)", (p, q), (
                (A(k * N), (0, 1), (k, 0)),
                (-A(-2 * k * N), None, (k, N)),
            ))
        if -(N - 1) <= q <= -(N + 1) // 2:
            a, b = p, -q
            return Rule("step2-(a,-b)", (p, q), (
                (half * _sgn(a + b + 1), (1, 1), (N - a, b - N)),
                (half * _sgn(a), (0, 1), (a, N - b)),
                (half * _sgn(b), (1, 0), (N - a, b)),
            ))
        if q == N and p >= (N + 1) // 2:
            a = p
            return Rule("step2-(a,N)", (p, q), (
                (half * _sgn(a + 1), (1, 1), (N - a, 0)),
                (half * _sgn(a), (0, 1), (a, 0)),
                (half, (1, 0), (N - a, N)),
            ))
    if p == N and q % N:
        if q < 0:
            k = -q
            return Rule("step2-(N,-k)", (p, q), (
                (A(N * k), (1, 0), (0, k)),
                (-A(2 * N * k), None, (N, k)),
            ))
        if q >= (N + 1) // 2:
            b = q
            return Rule("step2-(N,b)", (p, q), (
                (half * _sgn(b + 1), (1, 1), (0, N - b)),
                (half, (0, 1), (N, N - b)),
                (half * _sgn(b), (1, 0), (0, b)),
            ))
    return None


def rule_rhs(N: int, rule: Rule) -> TorusSkein:
    """Expand the right side of a rewriting identity with the product rule."""
    out = TorusSkein.zero(N)
    for c, central, key in rule.terms:
        t = TorusSkein.curve(N, *key)
        if central is not None:
            t = TorusSkein.curve(N, N * central[0], N * central[1]) * t
        out = out + t.scale(c)
    return out


def verify_rule(N: int, rule: Rule) -> bool:
    return rule_rhs(N, rule) == TorusSkein.curve(N, *rule.key)


def _check_rule(N, rule):
    if not verify_rule(N, rule):
        raise IdentityVerificationError(
            f"rewriting identity {rule.name} fails at (p,q)={rule.key}, N={N}"
        )


# -- the quadratic relation ------------------------------------------------------------


def quad_divisors(N: int) -> dict:
    """Central coefficients of the quadratic relation, in character-ring keys."""
    one = CharElement.unit(SURFACE, N)
    return {
        "D1": one * 2 - _chi(N, 2, 2),  # -(2N,2N)_T + 2
        "D2": _chi(N, 2, 1) - _chi(N, 0, 1),  # (2N,N)_T - (0,N)_T
        "D3": _chi(N, 1, 0) - _chi(N, 1, 2),  # -(N,2N)_T + (N,0)_T
    }


def quad_terms(N: int, p: int, q: int) -> list:
    """[(divisor name, sign, torus key)] whose central combination vanishes."""
    return [
        ("D2", _sgn(p), (p, q)),
        ("D3", _sgn(q), (N - p, N - q)),
        ("D1", 1, (p, q - N)),
    ]


def verify_quad(N: int, p: int, q: int) -> bool:
    D = quad_divisors(N)
    total = TorusSkein.zero(N)
    for name, sg, key in quad_terms(N, p, q):
        total = total + (char_to_torus(D[name]) * TorusSkein.curve(N, *key)).scale(sg)
    return total.is_zero()


def _divisors_nonzero(N):
    # the Laurent embedding is injective on the character ring
    return all(not laurent_embed(d).is_zero() for d in quad_divisors(N).values())


_verified: set = set()
_verify_lock = threading.Lock()


def _ensure_quad(N):
    with _verify_lock:
        if N in _verified:
            return
        for p in range(N):
            for q in range(N + 1):
                if not verify_quad(N, p, q):
                    raise IdentityVerificationError(
                        f"quadratic relation fails at (p,q)=({p},{q}), N={N}"
                    )
        if not _divisors_nonzero(N):
            raise InternalArithmeticError(f"a quadratic-relation divisor vanished at N={N}")
        _verified.add(N)


class IdentityCheck(NamedTuple):
    name: str
    params: tuple
    ok: bool


def verify_identities(N: int, radius: int | None = None) -> list[IdentityCheck]:
    """
    Run the identity suite at level N.

    Every rewriting identity that fires on a canonical key with
    |p|, |q| <= radius (default 3N), and the quadratic relation for
    (p,q) in {0..N-1} x {0..N}, each expanded with the product rule.
    """
    radius = 3 * N if radius is None else radius
    out = []
    seen = set()
    for p in range(0, radius + 1):
        for q in range(-radius, radius + 1):
            key = canonical_pair(p, q)
            if key in seen:
                continue
            seen.add(key)
            rule = _rule(N, *key)
            if rule is not None:
                out.append(IdentityCheck(rule.name, key, verify_rule(N, rule)))
    for p in range(N):
        for q in range(N + 1):
            out.append(IdentityCheck("quadratic-relation", (p, q), verify_quad(N, p, q)))
    return out


# -- reduction to B ------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _reduce_B_key(N: int, p: int, q: int) -> tuple:
    """
    Skein key (p,q) as ((B key, CharElement), ...).

    Key (0,0) is the empty skein on both sides; a rule term naming the
    curve (0,0)_T picks up its factor 2 here.
    """
    if (p, q) == UNIT:
        return ((UNIT, CharElement.unit(SURFACE, N)),)
    if p % N == 0 and q % N == 0:
        return ((UNIT, _chi(N, p // N, q // N)),)
    if _in_B(N, p, q):
        return (((p, q), CharElement.unit(SURFACE, N)),)
    rule = _rule(N, p, q)
    if rule is None:
        raise InternalArithmeticError(f"no rewriting identity for ({p},{q}) at N={N}")
    _check_rule(N, rule)
    acc: dict = {}
    for c, central, key in rule.terms:
        factor = CharElement.unit(SURFACE, N, c)
        if central is not None:
            factor = _chi(N, *central, c)
        key = canonical_pair(*key)
        if key == UNIT:
            factor = factor * 2
        for bkey, coeff in _reduce_B_key(N, *key):
            v = factor * coeff
            acc[bkey] = acc[bkey] + v if bkey in acc else v
    return tuple(sorted((k, v) for k, v in acc.items() if not v.is_zero()))


def torus_reduce_to_B(u: TorusSkein) -> dict:
    """u as {B key: CharElement}; the key (0,0) carries the empty-skein coefficient."""
    N = u.N
    acc: dict = {}
    for (p, q), c in u.terms.items():
        for bkey, coeff in _reduce_B_key(N, p, q):
            v = coeff.scale(c)
            acc[bkey] = acc[bkey] + v if bkey in acc else v
    return {k: acc[k] for k in sorted(acc) if not acc[k].is_zero()}


def torus_expand_B(d: dict, N: int) -> TorusSkein:
    out = TorusSkein.zero(N)
    for key, c in d.items():
        base = TorusSkein.unit(N) if key == UNIT else TorusSkein.key(N, key)
        out = out + char_to_torus(c) * base
    return out


# -- elimination of B - B' ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _eliminate(N: int, p: int, q: int):
    """
    A key of B - B' as (divisor name, ((B' key, CharElement numerator), ...)).

    Solves the quadratic relation for the term outside B'.
    """
    h = (N - 1) // 2
    if 1 <= p <= N - 1 and -h <= q <= -1:
        pp, qq, target = p, q + N, (p, q)
    elif 1 <= p <= h and q == N:
        pp, qq, target = p, N, (p, N)
    elif p == N and 1 <= q <= h:
        pp, qq, target = 0, N - q, (N, q)
    else:
        raise InternalArithmeticError(f"({p},{q}) is not in B - B' at N={N}")
    D = quad_divisors(N)
    div_name, div_sign, others = None, 1, []
    for name, sg, key in quad_terms(N, pp, qq):
        if canonical_pair(*key) == target:
            div_name, div_sign = name, sg
        else:
            others.append((name, sg, canonical_pair(*key)))
    if div_name is None:
        raise InternalArithmeticError(f"quadratic relation does not isolate {target}")
    acc: dict = {}
    for name, sg, key in others:
        # target = -(sum of the other terms) / (sign * divisor)
        coeff = D[name].scale(-sg * div_sign)
        if key == UNIT:
            coeff = coeff * 2
        elif not (0 <= key[0] <= N - 1 and 0 <= key[1] <= N - 1):
            raise InternalArithmeticError(f"quadratic relation left {key} outside B'")
        acc[key] = acc[key] + coeff if key in acc else coeff
    return div_name, tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _reduce_Bprime_key(N: int, p: int, q: int) -> tuple:
    """
    Canonical (p,q)_T as {B' key: (integral, over D1, over D2, over D3)} numerators.
    """
    _ensure_quad(N)
    slots: dict = {}
    idx = {"D1": 1, "D2": 2, "D3": 3}
    zero = CharElement.zero(SURFACE, N)

    def add(key, pos, v):
        cur = slots.setdefault(key, [zero, zero, zero, zero])
        cur[pos] = cur[pos] + v

    for bkey, coeff in _reduce_B_key(N, p, q):
        if bkey == UNIT or (0 <= bkey[0] <= N - 1 and 0 <= bkey[1] <= N - 1):
            add(bkey, 0, coeff)
            continue
        name, nums = _eliminate(N, *bkey)
        for key, num in nums:
            add(key, idx[name], coeff * num)
    return tuple(sorted((k, tuple(v)) for k, v in slots.items()))


def _combine(parts, D) -> CharFraction:
    n0, n1, n2, n3 = parts
    total = CharFraction(n0)
    for n, d in ((n1, D["D1"]), (n2, D["D2"]), (n3, D["D3"])):
        if not n.is_zero():
            total = total + CharFraction(n, d)
    return total.reduced()


def torus_reduce_to_Bprime(u: TorusSkein) -> ReducedSkein:
    """Coordinates of u against B' (lexicographic; the (0,0) slot is the empty skein)."""
    N = u.N
    D = quad_divisors(N)
    zero = CharElement.zero(SURFACE, N)
    acc: dict = {}
    for (p, q), c in u.terms.items():
        for key, parts in _reduce_Bprime_key(N, p, q):
            cur = acc.setdefault(key, [zero] * 4)
            for i, v in enumerate(parts):
                if not v.is_zero():
                    cur[i] = cur[i] + v.scale(c)
    basis = torus_Bprime(N)
    coeffs = [_combine(acc[k], D) if k in acc else CharFraction(zero) for k in basis]
    return ReducedSkein(SURFACE, N, basis, coeffs)


def torus_expand_cleared(r: ReducedSkein) -> tuple[TorusSkein, CharElement]:
    """(S, D) with D * r = S as skeins."""
    nums, den = r.cleared()
    out = TorusSkein.zero(r.N)
    for key, c in zip(r.basis, nums):
        if c.is_zero():
            continue
        base = TorusSkein.unit(r.N) if key == UNIT else TorusSkein.key(r.N, key)
        out = out + char_to_torus(c) * base
    return out, den


def torus_round_trip(u: TorusSkein) -> bool:
    """Clear denominators in the B' reduction of u, expand, and compare with D * u."""
    S, D = torus_expand_cleared(torus_reduce_to_Bprime(u))
    return S == char_to_torus(D) * u


# -- matrices ---------------------------------------------------------------------------


def _basis_skein(N, key):
    return TorusSkein.curve(N, *key)


def _to_T(vec):
    """Unit-slot coordinates -> (0,0)_T-basis coordinates (slot 0 halves)."""
    return [vec[0] * Fraction(1, 2)] + list(vec[1:])


def _from_T(vec):
    return [vec[0] * 2] + list(vec[1:])


def torus_left_matrix(u: TorusSkein) -> RingMatrix:
    """Left multiplication by u on B' = {(a,b)_T}, lexicographic, over the fraction field."""
    N = u.N
    basis = torus_Bprime(N)
    cols = [_to_T(torus_reduce_to_Bprime(u * _basis_skein(N, b)).coeffs) for b in basis]
    n = len(basis)
    return RingMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def torus_trace(u) -> CharElement | CharFraction:
    """
    Keep the (p,q)_T with N | p and N | q.

    A TorusSkein gives a CharElement; a ReducedSkein gives the CharFraction
    on its empty-skein slot, the only B' element with nonzero trace.
    """
    if isinstance(u, ReducedSkein):
        return u.coeffs[u.basis.index(UNIT)]
    N = u.N
    return CharElement(
        SURFACE, N,
        {(p // N, q // N): c for (p, q), c in u.terms.items() if p % N == 0 and q % N == 0},
    )


def torus_trace_matrix(u: TorusSkein) -> CharFraction:
    """(1/N^2) * trace of the left-multiplication matrix."""
    t = mat_trace(torus_left_matrix(u))
    return (t / (u.N * u.N)).reduced()


def torus_pairing_matrix(N: int) -> RingMatrix:
    """<b_i, b_j> = Tr(b_i * b_j) over B' with (0,0)_T = 2."""
    basis = [_basis_skein(N, b) for b in torus_Bprime(N)]
    return RingMatrix([[torus_trace(a * b) for b in basis] for a in basis])


def torus_pairing_matrix_rules(N: int) -> RingMatrix:
    """The same matrix from the divisibility rules with the (-1)^(ps+qr) signs."""
    basis = torus_Bprime(N)
    zero = CharElement.zero(SURFACE, N)
    rows = []
    for p, q in basis:
        row = []
        for r, s in basis:
            if (p, q) == UNIT or (r, s) == UNIT:
                other = (r, s) if (p, q) == UNIT else (p, q)
                v = _T_of(N, other) * 2 if other[0] % N == 0 and other[1] % N == 0 else zero
            elif (p + r) % N == 0 and (q + s) % N == 0:
                v = _T_of(N, (p + r, q + s)).scale(_sgn(p * s + q * r))
            elif (p - r) % N == 0 and (q - s) % N == 0:
                v = _T_of(N, (p - r, q - s)).scale(_sgn(p * s + q * r))
            else:
                v = zero
            row.append(v)
        rows.append(row)
    return RingMatrix(rows)


def _T_of(N, key):
    """(Na, Nb)_T as a character-ring element, with (0,0)_T = 2."""
    a, b = key[0] // N, key[1] // N
    if (a, b) == UNIT:
        return CharElement.unit(SURFACE, N, 2)
    return _chi(N, a, b)


def torus_pairing_det(N: int, method: str = "bareiss") -> CharElement:
    return mat_det(torus_pairing_matrix(N), method=method)


def torus_pairing_det_closed_form(N: int) -> CharElement:
    """
    The closed product formula with exponent m^2 on the last factor:
    2 (0,0)_T ((0,0)^2-(N,0)^2)^m ((0,0)^2-(0,N)^2)^m ((0,0)^2-(N,N)^2)^(m^2), m=(N-1)/2.
    """
    return _det_product(N, ((N - 1) // 2) ** 2)


def torus_pairing_det_block_form(N: int) -> CharElement:
    """
    Product of the block determinants: each four-element block splits into two
    2x2 blocks of determinant (0,0)_T^2 - (N,N)_T^2, so that factor has
    exponent 2 m^2 instead of m^2.
    """
    return _det_product(N, 2 * ((N - 1) // 2) ** 2)


def _det_product(N, last_exponent):
    m = (N - 1) // 2
    T00 = CharElement.unit(SURFACE, N, 2)
    sq = T00 * T00
    out = T00 * 2
    out = out * (sq - _chi(N, 1, 0) ** 2) ** m
    out = out * (sq - _chi(N, 0, 1) ** 2) ** m
    out = out * (sq - _chi(N, 1, 1) ** 2) ** last_exponent
    return out


# -- the basis C --------------------------------------------------------------------------


def basis_C_element(N: int, p: int, q: int) -> TorusSkein:
    """(p,0)_T * (0,q)_T with (0,0)_T = 2."""
    return TorusSkein.curve(N, p, 0) * TorusSkein.curve(N, 0, q)


def basis_C_expand(N: int, p: int, q: int) -> ReducedSkein:
    if not (0 <= p <= N - 1 and 0 <= q <= N - 1):
        raise ValueError(f"C index ({p},{q}) outside 0..{N - 1}")
    return torus_reduce_to_Bprime(basis_C_element(N, p, q))


def change_of_basis_C(N: int) -> RingMatrix:
    """Column (p,q) holds the B' coordinates ((0,0)_T convention) of the C element (p,q)."""
    cols = [_to_T(basis_C_expand(N, p, q).coeffs) for p, q in torus_Bprime(N)]
    n = N * N
    return RingMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def torus_reduce_to_C(u: TorusSkein) -> list:
    """
    Coordinates of u against C = {(p,0)_T * (0,q)_T}, 0 <= p, q < N, as a list
    of ((p, q), CharFraction); the C elements carry their T_0 factors of 2.
    """
    N = u.N
    rhs = _to_T(torus_reduce_to_Bprime(u).coeffs)
    try:
        x = mat_solve(change_of_basis_C(N), rhs)
    except SingularMatrixError as exc:
        raise InternalArithmeticError(f"C failed to be a basis: {exc}") from exc
    return list(zip(torus_Bprime(N), x))


def evaluate_torus_char(c: CharElement, lam, mu):
    """Value of a torus character-ring element at the point (lam, mu)."""
    return laurent_embed(c).evaluate([lam, mu])


def certify_C_basis(N: int, lam=2, mu=3):
    """Determinant of the C -> B' change of basis evaluated at (lam, mu); nonzero certifies C."""
    M = change_of_basis_C(N)

    def ev(x):
        den = evaluate_torus_char(x.den, lam, mu)
        if den.is_zero():
            raise ZeroDivisionError(f"denominator vanishes at lambda={lam}, mu={mu}")
        return evaluate_torus_char(x.num, lam, mu) / den

    return mat_det(M.map(ev))


# -- inversion --------------------------------------------------------------------------


def torus_invert(u: TorusSkein) -> ReducedSkein:
    """Right inverse w with u * w = 1 in S^-1 K_N; verified by multiplying back."""
    N = u.N
    L = torus_left_matrix(u)
    one = CharElement.unit(SURFACE, N)
    zero = CharElement.zero(SURFACE, N)
    rhs = _to_T([CharFraction(one)] + [CharFraction(zero)] * (N * N - 1))
    try:
        w = mat_solve(L, rhs)
    except SingularMatrixError as exc:
        raise SingularMatrixError(f"not a unit at the generic fiber: {exc}") from exc
    r = ReducedSkein(SURFACE, N, torus_Bprime(N), _from_T(w))
    S, D = torus_expand_cleared(r)
    if u * S != char_to_torus(D):
        raise InternalArithmeticError("u * u^-1 != 1 in the torus")
    return r
