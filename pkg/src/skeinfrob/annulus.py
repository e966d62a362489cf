"""
The annulus skein algebra K_N(Sigma_{0,2}) = C[x] as a module over its
character ring, with basis T_0, ..., T_{N-1}.

Skeins are stored in the unit convention (key 0 is the empty skein). The
matrices follow the classical layout in the T_0 basis, where the first basis
vector is T_0 = 2 * unit; ``_to_t0`` and ``_from_t0`` move between the two.
"""
from __future__ import annotations

import threading
from fractions import Fraction

from .charring import CharElement, CharFraction, char_key_text
from .chebyshev import cheb_index_product
from .cyclotomic import scalar
from .errors import InternalArithmeticError, SingularMatrixError
from .linalg import RingMatrix, mat_det, mat_solve, mat_trace
from .skein import ReducedSkein, SkeinElement

SURFACE = "annulus"


class AnnulusSkein(SkeinElement):
    """sum c_k T_k(x); key 0 is the empty skein, so T_0 = 2 * unit."""

    __slots__ = ()
    surface = SURFACE

    @classmethod
    def T(cls, N, k, c=1):
        """The Chebyshev skein T_k(x), honoring T_0 = 2."""
        if k == 0:
            return cls.unit(N, scalar(N, c) * 2)
        return cls.key(N, k, c)

    def _key_product(self, k1, k2):
        return cheb_index_product(k1, k2)

    def key_text(self, key):
        return f"T[{key}]"


def ann_mul(u: AnnulusSkein, v: AnnulusSkein) -> AnnulusSkein:
    return u * v


def ann_thread(u: AnnulusSkein) -> AnnulusSkein:
    """T_k -> T_{Nk}; the unit stays the unit."""
    return AnnulusSkein(u.N, {k * u.N: c for k, c in u.terms.items()})


def char_to_annulus(c: CharElement) -> AnnulusSkein:
    """Read a character-ring element as a skein (key a -> T_{Na})."""
    return AnnulusSkein(c.N, {a * c.N: v for a, v in c.terms.items()})


def _chi(N, a):
    return CharElement.key(SURFACE, N, a)


# -- reduction to the finite basis ----------------------------------------------

_reduce_cache: dict = {}
_reduce_lock = threading.Lock()


def _reduce_key(N: int, k: int) -> tuple:
    """Slot coefficients (unit convention) of T_k, built bottom-up and cached."""
    with _reduce_lock:
        table = _reduce_cache.setdefault(N, [])
        zero = CharElement.zero(SURFACE, N)
        while len(table) <= k:
            j = len(table)
            slots = [zero] * N
            if j < N:
                slots[j] = CharElement.unit(SURFACE, N)
            else:
                a, b = divmod(j, N)
                if b == 0:
                    slots[0] = _chi(N, a)
                else:
                    # T_{aN+b} = T_{aN} T_b - T_{aN-b}
                    slots[b] = _chi(N, a)
                    slots = [s - t for s, t in zip(slots, table[a * N - b])]
            table.append(tuple(slots))
        return table[k]


def ann_basis(N: int) -> tuple:
    return tuple(range(N))


def ann_reduce(u: AnnulusSkein) -> ReducedSkein:
    """Coordinates of u against T_0..T_{N-1} (slot 0 is the unit)."""
    N = u.N
    acc = [CharElement.zero(SURFACE, N)] * N
    for k, c in u.terms.items():
        for i, s in enumerate(_reduce_key(N, k)):
            if not s.is_zero():
                acc[i] = acc[i] + s.scale(c)
    return ReducedSkein(SURFACE, N, ann_basis(N), acc)


def ann_expand_cleared(r: ReducedSkein) -> tuple[AnnulusSkein, CharElement]:
    """(S, D) with D * r = S as skeins; D is the common denominator."""
    nums, den = r.cleared()
    out = AnnulusSkein.zero(r.N)
    for b, c in zip(r.basis, nums):
        if not c.is_zero():
            out = out + char_to_annulus(c) * AnnulusSkein.key(r.N, b)
    return out, den


def ann_expand(r: ReducedSkein) -> AnnulusSkein:
    if not r.is_integral():
        raise ValueError("expansion needs integral coefficients; use ann_expand_cleared")
    return ann_expand_cleared(r)[0]


# -- matrices -------------------------------------------------------------------------


def _to_t0(vec):
    """Unit-slot coordinates -> T_0-basis coordinates."""
    return [vec[0] * Fraction(1, 2)] + list(vec[1:])


def _from_t0(vec):
    return [vec[0] * 2] + list(vec[1:])


def _t0_basis_skein(N, j):
    return AnnulusSkein.T(N, j)


def ann_left_matrix(u: AnnulusSkein) -> RingMatrix:
    """Matrix of left multiplication by u on the basis T_0..T_{N-1}."""
    N = u.N
    cols = []
    for j in range(N):
        cols.append(_to_t0(ann_reduce(u * _t0_basis_skein(N, j)).coeffs))
    rows = [[cols[j][i] for j in range(N)] for i in range(N)]
    return RingMatrix([[x.num if x.is_integral() else x for x in r] for r in rows])


def ann_left_matrix_formula(N: int, k: int) -> RingMatrix:
    """Casewise closed-form matrix of L_{T_k}, 1 <= k <= N-1, in the T_0 basis."""
    zero = CharElement.zero(SURFACE, N)
    one = CharElement.unit(SURFACE, N)
    TN = _chi(N, 1)
    m = [[zero] * N for _ in range(N)]

    def bump(i, v):
        m[i][j] = m[i][j] + v

    for j in range(N):
        if j == 0:
            bump(k, one * 2)
        elif k + j <= N - 1:
            bump(abs(k - j), one)
            bump(k + j, one)
        else:
            bump(abs(k - j), one)
            if 2 * N - k - j <= N - 1:
                bump(2 * N - k - j, -one)
            if k + j - N != 0:
                bump(k + j - N, TN)
            else:
                bump(0, TN.scale(Fraction(1, 2)))
    return RingMatrix(m)


def ann_trace(u: AnnulusSkein) -> CharElement:
    """Keep the T_k with N | k; the empty skein has trace 1."""
    return CharElement(SURFACE, u.N, {k // u.N: c for k, c in u.terms.items() if k % u.N == 0})


def ann_trace_matrix(u: AnnulusSkein) -> CharElement:
    """(1/N) * trace of the left-multiplication matrix."""
    t = mat_trace(ann_left_matrix(u))
    t = CharFraction.lift(t, t).reduced()
    if not t.is_integral():
        raise InternalArithmeticError("annulus matrix trace left a denominator")
    return t.num.scale(Fraction(1, u.N))


def ann_pairing_matrix(N: int) -> RingMatrix:
    """sigma(T_i, T_j) = Tr(T_i T_j) on the T_0 basis."""
    basis = [_t0_basis_skein(N, i) for i in range(N)]
    return RingMatrix([[ann_trace(a * b) for b in basis] for a in basis])


def ann_pairing_matrix_block_form(N: int) -> RingMatrix:
    """A 2T_0 corner, then T_0 on the diagonal and T_N on the antidiagonal of the rest."""
    zero = CharElement.zero(SURFACE, N)
    T0 = CharElement.unit(SURFACE, N, 2)
    TN = _chi(N, 1)
    m = [[zero] * N for _ in range(N)]
    m[0][0] = T0 * 2
    for i in range(1, N):
        m[i][i] = T0
        m[i][N - i] = TN
    return RingMatrix(m)


def ann_pairing_det(N: int, method: str = "bareiss") -> CharElement:
    return mat_det(ann_pairing_matrix(N), method=method)


def ann_pairing_det_closed_form(N: int) -> CharElement:
    """2 T_0 (T_0^2 - T_N^2)^((N-1)/2) with T_0 = 2."""
    T0 = CharElement.unit(SURFACE, N, 2)
    TN = _chi(N, 1)
    return (T0 * 2) * (T0 * T0 - TN * TN) ** ((N - 1) // 2)


def ann_invert(u: AnnulusSkein) -> ReducedSkein:
    """u^-1 in S^-1 K_N as coordinates over the fraction field; checked by multiplying back."""
    if u.is_zero():
        raise ZeroDivisionError("the zero skein has no inverse")
    N = u.N
    L = ann_left_matrix(u)
    like = CharElement.unit(SURFACE, N)
    rhs = _to_t0([like] + [CharElement.zero(SURFACE, N)] * (N - 1))
    try:
        w = mat_solve(L, rhs)
    except SingularMatrixError as exc:
        raise InternalArithmeticError(
            f"left multiplication by a nonzero annulus skein looked singular: {exc}"
        ) from exc
    r = ReducedSkein(SURFACE, N, ann_basis(N), _from_t0(w))
    S, D = ann_expand_cleared(r)
    if u * S != char_to_annulus(D):
        raise InternalArithmeticError("u * u^-1 != 1 in the annulus")
    return r


def ann_text_key(a) -> str:
    return char_key_text(SURFACE, a)
