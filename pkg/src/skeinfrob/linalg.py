"""
Exact dense linear algebra over character rings and their fraction fields.

Two determinant routes are provided:

* ``"bareiss"`` (default): split the matrix into the connected blocks of its
  sparsity pattern, clear denominators row by row, and run fraction-free
  Bareiss elimination inside chi(F), using exact Laurent division.
* ``"gauss"``: textbook Gaussian elimination over the fraction field on the
  full matrix, pivoting on the first nonzero entry (integral entries first).

The two share no code beyond ring arithmetic, so they cross-check each other.
Both also work for matrices of plain ``CycloScalar`` entries.
"""
from __future__ import annotations

from .charring import CharElement, CharFraction
from .cyclotomic import CycloScalar
from .errors import DomainError, InternalArithmeticError, SingularMatrixError


def _kind(x):
    if isinstance(x, CharElement):
        return "element"
    if isinstance(x, CharFraction):
        return "fraction"
    if isinstance(x, CycloScalar):
        return "scalar"
    raise TypeError(f"unsupported matrix entry {type(x).__name__}")


class RingMatrix:
    """Rectangular matrix with uniformly typed entries (CharElement, CharFraction or CycloScalar)."""

    __slots__ = ("rows", "kind")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DomainError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DomainError("ragged matrix")
        kinds = {_kind(x) for r in rows for x in r}
        if len(kinds) != 1:
            raise DomainError(f"mixed entry types {sorted(kinds)}")
        self.rows = rows
        self.kind = kinds.pop()

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def is_square(self):
        n, m = self.shape
        return n == m

    def map(self, f) -> RingMatrix:
        return RingMatrix([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> RingMatrix:
        return RingMatrix([list(c) for c in zip(*self.rows)])

    def to_fractions(self) -> RingMatrix:
        if self.kind == "element":
            return self.map(CharFraction)
        return self

    def __eq__(self, other):
        if not isinstance(other, RingMatrix) or self.shape != other.shape:
            return NotImplemented if not isinstance(other, RingMatrix) else False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        return mat_mul(self, other)

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)

    def __repr__(self):
        n, m = self.shape
        return f"<RingMatrix {n}x{m} of {self.kind}>"


def _zero_like(x):
    if isinstance(x, CycloScalar):
        return CycloScalar.zero(x.N)
    if isinstance(x, CharFraction):
        return CharFraction(CharElement.zero(x.surface, x.N))
    return CharElement.zero(x.surface, x.N)


def _one_like(x):
    if isinstance(x, CycloScalar):
        return CycloScalar.one(x.N)
    if isinstance(x, CharFraction):
        return CharFraction(CharElement.unit(x.surface, x.N))
    return CharElement.unit(x.surface, x.N)


def identity_matrix(n: int, like) -> RingMatrix:
    zero, one = _zero_like(like), _one_like(like)
    return RingMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    n, k = a.shape
    k2, m = b.shape
    if k != k2:
        raise DomainError(f"shape mismatch {a.shape} @ {b.shape}")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = _zero_like(a[0, 0])
            for t in range(k):
                x, y = a[i, t], b[t, j]
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return RingMatrix(out)


def mat_trace(m: RingMatrix):
    """Sum of the diagonal; callers apply the 1/dim normalization."""
    if not m.is_square():
        raise DomainError(f"trace of non-square {m.shape} matrix")
    acc = _zero_like(m[0, 0])
    for i in range(m.shape[0]):
        acc = acc + m[i, i]
    return acc


# -- sparsity blocks ------------------------------------------------------------


def _blocks(rows):
    """Connected components of the row/column incidence graph of nonzero entries."""
    n, m = len(rows), len(rows[0])
    parent = list(range(n + m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if not x.is_zero():
                a, b = find(i), find(n + j)
                if a != b:
                    parent[a] = b
    groups: dict = {}
    for v in range(n + m):
        groups.setdefault(find(v), ([], []))
        if v < n:
            groups[find(v)][0].append(v)
        else:
            groups[find(v)][1].append(v - n)
    return sorted(groups.values(), key=lambda g: (g[0] or [n], g[1] or [m]))


def _perm_sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


# -- fraction-free elimination in chi(F) ------------------------------------------


def _clear_rows(rows):
    """Scale each row of CharFractions into chi(F); returns (element rows, multipliers)."""
    out, mults = [], []
    for r in rows:
        dens = []
        for x in r:
            if not x.is_zero() and not x.den.is_scalar() and not any(x.den == d for d in dens):
                dens.append(x.den)
        mult = None
        new = []
        for x in r:
            if x.is_zero():
                new.append(x.num)
                continue
            v = x.num
            for d in dens:
                if not (d == x.den):
                    v = v * d
            if x.den.is_scalar():
                v = v.scale(x.den.scalar_value().inverse())
            new.append(v)
        for d in dens:
            mult = d if mult is None else mult * d
        out.append(new)
        mults.append(mult)
    return out, mults


def _bareiss_forward(M, ncols_pivot):
    """
    In-place fraction-free elimination on Laurent rows; pivots over the first
    ``ncols_pivot`` columns. Returns (sign, pivots) or raises SingularMatrixError.
    """
    n = len(M)
    width = len(M[0])
    sign = 1
    prev = None
    pivots = []
    for k in range(ncols_pivot):
        cands = [i for i in range(k, n) if not M[i][k].is_zero()]
        if not cands:
            raise SingularMatrixError(f"no pivot in column {k}")
        best = min(cands, key=lambda i: (len(M[i][k].terms), i))
        if best != k:
            M[k], M[best] = M[best], M[k]
            sign = -sign
        piv = M[k][k]
        pivots.append(piv)
        for i in range(k + 1, n):
            lead = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, width):
                a = row_i[j]
                b = row_k[j]
                if lead.is_zero() or b.is_zero():
                    if a.is_zero():
                        continue
                    v = piv * a
                else:
                    v = piv * a - lead * b if not a.is_zero() else -(lead * b)
                if prev is not None and not v.is_zero():
                    q = v.exact_div(prev)
                    if q is None:
                        raise InternalArithmeticError("Bareiss step is not exact")
                    v = q
                row_i[j] = v
            row_i[k] = lead * 0
        prev = piv
    return sign, pivots


def _det_elements_bareiss(rows):
    """Determinant of a square block of CharElements."""
    like = rows[0][0]
    n = len(rows)
    if n == 1:
        return rows[0][0]
    M = [[x.to_laurent() for x in r] for r in rows]
    try:
        sign, pivots = _bareiss_forward(M, n)
    except SingularMatrixError:
        return CharElement.zero(like.surface, like.N)
    det = pivots[-1] if sign == 1 else -pivots[-1]
    return CharElement.from_laurent(like.surface, like.N, det)


def _block_structure(rows):
    n = len(rows)
    blocks = _blocks(rows)
    for rs, cs in blocks:
        if len(rs) != len(cs):
            return None, 0
    row_order = [i for rs, _ in blocks for i in rs]
    col_order = [j for _, cs in blocks for j in cs]
    sign = _perm_sign(row_order) * _perm_sign(col_order)
    assert len(row_order) == n
    return blocks, sign


def _det_bareiss(m: RingMatrix):
    rows = m.rows
    like = rows[0][0]
    blocks, sign = _block_structure(rows)
    if m.kind == "scalar":
        # plain field: eliminate each block by Gauss
        if blocks is None:
            return _zero_like(like)
        det = _one_like(like) * sign
        for rs, cs in blocks:
            det = det * _det_gauss(RingMatrix([[rows[i][j] for j in cs] for i in rs]))
            if det.is_zero():
                break
        return det
    if blocks is None:
        zero = CharElement.zero(like.surface, like.N)
        return zero if m.kind == "element" else CharFraction(zero)
    num = CharElement.unit(like.surface, like.N, sign)
    den = CharElement.unit(like.surface, like.N)
    for rs, cs in blocks:
        sub = [[rows[i][j] for j in cs] for i in rs]
        if m.kind == "fraction":
            sub, mults = _clear_rows(sub)
            for mu in mults:
                if mu is not None:
                    den = den * mu
        d = _det_elements_bareiss(sub)
        if d.is_zero():
            num = d
            break
        num = num * d
    if m.kind == "element":
        return num
    return CharFraction(num, den).reduced()


# -- fraction-field elimination ------------------------------------------------------


def _det_gauss(m: RingMatrix):
    rows = [list(r) for r in m.to_fractions().rows]
    n = len(rows)
    if len(rows[0]) != n:
        raise DomainError("determinant of a non-square matrix")
    det = _one_like(rows[0][0])
    for k in range(n):
        nz = [i for i in range(k, n) if not rows[i][k].is_zero()]
        if not nz:
            det = _zero_like(rows[0][0])
            break
        integral = [i for i in nz if _is_integral(rows[i][k])]
        p = integral[0] if integral else nz[0]
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        piv = rows[k][k]
        det = det * piv
        inv = piv.inverse()
        for i in range(k + 1, n):
            if rows[i][k].is_zero():
                continue
            f = rows[i][k] * inv
            for j in range(k + 1, n):
                if not rows[k][j].is_zero():
                    rows[i][j] = rows[i][j] - f * rows[k][j]
            rows[i][k] = _zero_like(piv)
    if m.kind == "element":
        red = det.reduced()
        if not red.is_integral():
            raise InternalArithmeticError("determinant of a chi(F)-matrix left a denominator")
        return red.num
    if m.kind == "fraction":
        return det.reduced()
    return det


def _is_integral(x):
    return isinstance(x, CycloScalar) or x.den.is_scalar()


def mat_det(m: RingMatrix, method: str = "bareiss"):
    """
    Exact determinant.

    For CharElement input the result is a CharElement (the elimination's
    denominator is certified to divide out); for CharFraction input a
    CharFraction; for CycloScalar input a CycloScalar.
    """
    if not m.is_square():
        raise DomainError(f"determinant of non-square {m.shape} matrix")
    if method == "bareiss":
        return _det_bareiss(m)
    if method == "gauss":
        return _det_gauss(m)
    raise DomainError(f"unknown determinant method {method!r}")


# -- linear solve -----------------------------------------------------------------


def _solve_block(rows, rhs):
    """Solve one square block over the fraction field; returns CharFractions."""
    like = rows[0][0]
    fr_rows = [[CharFraction.lift(x, like) for x in r] + [CharFraction.lift(b, like)]
               for r, b in zip(rows, rhs)]
    cleared, _ = _clear_rows(fr_rows)
    n = len(rows)
    M = [[x.to_laurent() for x in r] for r in cleared]
    _bareiss_forward(M, n)
    d = M[n - 1][n - 1]
    ys = [None] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n] * d
        for j in range(i + 1, n):
            if not M[i][j].is_zero() and not ys[j].is_zero():
                acc = acc - M[i][j] * ys[j]
        q = acc.exact_div(M[i][i])
        if q is None:
            raise InternalArithmeticError("back substitution is not exact")
        ys[i] = q
    surf, N = like.surface, like.N
    dd = CharElement.from_laurent(surf, N, d)
    return [CharFraction(CharElement.from_laurent(surf, N, y), dd).reduced() for y in ys]


def mat_solve(m: RingMatrix, rhs) -> list:
    """
    Solve m x = rhs exactly over the fraction field.

    Returns a list of CharFraction (or CycloScalar for scalar matrices).
    Raises SingularMatrixError when m has no inverse; the product m x is
    checked against rhs before returning.
    """
    if not m.is_square():
        raise DomainError(f"solve with non-square {m.shape} matrix")
    n = m.shape[0]
    if len(rhs) != n:
        raise DomainError("right-hand side length mismatch")
    if m.kind == "scalar":
        x = _solve_gauss_scalar(m, rhs)
    else:
        blocks, _ = _block_structure(m.rows)
        if blocks is None:
            raise SingularMatrixError("sparsity pattern forces a zero determinant")
        like = m[0, 0]
        x = [None] * n
        for rs, cs in blocks:
            sub = [[m.rows[i][j] for j in cs] for i in rs]
            sol = _solve_block(sub, [rhs[i] for i in rs])
            for j, v in zip(cs, sol):
                x[j] = v
        x = [CharFraction.lift(v, like) for v in x]
    _check_solution(m, x, rhs)
    return x


def _solve_gauss_scalar(m, rhs):
    n = m.shape[0]
    rows = [list(r) + [b] for r, b in zip(m.rows, rhs)]
    for k in range(n):
        p = next((i for i in range(k, n) if not rows[i][k].is_zero()), None)
        if p is None:
            raise SingularMatrixError(f"no pivot in column {k}")
        rows[k], rows[p] = rows[p], rows[k]
        inv = rows[k][k].inverse()
        rows[k] = [x * inv for x in rows[k]]
        for i in range(n):
            if i != k and not rows[i][k].is_zero():
                f = rows[i][k]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return [rows[i][n] for i in range(n)]


def _check_solution(m, x, rhs):
    for i, r in enumerate(m.rows):
        acc = _zero_like(x[0])
        for a, b in zip(r, x):
            if not a.is_zero() and not b.is_zero():
                acc = acc + b * a
        if not (acc == rhs[i]):
            raise InternalArithmeticError(f"solution fails row {i}")
