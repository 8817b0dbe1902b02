"""Exact dense linear algebra over a fixed scalar field.

Elimination is deterministic: columns are processed left to right and the
pivot is always the first row with a nonzero entry, so every derived object
(kernel bases, solutions, characteristic polynomials) is reproducible
bit for bit.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import FieldMismatch, InvalidInput, ShapeMismatch
from .fields import FieldDescriptor, Scalar

Vector = tuple  # tuple[Scalar, ...]


class MatrixE(object):
    """Dense matrix with entries in one exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldDescriptor, rows: Sequence[Sequence[Scalar]]):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ShapeMismatch("ragged rows")
            for x in r:
                if x.field != field:
                    raise FieldMismatch("entry field differs from matrix field")

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldDescriptor, n: int) -> "MatrixE":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldDescriptor, nrows: int, ncols: int) -> "MatrixE":
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_ints(cls, field: FieldDescriptor, rows: Sequence[Sequence[int]]) -> "MatrixE":
        return cls(field, [[field.from_int(x) for x in r] for r in rows])

    @classmethod
    def column(cls, field: FieldDescriptor, entries: Sequence[Scalar]) -> "MatrixE":
        return cls(field, [[x] for x in entries])

    # -- basics -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixE)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(repr(x) for x in r) for r in self.rows)
        return f"MatrixE({self.nrows}x{self.ncols}: {body})"

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "MatrixE":
        return MatrixE(self.field, list(zip(*self.rows)) if self.rows else [])

    def trace(self) -> Scalar:
        if not self.is_square:
            raise ShapeMismatch("trace of a non-square matrix")
        t = self.field.zero()
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def map(self, fn: Callable[[Scalar], Scalar]) -> "MatrixE":
        return MatrixE(self.field, [[fn(x) for x in r] for r in self.rows])

    def scale(self, s: Scalar) -> "MatrixE":
        return self.map(lambda x: x * s)

    def __add__(self, other: "MatrixE") -> "MatrixE":
        self._check_same_shape(other)
        return MatrixE(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "MatrixE") -> "MatrixE":
        self._check_same_shape(other)
        return MatrixE(
            self.field,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> "MatrixE":
        return self.map(lambda x: -x)

    def __mul__(self, other: "MatrixE") -> "MatrixE":
        if not isinstance(other, MatrixE):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch("matrix product across different fields")
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        cols = other.transpose().rows
        zero = self.field.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixE(self.field, out)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector, returned as a tuple."""
        if len(v) != self.ncols:
            raise ShapeMismatch("vector length does not match column count")
        zero = self.field.zero()
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def _check_same_shape(self, other: "MatrixE") -> None:
        if self.field != other.field:
            raise FieldMismatch("mixed fields")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("shape mismatch")

    # -- elimination ---------------------------------------------------------

    def rref(self) -> "tuple[MatrixE, tuple[int, ...]]":
        """Reduced row echelon form with first-nonzero pivot selection.

        Returns the reduced matrix and the tuple of pivot column indices.
        """
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        rank = 0
        for col in range(self.ncols):
            piv = None
            for i in range(rank, self.nrows):
                if rows[i][col]:
                    piv = i
                    break
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = rows[rank][col].inverse()
            rows[rank] = [x * inv for x in rows[rank]]
            for i in range(self.nrows):
                if i != rank and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
            pivots.append(col)
            rank += 1
            if rank == self.nrows:
                break
        return MatrixE(self.field, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Scalar:
        """Determinant by Gaussian elimination with exact division."""
        if not self.is_square:
            raise ShapeMismatch("determinant of a non-square matrix")
        n = self.nrows
        rows = [list(r) for r in self.rows]
        det = self.field.one()
        sign = False
        for col in range(n):
            piv = None
            for i in range(col, n):
                if rows[i][col]:
                    piv = i
                    break
            if piv is None:
                return self.field.zero()
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                sign = not sign
            det = det * rows[col][col]
            inv = rows[col][col].inverse()
            for i in range(col + 1, n):
                if rows[i][col]:
                    f = rows[i][col] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
        return -det if sign else det

    def inverse(self) -> "MatrixE":
        if not self.is_square:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        aug = MatrixE(
            self.field,
            [list(self.rows[i]) + list(MatrixE.identity(self.field, n).rows[i]) for i in range(n)],
        )
        red, pivots = aug.rref()
        if pivots[:n] != tuple(range(n)):
            raise InvalidInput("matrix is singular")
        return MatrixE(self.field, [r[n:] for r in red.rows])

    def column_space_basis(self) -> "list[Vector]":
        """Canonical basis of the column space: nonzero rows of rref(A^T)."""
        red, pivots = self.transpose().rref()
        return [red.rows[i] for i in range(len(pivots))]

    # -- vertical stacking ----------------------------------------------------

    @classmethod
    def vstack(cls, blocks: "Sequence[MatrixE]") -> "MatrixE":
        field = blocks[0].field
        ncols = blocks[0].ncols
        rows: list[Sequence[Scalar]] = []
        for b in blocks:
            if b.field != field or b.ncols != ncols:
                raise ShapeMismatch("vstack blocks must agree in field and width")
            rows.extend(b.rows)
        return cls(field, rows)

    def kron(self, other: "MatrixE") -> "MatrixE":
        """Kronecker product, row-major block layout."""
        if self.field != other.field:
            raise FieldMismatch("mixed fields")
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                row = []
                for a in r1:
                    for b in r2:
                        row.append(a * b)
                out.append(row)
        return MatrixE(self.field, out)


def solve_linear(A: MatrixE, b: Sequence[Scalar]) -> "Vector | None":
    """One solution of A x = b, or ``None`` when the system is inconsistent.

    Deterministic Gaussian elimination, free variables set to zero.
    """
    if isinstance(b, MatrixE):
        if b.ncols != 1:
            raise ShapeMismatch("right side must be a column")
        b = b.col(0)
    if len(b) != A.nrows:
        raise ShapeMismatch("right side length does not match row count")
    for x in b:
        if x.field != A.field:
            raise FieldMismatch("right side over a different field")
    aug = MatrixE(A.field, [list(r) + [b[i]] for i, r in enumerate(A.rows)])
    red, pivots = aug.rref()
    if pivots and pivots[-1] == A.ncols:
        return None
    zero = A.field.zero()
    x = [zero] * A.ncols
    for i, col in enumerate(pivots):
        x[col] = red.rows[i][A.ncols]
    return tuple(x)


def kernel_basis(A: MatrixE) -> "list[Vector]":
    """Canonical basis of the right kernel of A.

    One vector per free column, ordered by free column index, with a 1 in
    the free position (the standard RREF back-substitution basis).
    """
    red, pivots = A.rref()
    pivset = set(pivots)
    free = [j for j in range(A.ncols) if j not in pivset]
    zero, one = A.field.zero(), A.field.one()
    out = []
    for f in free:
        v = [zero] * A.ncols
        v[f] = one
        for i, col in enumerate(pivots):
            v[col] = -red.rows[i][f]
        out.append(tuple(v))
    return out


def char_poly(A: MatrixE) -> "tuple[Scalar, ...]":
    """Coefficients of det(xI - A), lowest degree first (monic).

    Division-free Berkowitz recursion, so the same code path is exact over
    Q, F_p, and cyclotomic fields alike.
    """
    if not A.is_square:
        raise ShapeMismatch("characteristic polynomial of a non-square matrix")
    field = A.field
    n = A.nrows
    one, zero = field.one(), field.zero()
    if n == 0:
        return (one,)
    # coeffs for the leading k x k block, highest degree first
    coeffs = [one, -A.rows[0][0]]
    for k in range(2, n + 1):
        a = A.rows[k - 1][k - 1]
        R = A.rows[k - 1][: k - 1]
        C = [A.rows[i][k - 1] for i in range(k - 1)]
        sub = [A.rows[i][: k - 1] for i in range(k - 1)]
        # q = (1, -a, -R C, -R A' C, -R A'^2 C, ...)
        q = [one, -a]
        w = list(C)
        for _ in range(k - 1):
            dot = zero
            for x, y in zip(R, w):
                if x and y:
                    dot = dot + x * y
            q.append(-dot)
            w_new = []
            for i in range(k - 1):
                acc = zero
                for j in range(k - 1):
                    if sub[i][j] and w[j]:
                        acc = acc + sub[i][j] * w[j]
                w_new.append(acc)
            w = w_new
        new = [zero] * (k + 1)
        for i in range(k + 1):
            acc = zero
            for j in range(len(coeffs)):
                d = i - j
                if 0 <= d < len(q) and q[d] and coeffs[j]:
                    acc = acc + q[d] * coeffs[j]
            new[i] = acc
        coeffs = new
    return tuple(reversed(coeffs))


def poly_as_integers(coeffs: Sequence[Scalar]) -> "tuple[int, ...]":
    """Convert exact polynomial coefficients to rational integers.

    Raises if any coefficient is not a rational integer.
    """
    return tuple(c.as_int() for c in coeffs)


def integer_roots(coeffs: Sequence[int]) -> "tuple[list[int], bool]":
    """All integer roots of a monic integer polynomial, with multiplicity.

    Roots are found by trial division over the divisors of the constant term
    (plus 0 when the constant term vanishes). The flag is True exactly when
    the product of the found linear factors equals the polynomial, i.e. it
    splits over the integers. Roots are returned sorted ascending.
    """
    for c in coeffs:
        if not isinstance(c, int):
            raise InvalidInput("polynomial must have integer coefficients")
    cs = list(coeffs)
    if cs[-1] != 1:
        raise InvalidInput("polynomial must be monic")

    def eval_at(poly: list[int], r: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = acc * r + c
        return acc

    def deflate(poly: list[int], r: int) -> list[int]:
        # synthetic division by (x - r); the remainder vanishes since r is a root
        n = len(poly) - 1
        q = [0] * n
        q[n - 1] = poly[n]
        for i in range(n - 1, 0, -1):
            q[i - 1] = poly[i] + r * q[i]
        return q

    roots: list[int] = []
    cur = cs[:]
    while len(cur) > 1:
        if cur[0] == 0:
            roots.append(0)
            cur = cur[1:]
            continue
        const = abs(cur[0])
        found = None
        d = 1
        while d * d <= const:
            if const % d == 0:
                for r in (d, -d, const // d, -(const // d)):
                    if eval_at(cur, r) == 0:
                        found = r
                        break
                if found is not None:
                    break
            d += 1
        if found is None:
            break
        roots.append(found)
        cur = deflate(cur, found)
    complete = len(cur) == 1 and cur[0] == 1
    return sorted(roots), complete
