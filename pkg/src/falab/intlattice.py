"""Integer lattices in row Hermite normal form.

A lattice is stored as an echelon basis: upper triangular by pivot column,
positive pivots, entries above each pivot reduced modulo it. This canonical
form makes membership tests and line intersections exact and deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import InvalidInput, ShapeMismatch


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


class IntLattice:
    """A sublattice of Z^d given by generator rows, kept in row HNF."""

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: int, rows: Sequence[Sequence[int]] = ()):
        self.ambient = ambient
        self.rows = _hnf(ambient, rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntLattice)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"IntLattice({self.ambient}, {list(map(list, self.rows))})"

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient:
            raise ShapeMismatch("vector has wrong ambient dimension")
        rem = list(v)
        for row in self.rows:
            p = _pivot(row)
            if rem[p]:
                if rem[p] % row[p]:
                    return False
                q = rem[p] // row[p]
                for j in range(p, self.ambient):
                    rem[j] -= q * row[j]
        return not any(rem)

    def rational_coordinates(self, v: Sequence[int]) -> "list[Fraction] | None":
        """Coordinates of v in the HNF basis over Q, or None if outside the span."""
        rem = [Fraction(x) for x in v]
        coords = []
        for row in self.rows:
            p = _pivot(row)
            c = rem[p] / row[p]
            coords.append(c)
            if c:
                for j in range(p, self.ambient):
                    rem[j] -= c * row[j]
        if any(rem):
            return None
        return coords


def _pivot(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    raise AssertionError("zero row in HNF basis")


def _hnf(ambient: int, gens: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Row Hermite normal form of the span of ``gens``."""
    basis: list[list[int]] = []  # echelon rows, sorted by pivot column
    pivcol: list[int] = []

    def insert(vec: list[int]) -> None:
        v = list(vec)
        while True:
            p = None
            for j, x in enumerate(v):
                if x:
                    p = j
                    break
            if p is None:
                return
            # find the echelon row with this pivot, if any
            slot = None
            for idx, pc in enumerate(pivcol):
                if pc == p:
                    slot = idx
                    break
                if pc > p:
                    break
            if slot is None:
                where = 0
                while where < len(pivcol) and pivcol[where] < p:
                    where += 1
                basis.insert(where, v)
                pivcol.insert(where, p)
                return
            row = basis[slot]
            a, b = row[p], v[p]
            if b % a == 0:
                q = b // a
                for j in range(p, ambient):
                    v[j] -= q * row[j]
            else:
                x, y, g = _xgcd(a, b)
                ag, bg = a // g, b // g
                for j in range(p, ambient):
                    rj, vj = row[j], v[j]
                    row[j] = x * rj + y * vj
                    v[j] = -bg * rj + ag * vj

    for g in gens:
        if len(g) != ambient:
            raise ShapeMismatch("generator has wrong ambient dimension")
        insert([int(x) for x in g])

    # normalize: positive pivots, entries above each pivot reduced mod pivot
    for i, row in enumerate(basis):
        p = pivcol[i]
        if row[p] < 0:
            basis[i] = [-x for x in row]
    for i in range(len(basis)):
        p = pivcol[i]
        piv = basis[i][p]
        for k in range(i):
            c = basis[k][p]
            q = c // piv  # floor division reduces into [0, piv)
            if q:
                for j in range(p, ambient):
                    basis[k][j] -= q * basis[i][j]
    return tuple(tuple(r) for r in basis)


def lattice_meet_line(L: IntLattice, v: Sequence[int]) -> int:
    """Least positive d with d*v in L, or 0 when the line Z*v meets L only at 0."""
    if len(v) != L.ambient:
        raise ShapeMismatch("vector has wrong ambient dimension")
    if not any(v):
        raise InvalidInput("v must be nonzero")
    coords = L.rational_coordinates(v)
    if coords is None:
        return 0
    d = 1
    for c in coords:
        d = d * c.denominator // gcd(d, c.denominator)
    assert L.contains([d * x for x in v])
    return d


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> IntLattice:
    """The saturated lattice {x in Z^n : M x = 0} for an integer matrix M.

    Computed by row-reducing [M^T | I] over Z: rows whose M^T-part vanished
    carry unimodular coordinates of kernel vectors in their I-part.
    """
    nrows = len(rows)
    aug = []
    for j in range(ncols):
        left = [rows[i][j] for i in range(nrows)]
        right = [1 if k == j else 0 for k in range(ncols)]
        aug.append(left + right)
    # HNF of the augmented rows
    reduced = _hnf(nrows + ncols, aug)
    kernel_rows = [r[nrows:] for r in reduced if not any(r[:nrows])]
    return IntLattice(ncols, kernel_rows)
