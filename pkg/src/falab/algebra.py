"""Finite-dimensional associative unital algebras given by structure constants.

An ``AlgebraSpec`` stores the dense tensor c with e_i e_j = sum_k c[i][j][k] e_k
over an exact field, the coefficient vector of the unit, and decorative basis
labels. Associativity and the unit law are verified once at construction; a
sparse view of the tensor keeps that check and all products fast for the
group-algebra-like inputs this library mostly sees.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    BadUnit,
    CorruptionError,
    FieldMismatch,
    InvalidInput,
    NotAssociative,
    ShapeMismatch,
)
from .fields import FieldDescriptor, Scalar
from .linalg import MatrixE, kernel_basis


class AlgebraSpec:
    """A unital associative algebra presented by structure constants."""

    __slots__ = (
        "field", "dim", "tensor", "unit", "labels", "_sparse", "_unit_elt",
        "_center_cache",
    )

    def __init__(
        self,
        field: FieldDescriptor,
        dim: int,
        tensor: Sequence[Sequence[Sequence[Scalar]]],
        unit: Sequence[Scalar],
        labels: Sequence[str] | None = None,
    ):
        if dim < 1:
            raise InvalidInput("algebra dimension must be >= 1")
        self.field = field
        self.dim = dim
        self.tensor = tuple(
            tuple(tuple(row) for row in plane) for plane in tensor
        )
        if len(self.tensor) != dim or any(
            len(p) != dim or any(len(r) != dim for r in p) for p in self.tensor
        ):
            raise ShapeMismatch("structure tensor must be dim x dim x dim")
        for p in self.tensor:
            for r in p:
                for x in r:
                    if x.field != field:
                        raise FieldMismatch("structure constant over a different field")
        self.unit = tuple(unit)
        if len(self.unit) != dim:
            raise ShapeMismatch("unit vector has wrong length")
        self.labels = tuple(labels) if labels is not None else tuple(
            f"e{i}" for i in range(dim)
        )
        if len(self.labels) != dim:
            raise ShapeMismatch("label list has wrong length")
        self._sparse = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(self.tensor[i][j]) if c)
                for j in range(dim)
            )
            for i in range(dim)
        )
        self._check_associativity()
        self._unit_elt = Element(self, self.unit)
        self._check_unit()
        self._center_cache = None

    @classmethod
    def from_triples(
        cls,
        field: FieldDescriptor,
        dim: int,
        triples: Iterable[tuple[int, int, int, Scalar]],
        unit: Sequence[Scalar],
        labels: Sequence[str] | None = None,
    ) -> "AlgebraSpec":
        """Build from a sparse list of (i, j, k, coefficient); omitted entries are 0."""
        zero = field.zero()
        tensor = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k, c) in triples:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ShapeMismatch(f"triple index ({i},{j},{k}) out of range")
            tensor[i][j][k] = tensor[i][j][k] + c
        return cls(field, dim, tensor, unit, labels)

    def _check_associativity(self) -> None:
        n = self.dim
        sp = self._sparse
        for i in range(n):
            for j in range(n):
                sij = sp[i][j]
                for k in range(n):
                    lhs: dict[int, Scalar] = {}
                    for (m, c1) in sij:
                        for (l, c2) in sp[m][k]:
                            prev = lhs.get(l)
                            lhs[l] = c1 * c2 if prev is None else prev + c1 * c2
                    rhs: dict[int, Scalar] = {}
                    for (m, c1) in sp[j][k]:
                        for (l, c2) in sp[i][m]:
                            prev = rhs.get(l)
                            rhs[l] = c1 * c2 if prev is None else prev + c1 * c2
                    for l in lhs.keys() | rhs.keys():
                        a = lhs.get(l)
                        b = rhs.get(l)
                        if a is None:
                            if b:
                                raise NotAssociative(i, j, k)
                        elif b is None:
                            if a:
                                raise NotAssociative(i, j, k)
                        elif a != b:
                            raise NotAssociative(i, j, k)

    def _check_unit(self) -> None:
        for i in range(self.dim):
            ei = self.basis_element(i)
            if self._unit_elt * ei != ei or ei * self._unit_elt != ei:
                raise BadUnit(f"unit law fails on basis element {i}")

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: Sequence[Scalar]) -> "Element":
        return Element(self, coeffs)

    def element_from_ints(self, coeffs: Sequence[int]) -> "Element":
        return Element(self, [self.field.from_int(c) for c in coeffs])

    def basis_element(self, i: int) -> "Element":
        zero = self.field.zero()
        coeffs = [zero] * self.dim
        coeffs[i] = self.field.one()
        return Element(self, coeffs)

    def one(self) -> "Element":
        return self._unit_elt

    def zero(self) -> "Element":
        return Element(self, [self.field.zero()] * self.dim)

    def basis(self) -> "list[Element]":
        return [self.basis_element(i) for i in range(self.dim)]

    # -- structural data -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraSpec)
            and self.field == other.field
            and self.dim == other.dim
            and self.tensor == other.tensor
            and self.unit == other.unit
        )

    def __repr__(self) -> str:
        return f"AlgebraSpec(dim={self.dim} over {self.field})"

    def left_regular_matrix(self, a: "Element") -> MatrixE:
        """Matrix of x -> a x in the defining basis."""
        if a.parent is not self:
            raise FieldMismatch("element of a different algebra")
        n = self.dim
        zero = self.field.zero()
        cols = []
        for j in range(n):
            col = [zero] * n
            for i, ai in enumerate(a.coeffs):
                if ai:
                    for (k, c) in self._sparse[i][j]:
                        col[k] = col[k] + ai * c
            cols.append(col)
        return MatrixE(self.field, [[cols[j][i] for j in range(n)] for i in range(n)])

    def right_regular_matrix(self, a: "Element") -> MatrixE:
        """Matrix of x -> x a in the defining basis."""
        if a.parent is not self:
            raise FieldMismatch("element of a different algebra")
        n = self.dim
        zero = self.field.zero()
        cols = []
        for j in range(n):
            col = [zero] * n
            for i, ai in enumerate(a.coeffs):
                if ai:
                    for (k, c) in self._sparse[j][i]:
                        col[k] = col[k] + ai * c
            cols.append(col)
        return MatrixE(self.field, [[cols[j][i] for j in range(n)] for i in range(n)])

    def center_basis(self) -> "list[Element]":
        """Canonical basis of {z : z e_i = e_i z for all i}; cached."""
        if self._center_cache is None:
            blocks = []
            for i in range(self.dim):
                ei = self.basis_element(i)
                L = self.left_regular_matrix(ei)
                R = self.right_regular_matrix(ei)
                blocks.append(L - R)
            stacked = MatrixE.vstack(blocks)
            self._center_cache = tuple(Element(self, v) for v in kernel_basis(stacked))
        return list(self._center_cache)

    def regular_character(self) -> tuple[Scalar, ...]:
        """The functional a -> Tr(x -> ax), checked against the right trace."""
        n = self.dim
        zero = self.field.zero()
        out = []
        for i in range(n):
            left = zero
            right = zero
            for k in range(n):
                left = left + self.tensor[i][k][k]
                right = right + self.tensor[k][i][k]
            if left != right:
                raise CorruptionError(
                    f"left and right regular traces differ on basis element {i}"
                )
            out.append(left)
        return tuple(out)

    def norm(self, a: "Element") -> Scalar:
        """det of left multiplication by a; multiplicative, N(r*1) = r^dim."""
        return self.left_regular_matrix(a).det()


class Element:
    """An algebra element: a coefficient vector over the parent's basis."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: AlgebraSpec, coeffs: Sequence[Scalar]):
        if len(coeffs) != parent.dim:
            raise ShapeMismatch("coefficient vector has wrong length")
        for c in coeffs:
            if c.field != parent.field:
                raise FieldMismatch("coefficient over a different field")
        self.parent = parent
        self.coeffs = tuple(coeffs)

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element) or other.parent is not self.parent:
            raise FieldMismatch("elements of different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.parent, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Element":
        return Element(self.parent, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        n = self.parent.dim
        zero = self.parent.field.zero()
        out = [zero] * n
        sp = self.parent._sparse
        for i, ai in enumerate(self.coeffs):
            if ai:
                for j, bj in enumerate(other.coeffs):
                    if bj:
                        f = ai * bj
                        for (k, c) in sp[i][j]:
                            out[k] = out[k] + f * c
        return Element(self.parent, out)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, s: Scalar) -> "Element":
        return Element(self.parent, [s * a for a in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and other.parent is self.parent
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.parent), self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_central(self) -> bool:
        for i in range(self.parent.dim):
            ei = self.parent.basis_element(i)
            if self * ei != ei * self:
                return False
        return True

    def __repr__(self) -> str:
        terms = [
            f"{c!r}*{self.parent.labels[i]}" for i, c in enumerate(self.coeffs) if c
        ]
        return " + ".join(terms) if terms else "0"


def apply_functional(lam: Sequence[Scalar], a: Element) -> Scalar:
    """Evaluate a linear functional (row of coefficients) on an element."""
    acc = a.parent.field.zero()
    for l, c in zip(lam, a.coeffs):
        if l and c:
            acc = acc + l * c
    return acc
