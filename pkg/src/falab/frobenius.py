"""Frobenius structures: nonsingular associative pairings from a functional.

Given an algebra A and a functional lam, the pairing is beta(a, b) = lam(ab)
with Gram matrix G[i][j] = beta(e_i, e_j). When G is invertible the dual
bases are canonicalized as x_i = e_i and y_j = the j-th column of G^{-1}
read against the defining basis, so that

    a = sum_i beta(a, y_i) x_i      and      b = sum_i beta(x_i, b) y_i

hold identically. The Nakayama automorphism alpha solves G alpha = G^T
columnwise and is the identity exactly when the form is symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraSpec, Element, apply_functional
from .errors import (
    CorruptionError,
    FieldMismatch,
    IntegralSpaceNotLine,
    NotAHomomorphism,
    ShapeMismatch,
    SingularForm,
)
from .fields import Scalar
from .linalg import MatrixE, kernel_basis, solve_linear


class FrobeniusStructure:
    """A nonsingular associative bilinear form on an algebra, with dual bases."""

    __slots__ = (
        "algebra",
        "functional",
        "gram",
        "gram_inv",
        "dual_right",
        "symmetric",
        "nakayama",
    )

    def __init__(self, algebra: AlgebraSpec, functional: Sequence[Scalar]):
        if len(functional) != algebra.dim:
            raise ShapeMismatch("functional has wrong length")
        self.algebra = algebra
        self.functional = tuple(functional)
        n = algebra.dim
        field = algebra.field
        zero = field.zero()
        rows = []
        for i in range(n):
            row = [zero] * n
            for j in range(n):
                acc = zero
                for (k, c) in algebra._sparse[i][j]:
                    if functional[k]:
                        acc = acc + c * functional[k]
                row[j] = acc
            rows.append(row)
        self.gram = MatrixE(field, rows)
        ker = kernel_basis(self.gram)
        if ker:
            raise SingularForm(witness=Element(algebra, ker[0]))
        self.gram_inv = self.gram.inverse()
        # y_j = sum_k Ginv[k][j] e_k
        self.dual_right = tuple(
            Element(algebra, self.gram_inv.col(j)) for j in range(n)
        )
        gt = self.gram.transpose()
        self.symmetric = self.gram == gt
        self.nakayama = (
            MatrixE.identity(field, n) if self.symmetric else self.gram_inv * gt
        )
        self._verify_dual_identities()

    def _verify_dual_identities(self) -> None:
        # a = sum_i beta(a, y_i) e_i and b = sum_i beta(e_i, b) y_i on the basis;
        # both reduce to G Ginv = I = Ginv G, already exact, but we assert the
        # elementwise form once as a corruption guard.
        n = self.algebra.dim
        for a in range(n):
            ea = self.algebra.basis_element(a)
            acc = self.algebra.zero()
            for i in range(n):
                acc = acc + self.algebra.basis_element(i).scale(self.pair(ea, self.dual_right[i]))
            if acc != ea:
                raise CorruptionError("dual basis identity failed")
            acc = self.algebra.zero()
            for i in range(n):
                acc = acc + self.dual_right[i].scale(self.pair(self.algebra.basis_element(i), ea))
            if acc != ea:
                raise CorruptionError("mirrored dual basis identity failed")

    # -- the pairing ---------------------------------------------------------

    def pair(self, a: Element, b: Element) -> Scalar:
        """beta(a, b) = lam(a b)."""
        return apply_functional(self.functional, a * b)

    def dual_left(self, i: int) -> Element:
        """x_i; canonically the i-th defining basis vector."""
        return self.algebra.basis_element(i)

    def dual_pair_tensor(self) -> MatrixE:
        """Coefficients of sum_i x_i (x) y_i: entry [a][b] multiplies e_a (x) e_b.

        Depends only on the form, not on the choice of dual bases.
        """
        return self.gram_inv.transpose()

    def nakayama_is_identity(self) -> bool:
        return self.nakayama == MatrixE.identity(self.algebra.field, self.algebra.dim)

    def apply_nakayama(self, a: Element) -> Element:
        return Element(self.algebra, self.nakayama.apply(a.coeffs))

    # -- Casimir machinery -----------------------------------------------------

    def casimir_apply(self, a: Element, verify: bool = True) -> Element:
        """c(a) = sum_i y_i a x_i; lands in the center of the algebra."""
        if a.parent is not self.algebra:
            raise FieldMismatch("element of a different algebra")
        acc = self.algebra.zero()
        for i in range(self.algebra.dim):
            acc = acc + self.dual_right[i] * a * self.algebra.basis_element(i)
        if verify:
            if not acc.is_central():
                raise CorruptionError("Casimir image is not central")
            if self.symmetric:
                other = self.algebra.zero()
                for i in range(self.algebra.dim):
                    other = other + self.algebra.basis_element(i) * a * self.dual_right[i]
                if other != acc:
                    raise CorruptionError("swapped dual bases give a different Casimir value")
        return acc

    def casimir_matrix(self) -> MatrixE:
        """Matrix of a -> c(a) on the defining basis."""
        cols = [self.casimir_apply(self.algebra.basis_element(j), verify=False).coeffs
                for j in range(self.algebra.dim)]
        n = self.algebra.dim
        return MatrixE(self.algebra.field, [[cols[j][i] for j in range(n)] for i in range(n)])

    def casimir_element(self) -> Element:
        """z = sum_i x_i y_i; equals c(1) when the form is symmetric."""
        acc = self.algebra.zero()
        for i in range(self.algebra.dim):
            acc = acc + self.algebra.basis_element(i) * self.dual_right[i]
        return acc

    def casimir_ideal_basis(self) -> "list[Element]":
        """Canonical basis of the image c(A), an ideal of the center."""
        C = self.casimir_matrix()
        return [Element(self.algebra, v) for v in C.column_space_basis()]

    def is_separable(self) -> "tuple[bool, Element | None]":
        """Whether 1 lies in the Casimir ideal; the witness a has c(a) = 1."""
        C = self.casimir_matrix()
        sol = solve_linear(C, self.algebra.unit)
        if sol is None:
            return False, None
        return True, Element(self.algebra, sol)


def build_frobenius(algebra: AlgebraSpec, functional: Sequence[Scalar]) -> FrobeniusStructure:
    """Frobenius structure from a functional; raises ``SingularForm`` if degenerate."""
    return FrobeniusStructure(algebra, functional)


def change_of_form_unit(F: FrobeniusStructure, G2: FrobeniusStructure) -> Element:
    """The unit u with gamma(a, b) = beta(a, b u) relating two nonsingular forms.

    When both forms are symmetric the unit is verified central; it is always
    verified invertible and to reproduce gamma exactly.
    """
    if F.algebra is not G2.algebra:
        raise FieldMismatch("forms live on different algebras")
    A = F.algebra
    Ru = F.gram_inv * G2.gram
    u = Element(A, Ru.apply(A.unit))
    if A.right_regular_matrix(u) != Ru:
        raise CorruptionError("change-of-form matrix is not a right multiplication")
    if A.norm(u).is_zero():
        raise CorruptionError("change-of-form unit is not invertible")
    if F.symmetric and G2.symmetric and not u.is_central():
        raise CorruptionError("unit relating two symmetric forms must be central")
    return u


@dataclass(frozen=True)
class AugmentationData:
    """An augmentation with its one-sided integrals and dimension scalar."""

    epsilon: tuple
    right_integral: Element
    left_integral: Element
    dim_generator: Scalar


def build_augmentation(F: FrobeniusStructure, epsilon: Sequence[Scalar]) -> AugmentationData:
    """Integrals attached to an algebra map epsilon: A -> k through the form.

    The right integral is sum_i eps(y_i) x_i, the left one sum_i eps(x_i) y_i;
    both one-sided integral spaces are verified to be exactly one-dimensional
    and the generator of eps(integrals) is returned as ``dim_generator``.
    """
    A = F.algebra
    n = A.dim
    field = A.field
    eps = tuple(epsilon)
    if len(eps) != n:
        raise ShapeMismatch("augmentation has wrong length")
    # algebra homomorphism check: eps(e_i e_j) = eps(e_i) eps(e_j), eps(1) = 1
    for i in range(n):
        for j in range(n):
            acc = field.zero()
            for (k, c) in A._sparse[i][j]:
                if eps[k]:
                    acc = acc + c * eps[k]
            if acc != eps[i] * eps[j]:
                raise NotAHomomorphism(f"epsilon fails multiplicativity at ({i}, {j})")
    if apply_functional(eps, A.one()) != field.one():
        raise NotAHomomorphism("epsilon(1) != 1")

    lam_right = Element(A, tuple(
        sum((F.gram_inv.rows[k][i] * eps[k] for k in range(n)), field.zero())
        for i in range(n)
    ))
    lam_left = Element(A, F.gram_inv.apply(eps))

    for i in range(n):
        ei = A.basis_element(i)
        if lam_right * ei != lam_right.scale(eps[i]):
            raise CorruptionError("right integral property fails")
        if ei * lam_left != lam_left.scale(eps[i]):
            raise CorruptionError("left integral property fails")

    # the solution space of t a = eps(a) t must be exactly the line through Lambda
    right_blocks = []
    left_blocks = []
    ident = MatrixE.identity(field, n)
    for i in range(n):
        ei = A.basis_element(i)
        right_blocks.append(A.right_regular_matrix(ei) - ident.scale(eps[i]))
        left_blocks.append(A.left_regular_matrix(ei) - ident.scale(eps[i]))
    right_space = kernel_basis(MatrixE.vstack(right_blocks))
    left_space = kernel_basis(MatrixE.vstack(left_blocks))
    if len(right_space) != 1 or len(left_space) != 1:
        raise IntegralSpaceNotLine(
            f"integral spaces have dimensions {len(right_space)} / {len(left_space)}"
        )

    dim_right = apply_functional(eps, lam_right)
    dim_z = apply_functional(eps, F.casimir_element())
    if dim_right != dim_z:
        raise CorruptionError("eps(Lambda) and eps(z) disagree")
    return AugmentationData(
        epsilon=eps,
        right_integral=lam_right,
        left_integral=lam_left,
        dim_generator=dim_right,
    )
