"""Modules over a structure-constant algebra, given by representing matrices.

A representation assigns one m x m matrix per algebra basis vector, subject
to rho(e_i) rho(e_j) = sum_k c[i][j][k] rho(e_k) and rho(1) = id. On top of
that sit characters, intertwiner spaces, central characters, the module
index, and the central idempotents attached to a symmetric Frobenius form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraSpec, Element, apply_functional
from .errors import (
    CorruptionError,
    FieldMismatch,
    IndexNotInvertible,
    NoWeakForm,
    NotAModule,
    NotSchur,
    PreconditionFailed,
    ShapeMismatch,
)
from .fields import Scalar
from .frobenius import FrobeniusStructure
from .linalg import MatrixE, kernel_basis
from .report import Check, check_eq, check_that, fact, skipped


class Representation:
    """A left module: matrices rho_i acting on column vectors of length dim."""

    __slots__ = ("algebra", "dim", "matrices", "character")

    def __init__(self, algebra: AlgebraSpec, matrices: Sequence[MatrixE]):
        self.algebra = algebra
        self.matrices = tuple(matrices)
        if len(self.matrices) != algebra.dim:
            raise ShapeMismatch("need one matrix per algebra basis vector")
        m = self.matrices[0].nrows
        for M in self.matrices:
            if M.nrows != m or M.ncols != m:
                raise ShapeMismatch("representing matrices must be square of equal size")
            if M.field != algebra.field:
                raise FieldMismatch("representing matrix over a different field")
        self.dim = m
        self.character = tuple(M.trace() for M in self.matrices)

    def apply(self, a: Element) -> MatrixE:
        """The matrix of a acting on the module."""
        if a.parent is not self.algebra:
            raise FieldMismatch("element of a different algebra")
        acc = MatrixE.zeros(self.algebra.field, self.dim, self.dim)
        for i, c in enumerate(a.coeffs):
            if c:
                acc = acc + self.matrices[i].scale(c)
        return acc

    def character_of(self, a: Element) -> Scalar:
        return apply_functional(self.character, a)

    def __repr__(self) -> str:
        return f"Representation(dim={self.dim} of {self.algebra!r})"


def check_representation(algebra: AlgebraSpec, matrices: Sequence[MatrixE]) -> Representation:
    """Validate the module law and the unit action; returns the representation."""
    rep = Representation(algebra, matrices)
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            lhs = rep.matrices[i] * rep.matrices[j]
            rhs = MatrixE.zeros(algebra.field, rep.dim, rep.dim)
            for (k, c) in algebra._sparse[i][j]:
                rhs = rhs + rep.matrices[k].scale(c)
            if lhs != rhs:
                raise NotAModule(i, j)
    if rep.apply(algebra.one()) != MatrixE.identity(algebra.field, rep.dim):
        raise NotAModule(-1, -1)
    return rep


def regular_representation(algebra: AlgebraSpec) -> Representation:
    """The left regular module; its character is the regular character."""
    mats = [algebra.left_regular_matrix(algebra.basis_element(i)) for i in range(algebra.dim)]
    return check_representation(algebra, mats)


def direct_sum(M: Representation, N: Representation) -> Representation:
    if M.algebra is not N.algebra:
        raise FieldMismatch("modules over different algebras")
    field = M.algebra.field
    zero = field.zero()
    mats = []
    for A, B in zip(M.matrices, N.matrices):
        size = M.dim + N.dim
        rows = []
        for i in range(M.dim):
            rows.append(list(A.rows[i]) + [zero] * N.dim)
        for i in range(N.dim):
            rows.append([zero] * M.dim + list(B.rows[i]))
        mats.append(MatrixE(field, rows))
    return Representation(M.algebra, mats)


def hom_space(M: Representation, N: Representation) -> "list[MatrixE]":
    """Basis of the intertwiners {T : T rho^M(a) = rho^N(a) T for all a}."""
    if M.algebra is not N.algebra:
        raise FieldMismatch("modules over different algebras")
    field = M.algebra.field
    zero = field.zero()
    nM, nN = M.dim, N.dim
    rows = []
    for idx in range(M.algebra.dim):
        A = M.matrices[idx]
        B = N.matrices[idx]
        for r in range(nN):
            for c in range(nM):
                row = [zero] * (nN * nM)
                for s in range(nM):
                    if A.rows[s][c]:
                        row[r * nM + s] = row[r * nM + s] + A.rows[s][c]
                for s in range(nN):
                    if B.rows[r][s]:
                        row[s * nM + c] = row[s * nM + c] - B.rows[r][s]
                rows.append(row)
    stacked = MatrixE(field, rows)
    out = []
    for v in kernel_basis(stacked):
        out.append(MatrixE(field, [v[r * nM:(r + 1) * nM] for r in range(nN)]))
    return out


@dataclass(frozen=True)
class ModuleAnalysis:
    """Derived data of a module against a Frobenius structure."""

    end_dim: int
    schur: bool
    z_element: Element
    omega_on_center: "tuple[Scalar, ...] | None"
    index: "Scalar | None"
    index_invertible: "bool | None"
    idempotent: "Element | None"


def scalar_action(M: Representation, a: Element) -> Scalar:
    """The scalar by which a central element acts on a Schur module."""
    mat = M.apply(a)
    s = mat.rows[0][0]
    if mat != MatrixE.identity(M.algebra.field, M.dim).scale(s):
        raise CorruptionError("central element does not act as a scalar")
    return s


def analyze_module(F: FrobeniusStructure, M: Representation) -> ModuleAnalysis:
    """Character preimage z(M), central character, index, central idempotent.

    z(M) = sum_i chi_M(x_i) y_i always exists; the later stages need the form
    symmetric and the module Schur, and the idempotent additionally needs the
    index invertible. Unavailable stages are returned as None rather than
    raised, so batch reports can cover degenerate modules.
    """
    A = F.algebra
    if M.algebra is not A:
        raise FieldMismatch("module over a different algebra")
    n = A.dim
    chi = M.character
    z = A.zero()
    for i in range(n):
        if chi[i]:
            z = z + F.dual_right[i].scale(chi[i])
    # chi_M(a) = beta(a, z(M)) on the basis
    for j in range(n):
        if F.pair(A.basis_element(j), z) != chi[j]:
            raise CorruptionError("character is not represented by z(M)")
    if F.symmetric and not z.is_central():
        raise CorruptionError("z(M) must be central for a symmetric form")

    end_dim = len(hom_space(M, M))
    schur = end_dim == 1
    omega = None
    index = None
    index_invertible = None
    idem = None
    if schur:
        omega = tuple(scalar_action(M, x) for x in A.center_basis())
        if F.symmetric:
            index = scalar_action(M, z)
            index_invertible = bool(index)
            if index_invertible:
                idem = z.scale(index.inverse())
                if scalar_action(M, idem) != A.field.one():
                    raise CorruptionError("omega(e(M)) != 1")
                if idem * idem != idem:
                    raise CorruptionError("e(M) is not idempotent")
                for x in A.center_basis():
                    if x * idem != idem.scale(scalar_action(M, x)):
                        raise CorruptionError("e(M) is not an omega eigenvector")
    return ModuleAnalysis(
        end_dim=end_dim,
        schur=schur,
        z_element=z,
        omega_on_center=omega,
        index=index,
        index_invertible=index_invertible,
        idempotent=idem,
    )


def verify_idempotent_theorems(
    F: FrobeniusStructure,
    M: Representation,
    analysis: ModuleAnalysis,
    separable: "bool | None" = None,
) -> "list[Check]":
    """Exact checks tying the index, ranks, and the regular character together.

    Clause 1 needs only the symmetric form; clauses 2 and 3 hold for separable
    algebras and are marked skipped otherwise.
    """
    A = F.algebra
    if analysis.idempotent is None:
        raise IndexNotInvertible("module has no central idempotent")
    e = analysis.idempotent
    field = A.field
    z = F.casimir_element()
    omega_z = scalar_action(M, z)
    rank_eA = A.right_regular_matrix(e).rank()
    m = M.dim
    out = [
        check_eq(
            "index-rank-balance",
            "omega(z) * dim M = index * rank(e(M) A)",
            omega_z * field.from_int(m),
            analysis.index * field.from_int(rank_eA),
        )
    ]
    if separable:
        out.append(
            check_eq(
                "matrix-block-rank",
                "rank(e(M) A) = (dim M)^2",
                field.from_int(rank_eA),
                field.from_int(m * m),
            )
        )
        chi_reg = A.regular_character()
        ok = True
        wit = ""
        for i in range(A.dim):
            lhs = apply_functional(chi_reg, e * A.basis_element(i))
            rhs = field.from_int(m) * M.character[i]
            if lhs != rhs:
                ok = False
                wit = f"basis index {i}: {lhs!r} vs {rhs!r}"
                break
        out.append(
            check_that(
                "regular-character-projection",
                "chi_reg(e(M) a) = dim M * chi_M(a)",
                ok,
                witness=wit,
            )
        )
    else:
        out.append(skipped("matrix-block-rank", "rank(e(M) A) = (dim M)^2",
                           "algebra not known separable"))
        out.append(skipped("regular-character-projection",
                           "chi_reg(e(M) a) = dim M * chi_M(a)",
                           "algebra not known separable"))
    return out


@dataclass(frozen=True)
class WeakFormCertificate:
    """Claim that the defining basis spans an order over the integers whose
    tensor square contains the dual-basis tensor of the form."""

    description: str


def verify_weak_form(F: FrobeniusStructure) -> bool:
    """Check the certificate against the actual structure: integer structure
    constants and an integer dual-basis tensor, over a characteristic-0 field."""
    A = F.algebra
    if A.field.characteristic != 0:
        return False
    for plane in A.tensor:
        for row in plane:
            for c in row:
                if not c.is_rational_integer():
                    return False
    for row in F.dual_pair_tensor().rows:
        for c in row:
            if not c.is_rational_integer():
                return False
    return True


def integrality_check(
    F: FrobeniusStructure,
    M: Representation,
    certificate: "WeakFormCertificate | None",
) -> "list[Check]":
    """With an integral form of the algebra, chi_M(z(M)) and the index are
    algebraic integers; inside Q (or a cyclotomic field) that forces them to
    be rational integers, which is asserted exactly."""
    if certificate is None:
        raise NoWeakForm("no integral-form certificate supplied")
    if not F.symmetric:
        raise PreconditionFailed("integrality needs a symmetric form")
    if not verify_weak_form(F):
        raise NoWeakForm("certificate fails verification against the structure")
    analysis = analyze_module(F, M)
    if not analysis.schur:
        raise NotSchur(f"endomorphism dimension {analysis.end_dim}")
    chi_zM = M.character_of(analysis.z_element)
    out = [
        check_that(
            "character-value-integral",
            "chi_M(z(M)) is a rational integer",
            chi_zM.is_rational_integer(),
            lhs=repr(chi_zM),
            witness="minimal polynomial over Z is linear monic"
            if chi_zM.is_rational_integer() else "denominator survives",
        ),
        check_that(
            "index-integral",
            "index [A:M] is a rational integer",
            analysis.index.is_rational_integer(),
            lhs=repr(analysis.index),
            witness="minimal polynomial over Z is linear monic"
            if analysis.index.is_rational_integer() else "denominator survives",
        ),
    ]
    return out


def idempotent_character_rank(M: Representation, e: Element) -> "list[Check]":
    """chi_M at an idempotent equals the rank of its action on the module."""
    mat = M.apply(e)
    if mat * mat != mat:
        raise PreconditionFailed("element does not act idempotently")
    return [
        check_eq(
            "idempotent-character-rank",
            "chi_M(e) = rank of e acting on M",
            M.character_of(e),
            M.algebra.field.from_int(mat.rank()),
        )
    ]
