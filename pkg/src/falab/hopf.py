"""Hopf algebras by structure data: axioms, duals, integrals, and the
Frobenius form they induce.

The comultiplication is a tensor d with Delta(e_i) = sum_{j,k} d[i][j][k]
e_j (x) e_k, the counit a row vector, the antipode a matrix acting on
coefficient columns. Construction verifies coassociativity, the counit
laws, the bialgebra laws, and the antipode identity, all exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraSpec, Element, apply_functional
from .errors import (
    CorruptionError,
    FieldMismatch,
    HopfAxiomFailure,
    IntegralSpaceNotLine,
    NotSchur,
    PreconditionFailed,
    ShapeMismatch,
)
from .fields import Scalar
from .frobenius import FrobeniusStructure, build_frobenius
from .linalg import MatrixE, kernel_basis
from .report import Check, check_eq, check_that, fact
from .representations import (
    Representation,
    analyze_module,
    check_representation,
    scalar_action,
)


class HopfSpec:
    """A Hopf algebra: algebra + comultiplication + counit + antipode."""

    __slots__ = (
        "algebra", "comul", "counit", "antipode", "_comul_sparse",
        "_integral_cache", "_canonical_cache", "_dual_cache",
    )

    def __init__(
        self,
        algebra: AlgebraSpec,
        comul: Sequence[Sequence[Sequence[Scalar]]],
        counit: Sequence[Scalar],
        antipode: MatrixE,
    ):
        n = algebra.dim
        self.algebra = algebra
        self.comul = tuple(tuple(tuple(r) for r in plane) for plane in comul)
        if len(self.comul) != n or any(
            len(p) != n or any(len(r) != n for r in p) for p in self.comul
        ):
            raise ShapeMismatch("comultiplication tensor must be dim^3")
        self.counit = tuple(counit)
        if len(self.counit) != n:
            raise ShapeMismatch("counit has wrong length")
        if antipode.nrows != n or antipode.ncols != n:
            raise ShapeMismatch("antipode matrix has wrong shape")
        if antipode.field != algebra.field:
            raise FieldMismatch("antipode over a different field")
        self.antipode = antipode
        self._comul_sparse = tuple(
            tuple(
                (j, k, self.comul[i][j][k])
                for j in range(n)
                for k in range(n)
                if self.comul[i][j][k]
            )
            for i in range(n)
        )
        self._integral_cache = None
        self._canonical_cache = None
        self._dual_cache = None
        self._verify_axioms()

    @classmethod
    def from_comul_triples(
        cls,
        algebra: AlgebraSpec,
        triples: "Sequence[tuple[int, int, int, Scalar]]",
        counit: Sequence[Scalar],
        antipode: MatrixE,
    ) -> "HopfSpec":
        n = algebra.dim
        zero = algebra.field.zero()
        tensor = [[[zero] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k, c) in triples:
            tensor[i][j][k] = tensor[i][j][k] + c
        return cls(algebra, tensor, counit, antipode)

    # -- axioms ---------------------------------------------------------------

    def _verify_axioms(self) -> None:
        A = self.algebra
        n = A.dim
        field = A.field
        dsp = self._comul_sparse
        eps = self.counit

        # coassociativity of Delta
        for i in range(n):
            lhs: dict = {}
            rhs: dict = {}
            for (j, k, v) in dsp[i]:
                for (a, b, w) in dsp[j]:
                    key = (a, b, k)
                    prev = lhs.get(key)
                    lhs[key] = v * w if prev is None else prev + v * w
                for (a, b, w) in dsp[k]:
                    key = (j, a, b)
                    prev = rhs.get(key)
                    rhs[key] = v * w if prev is None else prev + v * w
            if not _dicts_equal(lhs, rhs):
                raise HopfAxiomFailure("coassociativity", (i,))

        # counit laws
        for i in range(n):
            left = [field.zero()] * n
            right = [field.zero()] * n
            for (j, k, v) in dsp[i]:
                if eps[j]:
                    left[k] = left[k] + eps[j] * v
                if eps[k]:
                    right[j] = right[j] + eps[k] * v
            expect = [field.one() if t == i else field.zero() for t in range(n)]
            if left != expect or right != expect:
                raise HopfAxiomFailure("counit", (i,))

        # Delta and eps are unital algebra maps
        csp = A._sparse
        for i in range(n):
            for j in range(n):
                lhs = {}
                for (k, c) in csp[i][j]:
                    for (a, b, v) in dsp[k]:
                        key = (a, b)
                        prev = lhs.get(key)
                        lhs[key] = c * v if prev is None else prev + c * v
                rhs = {}
                for (a, b, v) in dsp[i]:
                    for (c2, d2, w) in dsp[j]:
                        f = v * w
                        for (p, x) in csp[a][c2]:
                            fx = f * x
                            for (q, y) in csp[b][d2]:
                                key = (p, q)
                                prev = rhs.get(key)
                                rhs[key] = fx * y if prev is None else prev + fx * y
                if not _dicts_equal(lhs, rhs):
                    raise HopfAxiomFailure("bialgebra-comultiplication", (i, j))
                acc = field.zero()
                for (k, c) in csp[i][j]:
                    if eps[k]:
                        acc = acc + c * eps[k]
                if acc != eps[i] * eps[j]:
                    raise HopfAxiomFailure("bialgebra-counit", (i, j))
        unit_coeffs = A.unit
        delta_one: dict = {}
        for i, u in enumerate(unit_coeffs):
            if u:
                for (a, b, v) in dsp[i]:
                    key = (a, b)
                    prev = delta_one.get(key)
                    delta_one[key] = u * v if prev is None else prev + u * v
        expect_one = {}
        for a, x in enumerate(unit_coeffs):
            for b, y in enumerate(unit_coeffs):
                if x and y:
                    expect_one[(a, b)] = x * y
        if not _dicts_equal(delta_one, expect_one):
            raise HopfAxiomFailure("bialgebra-unit", ())
        if apply_functional(eps, A.one()) != field.one():
            raise HopfAxiomFailure("bialgebra-counit-unit", ())

        # antipode: m (S (x) id) Delta = unit . eps = m (id (x) S) Delta
        S = self.antipode
        for i in range(n):
            left = A.zero()
            right = A.zero()
            for (j, k, v) in dsp[i]:
                sj = Element(A, S.col(j))
                sk = Element(A, S.col(k))
                left = left + (sj * A.basis_element(k)).scale(v)
                right = right + (A.basis_element(j) * sk).scale(v)
            expect = A.one().scale(eps[i])
            if left != expect or right != expect:
                raise HopfAxiomFailure("antipode", (i,))

    # -- small helpers ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def antipode_of(self, a: Element) -> Element:
        return Element(self.algebra, self.antipode.apply(a.coeffs))

    def counit_of(self, a: Element) -> Scalar:
        return apply_functional(self.counit, a)

    def coproduct_matrix(self, a: Element) -> MatrixE:
        """Delta(a) as the matrix T with Delta(a) = sum T[j][k] e_j (x) e_k."""
        n = self.dim
        field = self.algebra.field
        rows = [[field.zero()] * n for _ in range(n)]
        for i, c in enumerate(a.coeffs):
            if c:
                for (j, k, v) in self._comul_sparse[i]:
                    rows[j][k] = rows[j][k] + c * v
        return MatrixE(field, rows)

    def hit_right(self, a: Element, f: Sequence[Scalar]) -> Element:
        """a left-hit by a functional: sum f(a_1) a_2."""
        n = self.dim
        field = self.algebra.field
        out = [field.zero()] * n
        for i, c in enumerate(a.coeffs):
            if c:
                for (j, k, v) in self._comul_sparse[i]:
                    if f[j]:
                        out[k] = out[k] + c * v * f[j]
        return Element(self.algebra, out)

    def hit_left(self, a: Element, f: Sequence[Scalar]) -> Element:
        """a right-hit by a functional: sum a_1 f(a_2)."""
        n = self.dim
        field = self.algebra.field
        out = [field.zero()] * n
        for i, c in enumerate(a.coeffs):
            if c:
                for (j, k, v) in self._comul_sparse[i]:
                    if f[k]:
                        out[j] = out[j] + c * v * f[k]
        return Element(self.algebra, out)

    def cocommutative_basis(self) -> "list[Element]":
        """Basis of {a : Delta(a) equals its flip}."""
        n = self.dim
        field = self.algebra.field
        rows = []
        for j in range(n):
            for k in range(j + 1, n):
                row = [self.comul[i][j][k] - self.comul[i][k][j] for i in range(n)]
                rows.append(row)
        if not rows:
            return self.algebra.basis()
        return [Element(self.algebra, v) for v in kernel_basis(MatrixE(field, rows))]

    def is_group_like(self, g: Element) -> bool:
        """Delta(g) = g (x) g and eps(g) = 1, both exactly."""
        if g.parent is not self.algebra:
            raise FieldMismatch("element of a different algebra")
        if self.counit_of(g) != self.algebra.field.one():
            return False
        T = self.coproduct_matrix(g)
        n = self.dim
        for j in range(n):
            for k in range(n):
                if T.rows[j][k] != g.coeffs[j] * g.coeffs[k]:
                    return False
        return True

    def basis_is_group_like(self) -> bool:
        return all(self.is_group_like(self.algebra.basis_element(i)) for i in range(self.dim))


def _dicts_equal(a: dict, b: dict) -> bool:
    for key in a.keys() | b.keys():
        x = a.get(key)
        y = b.get(key)
        if x is None:
            if y:
                return False
        elif y is None:
            if x:
                return False
        elif x != y:
            return False
    return True


def check_hopf(
    algebra: AlgebraSpec,
    comul,
    counit,
    antipode: MatrixE,
) -> HopfSpec:
    """Validate all Hopf axioms; returns the certified spec."""
    return HopfSpec(algebra, comul, counit, antipode)


def dual_hopf(H: HopfSpec) -> HopfSpec:
    """The dual Hopf algebra on the dual basis.

    Products come from the transposed comultiplication, the coproduct from the
    transposed product, unit = counit, counit = evaluation at 1, antipode the
    transposed antipode. Applying it twice reproduces the original tensors.
    """
    if H._dual_cache is not None:
        return H._dual_cache
    A = H.algebra
    n = A.dim
    field = A.field
    zero = field.zero()
    mul = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for (j, k, v) in H._comul_sparse[i]:
            mul[j][k][i] = mul[j][k][i] + v
    comul = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            for (i, c) in A._sparse[j][k]:
                comul[i][j][k] = comul[i][j][k] + c
    dual_algebra = AlgebraSpec(
        field,
        n,
        mul,
        unit=H.counit,
        labels=tuple(f"{lab}^" for lab in A.labels),
    )
    out = HopfSpec(dual_algebra, comul, counit=A.unit, antipode=H.antipode.transpose())
    H._dual_cache = out
    return out


@dataclass(frozen=True)
class IntegralReport:
    """One-sided integrals and the basic predicates derived from them."""

    right: Element
    left: Element
    unimodular: bool
    involutory: bool


def find_integrals(H: HopfSpec) -> IntegralReport:
    """One-dimensional spaces of right/left integrals, canonically normalized.

    The canonical generator scales its first nonzero coordinate to 1. Also
    verifies that the antipode maps the right integral line onto the left one.
    """
    if H._integral_cache is not None:
        return H._integral_cache
    A = H.algebra
    n = A.dim
    field = A.field
    ident = MatrixE.identity(field, n)
    right_blocks = []
    left_blocks = []
    for i in range(n):
        ei = A.basis_element(i)
        right_blocks.append(A.right_regular_matrix(ei) - ident.scale(H.counit[i]))
        left_blocks.append(A.left_regular_matrix(ei) - ident.scale(H.counit[i]))
    right_space = kernel_basis(MatrixE.vstack(right_blocks))
    left_space = kernel_basis(MatrixE.vstack(left_blocks))
    if len(right_space) != 1 or len(left_space) != 1:
        raise IntegralSpaceNotLine(
            f"integral spaces have dimensions {len(right_space)} / {len(left_space)}"
        )
    right = Element(A, _normalize_first_nonzero(right_space[0]))
    left = Element(A, _normalize_first_nonzero(left_space[0]))
    unimodular = _proportional(right.coeffs, left.coeffs)
    involutory = H.antipode * H.antipode == ident
    s_right = H.antipode_of(right)
    if not _proportional(s_right.coeffs, left.coeffs):
        raise CorruptionError("antipode does not map right integrals to left integrals")
    rep = IntegralReport(right=right, left=left, unimodular=unimodular, involutory=involutory)
    H._integral_cache = rep
    return rep


def _normalize_first_nonzero(v: Sequence[Scalar]) -> "tuple[Scalar, ...]":
    for x in v:
        if x:
            inv = x.inverse()
            return tuple(inv * y for y in v)
    raise CorruptionError("zero vector cannot be normalized")


def _proportional(a: Sequence[Scalar], b: Sequence[Scalar]) -> bool:
    for x, y in zip(a, b):
        if x:
            if not y:
                return False
            t = y / x
            return all(t * p == q for p, q in zip(a, b))
        if y:
            return False
    return True


@dataclass(frozen=True)
class IntegralPair:
    """A right integral of H and a left integral of the dual, paired to 1."""

    Lambda: Element
    lam: "tuple[Scalar, ...]"


def frobenius_from_integrals(H: HopfSpec) -> "tuple[FrobeniusStructure, IntegralPair]":
    """The Frobenius form beta(a, b) = lam(ab) induced by the integral pair.

    lam is the left integral of the dual algebra normalized by lam(Lambda) = 1.
    The dual bases coming from the coproduct of Lambda twisted by the antipode
    must agree with the Gram-inverse dual bases: both are computed and compared.
    The orthogonality law beta(a, b <- f) = beta(a <- S(f), b) is verified on
    all basis triples.
    """
    if H._canonical_cache is not None:
        return H._canonical_cache
    A = H.algebra
    n = A.dim
    field = A.field
    integrals = find_integrals(H)
    Lambda = integrals.right

    # left integrals of the dual algebra: f . lam = f(1) lam for all f
    rows = []
    for i in range(n):  # constraint from basis functional f_i
        for k in range(n):
            row = []
            for j in range(n):
                # coefficient of lam_j in (f_i lam)_k - <f_i, 1> lam_k
                acc = H.comul[k][i][j]
                if j == k:
                    acc = acc - A.unit[i]
                row.append(acc)
            rows.append(row)
    lam_space = kernel_basis(MatrixE(field, rows))
    if len(lam_space) != 1:
        raise IntegralSpaceNotLine(
            f"dual integral space has dimension {len(lam_space)}"
        )
    lam0 = lam_space[0]
    pairing = apply_functional(lam0, Lambda)
    if not pairing:
        raise CorruptionError("integral pairing degenerate: lam(Lambda) = 0")
    inv = pairing.inverse()
    lam = tuple(inv * x for x in lam0)

    F = build_frobenius(A, lam)

    # dual-basis tensor from the coproduct of Lambda: sum Lambda_2 (x) S(Lambda_1)
    T = H.coproduct_matrix(Lambda)
    P = T.transpose() * H.antipode.transpose()
    if P != F.dual_pair_tensor():
        raise CorruptionError(
            "coproduct dual bases disagree with Gram-inverse dual bases"
        )

    # orthogonality of the form for the right action of the dual algebra
    G = F.gram
    S = H.antipode
    for c in range(n):
        zero = field.zero()
        W = [[zero] * n for _ in range(n)]  # x -> x <- f_c
        X = [[zero] * n for _ in range(n)]  # x -> x <- (f_c o S)
        for i in range(n):
            for (j, k, v) in H._comul_sparse[i]:
                if j == c:
                    W[k][i] = W[k][i] + v
                if S.rows[c][j]:
                    X[k][i] = X[k][i] + v * S.rows[c][j]
        Wm = MatrixE(field, W)
        Xm = MatrixE(field, X)
        if G * Wm != Xm.transpose() * G:
            raise CorruptionError("orthogonality of the integral form fails")

    pair = IntegralPair(Lambda=Lambda, lam=lam)
    _verify_integral_pair(H, pair)
    H._canonical_cache = (F, pair)
    return F, pair


def _verify_integral_pair(H: HopfSpec, pair: IntegralPair) -> None:
    A = H.algebra
    for i in range(A.dim):
        ei = A.basis_element(i)
        if pair.Lambda * ei != pair.Lambda.scale(H.counit[i]):
            raise CorruptionError("Lambda is not a right integral")
    # f . lam = f(1) lam in the dual algebra, for all basis functionals f
    n = A.dim
    for i in range(n):
        for k in range(n):
            acc = A.field.zero()
            for j in range(n):
                if H.comul[k][i][j] and pair.lam[j]:
                    acc = acc + H.comul[k][i][j] * pair.lam[j]
            if acc != A.unit[i] * pair.lam[k]:
                raise CorruptionError("lam is not a left integral of the dual")
    if apply_functional(pair.lam, pair.Lambda) != A.field.one():
        raise CorruptionError("integral pair is not normalized")


@dataclass(frozen=True)
class MaschkeReport:
    dim_generator: Scalar
    separable: bool
    idempotent_integral: "Element | None"
    checks: "tuple[Check, ...]"


def maschke_report(H: HopfSpec) -> MaschkeReport:
    """Separability from the counit of the integral: separable iff eps(Lambda) != 0.

    Cross-checked against the Casimir criterion of the induced Frobenius form.
    When the antipode is involutory, both factors of the product law
    Dim_eps(H) * Dim_counit(H*) = dim H (as ideals) are computed and compared.
    """
    A = H.algebra
    field = A.field
    F, pair = frobenius_from_integrals(H)
    integrals = find_integrals(H)
    dim_eps = H.counit_of(pair.Lambda)
    separable = bool(dim_eps)
    checks = []
    sep_higman, witness = F.is_separable()
    checks.append(
        check_that(
            "maschke-higman-agreement",
            "eps(Lambda) != 0 iff 1 lies in the Casimir ideal",
            separable == sep_higman,
            lhs=f"eps(Lambda) = {dim_eps!r}",
            rhs=f"higman separable = {sep_higman}",
        )
    )
    idem = None
    if separable:
        idem = pair.Lambda.scale(dim_eps.inverse())
        if idem * idem != idem:
            raise CorruptionError("normalized integral is not idempotent")
        checks.append(fact("idempotent-integral", "Lambda/eps(Lambda) is idempotent",
                           repr(idem.coeffs)))
    if integrals.involutory:
        dual = dual_hopf(H)
        _, dual_pair = frobenius_from_integrals(dual)
        dim_dual = dual.counit_of(dual_pair.Lambda)
        product = dim_eps * dim_dual
        rank_h = field.from_int(A.dim)
        checks.append(
            check_that(
                "dimension-product-law",
                "Dim_eps(H) * Dim_counit(H*) = dim H as ideals",
                bool(product) == bool(rank_h),
                lhs=repr(product),
                rhs=repr(rank_h),
            )
        )
    return MaschkeReport(
        dim_generator=dim_eps,
        separable=separable,
        idempotent_integral=idem,
        checks=tuple(checks),
    )


@dataclass(frozen=True)
class SymmetrySuite:
    symmetric: bool
    bi_symmetric: bool
    lambda_is_trace: bool
    b_lambda: MatrixE
    checks: "tuple[Check, ...]"


def _trace_form_space(A: AlgebraSpec) -> "list[tuple[Scalar, ...]]":
    """Basis of the functionals vanishing on all commutators."""
    n = A.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            row = [A.tensor[i][j][k] - A.tensor[j][i][k] for k in range(n)]
            rows.append(row)
    if not rows:
        ident = MatrixE.identity(A.field, n)
        return [ident.row(i) for i in range(n)]
    return kernel_basis(MatrixE(A.field, rows))


def _span_rank(field, vectors: "list[Sequence[Scalar]]") -> int:
    if not vectors:
        return 0
    return MatrixE(field, [list(v) for v in vectors]).rank()


def symmetry_suite(H: HopfSpec) -> SymmetrySuite:
    """Symmetry predicates of the integral form and the center/trace pairing.

    * lam is a trace form exactly when the Nakayama matrix is the identity;
    * when the antipode is involutory the regular character is eps(Lambda) lam;
    * when moreover H is separable, b_lam matches the center of H with the
      trace forms and the cocommutative part of H with the center of the dual,
      and the inverse law b_Lambda(f o S) = b_lam^{-1}(f) holds as matrices.
    """
    A = H.algebra
    n = A.dim
    field = A.field
    F, pair = frobenius_from_integrals(H)
    integrals = find_integrals(H)
    checks: list[Check] = []

    lam_is_trace = _vanishes_on_commutators(A, pair.lam)
    checks.append(
        check_that(
            "trace-form-iff-trivial-nakayama",
            "lam kills commutators iff the Nakayama matrix is the identity",
            lam_is_trace == F.nakayama_is_identity(),
            lhs=f"trace form = {lam_is_trace}",
            rhs=f"nakayama identity = {F.nakayama_is_identity()}",
        )
    )

    chi_reg = A.regular_character()
    if integrals.involutory:
        dim_eps = H.counit_of(pair.Lambda)
        expect = tuple(dim_eps * x for x in pair.lam)
        checks.append(
            check_eq(
                "regular-character-is-integral",
                "chi_reg = eps(Lambda) lam for involutory antipode",
                chi_reg,
                expect,
            )
        )

    b_lambda = F.gram.transpose()

    maschke = maschke_report(H)
    dual = dual_hopf(H)
    F_dual, _ = frobenius_from_integrals(dual)
    bi_symmetric = F.symmetric and F_dual.symmetric

    if maschke.separable and integrals.involutory:
        checks.append(
            check_that(
                "separable-involutory-bisymmetric",
                "separable involutory implies both H and its dual symmetric",
                bi_symmetric,
                lhs=f"H symmetric = {F.symmetric}",
                rhs=f"dual symmetric = {F_dual.symmetric}",
            )
        )
        # chi_reg spans the integrals of the dual
        dual_int = find_integrals(dual)
        checks.append(
            check_that(
                "regular-character-spans-dual-integrals",
                "the regular character generates the integral line of the dual",
                _proportional(dual_int.right.coeffs, chi_reg)
                and any(chi_reg),
                witness=repr(chi_reg),
            )
        )
        # b_lam maps the center onto the trace forms
        center = A.center_basis()
        images = [b_lambda.apply(z.coeffs) for z in center]
        traces = _trace_form_space(A)
        combined_rank = _span_rank(field, traces + images)
        checks.append(
            check_that(
                "center-matches-trace-forms",
                "b_lam maps the center isomorphically onto the trace forms",
                len(traces) == len(center)
                and combined_rank == len(traces)
                and _span_rank(field, images) == len(center),
                lhs=f"dim center = {len(center)}",
                rhs=f"dim trace forms = {len(traces)}",
            )
        )
        # b_lam maps the cocommutative part onto the center of the dual
        cocom = H.cocommutative_basis()
        cocom_images = [b_lambda.apply(c.coeffs) for c in cocom]
        dual_center = dual.algebra.center_basis()
        dual_center_vectors = [z.coeffs for z in dual_center]
        checks.append(
            check_that(
                "cocommutative-matches-dual-center",
                "b_lam maps cocommutative elements onto the center of the dual",
                len(cocom) == len(dual_center)
                and _span_rank(field, dual_center_vectors + cocom_images)
                == len(dual_center)
                and _span_rank(field, cocom_images) == len(cocom),
                lhs=f"dim cocommutative = {len(cocom)}",
                rhs=f"dim dual center = {len(dual_center)}",
            )
        )
        # b_Lambda(f o S) = b_lam^{-1}(f) as matrices
        B_Lambda = _b_Lambda_matrix(H, pair.Lambda)
        lhs = B_Lambda * H.antipode.transpose()
        rhs = b_lambda.inverse()
        checks.append(
            check_that(
                "inverse-pairing-law",
                "b_Lambda composed with the dual antipode inverts b_lam",
                lhs == rhs,
            )
        )

    return SymmetrySuite(
        symmetric=F.symmetric,
        bi_symmetric=bi_symmetric,
        lambda_is_trace=lam_is_trace,
        b_lambda=b_lambda,
        checks=tuple(checks),
    )


def _vanishes_on_commutators(A: AlgebraSpec, f: Sequence[Scalar]) -> bool:
    n = A.dim
    for i in range(n):
        for j in range(i + 1, n):
            acc = A.field.zero()
            for k in range(n):
                diff = A.tensor[i][j][k] - A.tensor[j][i][k]
                if diff and f[k]:
                    acc = acc + diff * f[k]
            if acc:
                return False
    return True


def _b_Lambda_matrix(H: HopfSpec, Lambda: Element) -> MatrixE:
    """Matrix of f -> Lambda <- f from the dual basis to the defining basis."""
    n = H.dim
    field = H.algebra.field
    zero = field.zero()
    cols = []
    for c in range(n):
        col = [zero] * n
        for i, L in enumerate(Lambda.coeffs):
            if L:
                for (j, k, v) in H._comul_sparse[i]:
                    if j == c:
                        col[k] = col[k] + L * v
        cols.append(col)
    return MatrixE(field, [[cols[c][k] for c in range(n)] for k in range(n)])


def tensor_module(H: HopfSpec, M: Representation, N: Representation) -> Representation:
    """M (x) N as a module through the comultiplication; fully re-verified."""
    field = H.algebra.field
    mats = []
    for i in range(H.dim):
        acc = MatrixE.zeros(field, M.dim * N.dim, M.dim * N.dim)
        for (j, k, v) in H._comul_sparse[i]:
            acc = acc + M.matrices[j].kron(N.matrices[k]).scale(v)
        mats.append(acc)
    rep = check_representation(H.algebra, mats)
    for i in range(H.dim):
        acc = field.zero()
        for (j, k, v) in H._comul_sparse[i]:
            if M.character[j] and N.character[k]:
                acc = acc + v * M.character[j] * N.character[k]
        if acc != rep.character[i]:
            raise CorruptionError("tensor character does not factor through the coproduct")
    return rep


def dual_module(H: HopfSpec, M: Representation) -> Representation:
    """The dual module: a acts on M* as the transpose of S(a) on M."""
    mats = []
    for i in range(H.dim):
        s_ei = Element(H.algebra, H.antipode.col(i))
        mats.append(M.apply(s_ei).transpose())
    rep = check_representation(H.algebra, mats)
    for i in range(H.dim):
        if rep.character[i] != apply_functional(M.character, Element(H.algebra, H.antipode.col(i))):
            raise CorruptionError("dual character is not the antipode twist")
    return rep


def trivial_module(H: HopfSpec) -> Representation:
    """The counit acting on a one-dimensional space."""
    field = H.algebra.field
    mats = [MatrixE(field, [[H.counit[i]]]) for i in range(H.dim)]
    return check_representation(H.algebra, mats)


def trace_equivariance_checks(H: HopfSpec, M: Representation) -> "list[Check]":
    """For involutory antipode, evaluation M (x) M* -> unit module commutes
    with the action: ev(a . w) = eps(a) ev(w) for every basis a and all w."""
    integrals = find_integrals(H)
    if not integrals.involutory:
        raise PreconditionFailed("trace equivariance needs an involutory antipode")
    MMdual = tensor_module(H, M, dual_module(H, M))
    field = H.algebra.field
    m = M.dim
    ok = True
    wit = ""
    for i in range(H.dim):
        mat = MMdual.matrices[i]
        # row vector of ev composed with the action of e_i
        for col in range(m * m):
            acc = field.zero()
            for r in range(m):
                acc = acc + mat.rows[r * m + r][col]
            expect = H.counit[i] if (col // m) == (col % m) else field.zero()
            if acc != expect:
                ok = False
                wit = f"basis {i}, tensor coordinate {col}"
                break
        if not ok:
            break
    return [
        check_that(
            "evaluation-equivariance",
            "the evaluation map is a module map for involutory antipode",
            ok,
            witness=wit,
        )
    ]


@dataclass(frozen=True)
class Hopf7Report:
    index: Scalar
    checks: "tuple[Check, ...]"


def hopf7_report(H: HopfSpec, M: Representation) -> Hopf7Report:
    """Index and idempotent-image formulas for a separable involutory H.

    [H:M] = eps(Lambda)/dim M, computed independently as omega_M(z(M)); and
    b_lam(e(M)) = [H:M]^{-1} chi_M, with the regular-character rescaling
    b_chi_reg(e(M)) = (dim M) chi_M.
    """
    A = H.algebra
    field = A.field
    integrals = find_integrals(H)
    maschke = maschke_report(H)
    if not maschke.separable:
        raise PreconditionFailed("hopf7 needs a separable algebra")
    if not integrals.involutory:
        raise PreconditionFailed("hopf7 needs an involutory antipode")
    F, pair = frobenius_from_integrals(H)
    analysis = analyze_module(F, M)
    if not analysis.schur:
        raise NotSchur(f"endomorphism dimension {analysis.end_dim}")
    dim_m = field.from_int(M.dim)
    if not dim_m:
        raise PreconditionFailed("dim M vanishes in the base field")
    dim_eps = H.counit_of(pair.Lambda)
    expected_index = dim_eps / dim_m
    checks = [
        check_eq(
            "index-from-integral",
            "[H:M] = eps(Lambda) / dim M",
            analysis.index,
            expected_index,
        )
    ]
    e = analysis.idempotent
    b_lambda = F.gram.transpose()
    image = b_lambda.apply(e.coeffs)
    target = tuple(analysis.index.inverse() * c for c in M.character)
    checks.append(
        check_eq(
            "idempotent-maps-to-character",
            "b_lam(e(M)) = [H:M]^{-1} chi_M",
            image,
            target,
        )
    )
    rescaled = tuple(dim_eps * x for x in image)
    target2 = tuple(dim_m * c for c in M.character)
    checks.append(
        check_eq(
            "idempotent-maps-to-character-regular",
            "b_chi_reg(e(M)) = (dim M) chi_M",
            rescaled,
            target2,
        )
    )
    return Hopf7Report(index=analysis.index, checks=tuple(checks))
