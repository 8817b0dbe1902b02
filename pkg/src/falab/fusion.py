"""Fusion (Grothendieck) rings of split semisimple Hopf algebras.

A ``FusionRing`` is a based ring over the integers: nonnegative structure
constants N[i][j][k], a duality permutation, positive dimension grades, and
a distinguished unit class. Everything downstream of construction — the
adjoint class, its spectrum, the semisimplicity locus over prime fields, the
class equation, and dimension divisibility — is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Element
from .errors import (
    CorruptionError,
    InvalidInput,
    NonIntegerMultiplicity,
    NotComplete,
    NotCommutative,
    NotSplit,
    PreconditionFailed,
    ShapeMismatch,
)
from .fields import FieldDescriptor, Scalar
from .hopf import HopfSpec, find_integrals, frobenius_from_integrals, maschke_report
from .intlattice import IntLattice, integer_kernel, lattice_meet_line
from .linalg import (MatrixE, char_poly, integer_roots, kernel_basis,
                     poly_as_integers, solve_linear)
from .report import Check, check_eq, check_that, fact, skipped
from .representations import Representation, hom_space


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _primes_up_to(n: int) -> "list[int]":
    return [p for p in range(2, n + 1) if _is_prime(p)]


def _prime_factors(n: int) -> "list[int]":
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FusionRing:
    """A based Z-algebra with duality and a dimension augmentation."""

    __slots__ = ("rank", "labels", "dims", "tensor", "dual", "unit", "chi_central")

    def __init__(
        self,
        rank: int,
        labels: Sequence[str],
        dims: Sequence[int],
        tensor: Sequence[Sequence[Sequence[int]]],
        dual: Sequence[int],
        unit: int,
        chi_central: Sequence[bool] | None = None,
    ):
        self.rank = rank
        self.labels = tuple(labels)
        self.dims = tuple(int(d) for d in dims)
        self.tensor = tuple(tuple(tuple(int(x) for x in row) for row in plane)
                            for plane in tensor)
        self.dual = tuple(int(s) for s in dual)
        self.unit = int(unit)
        self.chi_central = (
            tuple(bool(b) for b in chi_central)
            if chi_central is not None
            else tuple(False for _ in range(rank))
        )
        self._validate()

    def _validate(self) -> None:
        r = self.rank
        if len(self.labels) != r or len(self.dims) != r or len(self.dual) != r:
            raise ShapeMismatch("labels, dims, dual must have length rank")
        if len(self.chi_central) != r:
            raise ShapeMismatch("central-character flags must have length rank")
        if len(self.tensor) != r or any(
            len(p) != r or any(len(row) != r for row in p) for p in self.tensor
        ):
            raise ShapeMismatch("fusion tensor must be rank^3")
        if not (0 <= self.unit < r):
            raise InvalidInput("unit index out of range")
        if sorted(self.dual) != list(range(r)):
            raise InvalidInput("duality map is not a permutation")
        for i in range(r):
            if self.dual[self.dual[i]] != i:
                raise InvalidInput("duality permutation is not an involution")
        for d in self.dims:
            if d < 1:
                raise InvalidInput("dimension grades must be positive integers")
        for p in self.tensor:
            for row in p:
                for x in row:
                    if x < 0:
                        raise InvalidInput("fusion multiplicities must be nonnegative")
        N = self.tensor
        # unit law
        for j in range(r):
            for k in range(r):
                want = 1 if j == k else 0
                if N[self.unit][j][k] != want or N[j][self.unit][k] != want:
                    raise InvalidInput("unit class does not act as identity")
        # associativity
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    for l in range(r):
                        lhs = sum(N[i][j][m] * N[m][k][l] for m in range(r))
                        rhs = sum(N[j][k][m] * N[i][m][l] for m in range(r))
                        if lhs != rhs:
                            raise InvalidInput(
                                f"fusion tensor not associative at ({i},{j},{k},{l})"
                            )
        # duality: the unit appears in V_i (x) V_j exactly when j = i*
        for i in range(r):
            for j in range(r):
                want = 1 if j == self.dual[i] else 0
                if N[i][j][self.unit] != want:
                    raise InvalidInput(
                        f"pairing with the unit fails at ({i},{j}): "
                        f"N = {N[i][j][self.unit]}, expected {want}"
                    )
        # dimension augmentation is multiplicative
        for i in range(r):
            for j in range(r):
                if self.dims[i] * self.dims[j] != sum(
                    N[i][j][k] * self.dims[k] for k in range(r)
                ):
                    raise InvalidInput(f"dimension grade not multiplicative at ({i},{j})")

    # -- ring arithmetic -----------------------------------------------------

    @property
    def global_dim(self) -> int:
        """Sum of squared dimension grades; the dimension of the underlying
        algebra when the ring comes from a complete set of irreducibles."""
        return sum(d * d for d in self.dims)

    def unit_vector(self) -> "tuple[int, ...]":
        return tuple(1 if i == self.unit else 0 for i in range(self.rank))

    def basis_vector(self, i: int) -> "tuple[int, ...]":
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def mul(self, x: Sequence[int], y: Sequence[int]) -> "tuple[int, ...]":
        r = self.rank
        out = [0] * r
        for i in range(r):
            if x[i]:
                for j in range(r):
                    if y[j]:
                        f = x[i] * y[j]
                        row = self.tensor[i][j]
                        for k in range(r):
                            if row[k]:
                                out[k] += f * row[k]
        return tuple(out)

    def star(self, x: Sequence[int]) -> "tuple[int, ...]":
        out = [0] * self.rank
        for i, c in enumerate(x):
            out[self.dual[i]] = c
        return tuple(out)

    def dim_of(self, x: Sequence[int]) -> int:
        return sum(c * d for c, d in zip(x, self.dims))

    def beta(self, x: Sequence[int], y: Sequence[int]) -> int:
        """The pairing: coefficient of the unit class in x*y."""
        return self.mul(x, y)[self.unit]

    def left_mult_matrix(self, x: Sequence[int]) -> "list[list[int]]":
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.rank)]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def is_commutative(self) -> bool:
        r = self.rank
        for i in range(r):
            for j in range(i + 1, r):
                if self.tensor[i][j] != self.tensor[j][i]:
                    return False
        return True

    def casimir_matrix(self) -> "list[list[int]]":
        """Matrix of x -> sum_i [V_{i*}] x [V_i] on the fusion basis."""
        r = self.rank
        cols = []
        for j in range(r):
            acc = [0] * r
            for i in range(r):
                term = self.mul(
                    self.mul(self.basis_vector(self.dual[i]), self.basis_vector(j)),
                    self.basis_vector(i),
                )
                for k in range(r):
                    acc[k] += term[k]
            cols.append(acc)
        return [[cols[j][i] for j in range(r)] for i in range(r)]

    def regular_class(self) -> "tuple[int, ...]":
        return tuple(self.dims)

    def __repr__(self) -> str:
        return f"FusionRing(rank={self.rank}, dims={self.dims})"


def tensor_character(
    H: HopfSpec, chi_list: "Sequence[Sequence[Scalar]]"
) -> "tuple[Scalar, ...]":
    """Character of the tensor product of modules with the given characters.

    The trace of a Kronecker product factors, so the character of a tensor
    module contracts through the comultiplication one factor at a time.
    """
    field = H.algebra.field
    n = H.dim
    cur = list(chi_list[0])
    for chi in chi_list[1:]:
        nxt = []
        for i in range(n):
            acc = field.zero()
            for (j, k, v) in H._comul_sparse[i]:
                if cur[j] and chi[k]:
                    acc = acc + v * cur[j] * chi[k]
            nxt.append(acc)
        cur = nxt
    return tuple(cur)


def build_g0(
    H: HopfSpec,
    irreducibles: Sequence[Representation],
    labels: Sequence[str] | None = None,
) -> FusionRing:
    """The Grothendieck ring of H on the supplied complete set of irreducibles.

    Multiplicities are the traces of the normalized integral acting on triple
    tensor products, computed at character level; each must land in the
    nonnegative integers. The duality permutation matches characters against
    their antipode twists. Every ring axiom is then verified on the result.
    """
    A = H.algebra
    field = A.field
    ints = find_integrals(H)
    mr = maschke_report(H)
    if not mr.separable:
        raise PreconditionFailed("the Hopf algebra is not separable")
    if not ints.involutory:
        raise PreconditionFailed("the antipode is not involutory")
    r = len(irreducibles)
    if labels is None:
        labels = [f"V{i}" for i in range(r)]
    for idx, M in enumerate(irreducibles):
        if len(hom_space(M, M)) != 1:
            raise NotSplit(f"module {labels[idx]} is not Schur")
    for a in range(r):
        for b in range(a + 1, r):
            if hom_space(irreducibles[a], irreducibles[b]):
                raise NotComplete(
                    f"modules {labels[a]} and {labels[b]} are isomorphic or linked"
                )
    total = sum(M.dim * M.dim for M in irreducibles)
    if total != A.dim:
        raise NotComplete(
            f"squared dimensions sum to {total}, algebra dimension is {A.dim}"
        )

    Lambda = mr.idempotent_integral
    eps_vals = [field.from_int(M.dim) for M in irreducibles]

    # duality permutation from the antipode twist of characters
    chars = [M.character for M in irreducibles]
    twisted = []
    for chi in chars:
        twisted.append(tuple(
            sum((chi[a] * H.antipode.rows[a][i] for a in range(A.dim)
                 if H.antipode.rows[a][i] and chi[a]), field.zero())
            for i in range(A.dim)
        ))
    dual = []
    for i in range(r):
        match = [j for j in range(r) if chars[j] == twisted[i]]
        if len(match) != 1:
            raise NotComplete(f"dual of module {labels[i]} is not in the list")
        dual.append(match[0])

    # fusion multiplicities: dim of the invariants of V_i (x) V_j (x) V_k*
    tensor = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for j in range(r):
            chi_ij = tensor_character(H, [chars[i], chars[j]])
            for k in range(r):
                chi_ijk = tensor_character(H, [chi_ij, twisted[k]])
                val = field.zero()
                for t, L in enumerate(Lambda.coeffs):
                    if L and chi_ijk[t]:
                        val = val + L * chi_ijk[t]
                if not val.is_rational_integer():
                    raise NonIntegerMultiplicity(
                        f"multiplicity at ({i},{j},{k}) is {val!r}"
                    )
                m = val.as_int()
                if m < 0:
                    raise NonIntegerMultiplicity(
                        f"multiplicity at ({i},{j},{k}) is negative: {m}"
                    )
                tensor[i][j][k] = m

    unit_idx = None
    for i, M in enumerate(irreducibles):
        if M.dim == 1 and M.character == tuple(H.counit):
            unit_idx = i
            break
    if unit_idx is None:
        raise NotComplete("the trivial module is missing from the list")

    # central characters in the dual algebra: chi f = f chi for all basis f
    central_flags = []
    for chi in chars:
        central = True
        n = A.dim
        for j in range(n):
            for k in range(n):
                lhs = field.zero()
                rhs = field.zero()
                for i2 in range(n):
                    if chi[i2]:
                        if H.comul[k][i2][j]:
                            lhs = lhs + chi[i2] * H.comul[k][i2][j]
                        if H.comul[k][j][i2]:
                            rhs = rhs + chi[i2] * H.comul[k][j][i2]
                if lhs != rhs:
                    central = False
                    break
            if not central:
                break
        central_flags.append(central)

    return FusionRing(
        rank=r,
        labels=labels,
        dims=[M.dim for M in irreducibles],
        tensor=tensor,
        dual=dual,
        unit=unit_idx,
        chi_central=central_flags,
    )


def adjoint_class(FR: FusionRing) -> "tuple[int, ...]":
    """z = sum_i [V_i][V_{i*}]; verified central, self-dual, of full dimension."""
    r = FR.rank
    z = tuple([0] * r)
    for i in range(r):
        z = tuple(
            a + b
            for a, b in zip(z, FR.mul(FR.basis_vector(i), FR.basis_vector(FR.dual[i])))
        )
    if FR.dim_of(z) != FR.global_dim:
        raise CorruptionError("adjoint class has wrong total dimension")
    if FR.star(z) != z:
        raise CorruptionError("adjoint class is not self-dual")
    for j in range(r):
        ej = FR.basis_vector(j)
        if FR.mul(z, ej) != FR.mul(ej, z):
            raise CorruptionError("adjoint class is not central")
    return z


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: "list[int]"
    complete: bool
    checks: "tuple[Check, ...]"


def adjoint_spectrum(FR: FusionRing) -> SpectrumReport:
    """Integer eigenvalues of left multiplication by the adjoint class.

    When the characteristic polynomial splits over the integers, the roots
    are positive, bounded by the global dimension, attain it, and (for a
    commutative ring) divide it. The multiplication matrix is also checked
    symmetric and positive definite via leading principal minors.
    """
    Q = FieldDescriptor.rationals()
    z = adjoint_class(FR)
    Zm = FR.left_mult_matrix(z)
    r = FR.rank
    checks: list[Check] = []
    sym = all(Zm[i][j] == Zm[j][i] for i in range(r) for j in range(r))
    checks.append(check_that(
        "adjoint-matrix-symmetric",
        "the matrix of the adjoint class in the dual-paired basis is symmetric",
        sym,
    ))
    M = MatrixE.from_ints(Q, Zm)
    minors_positive = True
    for k in range(1, r + 1):
        sub = MatrixE.from_ints(Q, [row[:k] for row in Zm[:k]])
        d = sub.det().as_fraction()
        if d <= 0:
            minors_positive = False
            break
    checks.append(check_that(
        "adjoint-matrix-positive-definite",
        "leading principal minors of the adjoint matrix are positive",
        minors_positive,
    ))
    cp = poly_as_integers(char_poly(M))
    roots, complete = integer_roots(list(cp))
    dim_h = FR.global_dim
    checks.append(check_that(
        "adjoint-spectrum-complete",
        "the characteristic polynomial of the adjoint class splits over Z",
        complete,
        lhs=str(roots),
    ))
    if roots:
        checks.append(check_that(
            "adjoint-eigenvalues-positive",
            "eigenvalues of the adjoint class are positive integers",
            all(v > 0 for v in roots),
            lhs=str(roots),
        ))
        checks.append(check_that(
            "adjoint-eigenvalues-bounded",
            "eigenvalues of the adjoint class are at most the global dimension",
            all(v <= dim_h for v in roots),
            lhs=str(roots),
            rhs=str(dim_h),
        ))
    if complete:
        checks.append(check_eq(
            "adjoint-top-eigenvalue",
            "the largest eigenvalue of the adjoint class is the global dimension",
            max(roots),
            dim_h,
        ))
    if FR.is_commutative() and roots:
        checks.append(check_that(
            "adjoint-eigenvalues-divide",
            "for a commutative ring every adjoint eigenvalue divides the dimension",
            all(dim_h % v == 0 for v in roots),
            lhs=str(roots),
            rhs=str(dim_h),
        ))
    return SpectrumReport(eigenvalues=roots, complete=complete, checks=tuple(checks))


@dataclass(frozen=True)
class SsLocusReport:
    meet_generator: int
    primes: "list[int]"
    semisimple: "dict[int, bool]"
    checks: "tuple[Check, ...]"


def ss_locus_mod_p(FR: FusionRing) -> SsLocusReport:
    """Primes p where the ring stays semisimple after reduction mod p.

    The generator d of (image of the Casimir operator) meet (integer multiples
    of the unit class) is computed by exact lattice arithmetic; reduction mod p
    is semisimple exactly when p does not divide d.
    """
    r = FR.rank
    C = FR.casimir_matrix()
    image = IntLattice(r, [[C[i][j] for i in range(r)] for j in range(r)])
    center = integer_kernel(_commutator_rows(FR), r)
    checks: list[Check] = []
    contained = all(
        center.contains([C[i][j] for i in range(r)]) for j in range(r)
    )
    checks.append(check_that(
        "casimir-image-in-center",
        "the Casimir image lies in the center lattice",
        contained,
    ))
    d = lattice_meet_line(image, list(FR.unit_vector()))
    dim_h = FR.global_dim
    primes = sorted(set(_primes_up_to(dim_h)) | set(_prime_factors(d) if d else []))
    semisimple = {p: (d != 0 and d % p != 0) for p in primes}
    checks.append(fact(
        "casimir-meet-generator",
        "generator of the Casimir ideal meet the integer multiples of the unit",
        d,
    ))
    checks.append(check_that(
        "divisors-of-dimension-not-semisimple",
        "every prime dividing the dimension destroys semisimplicity",
        all(not semisimple[p] for p in primes if dim_h % p == 0),
        lhs=str([p for p in primes if dim_h % p == 0]),
    ))
    checks.append(check_that(
        "large-primes-semisimple",
        "every prime above the dimension preserves semisimplicity",
        all(semisimple[p] for p in primes if p > dim_h),
        lhs=str([p for p in primes if p > dim_h]),
    ))
    if FR.is_commutative():
        checks.append(check_that(
            "commutative-locus-exact",
            "for a commutative ring: semisimple mod p iff p does not divide the dimension",
            all(semisimple[p] == (dim_h % p != 0) for p in primes),
            lhs=str({p: semisimple[p] for p in primes}),
            rhs=str(dim_h),
        ))
    return SsLocusReport(
        meet_generator=d, primes=primes, semisimple=semisimple, checks=tuple(checks)
    )


@dataclass(frozen=True)
class ClassEquationRow:
    values: "tuple[int, ...]"
    omega_z: int
    quotient: "int | None"


@dataclass(frozen=True)
class ClassEquationReport:
    rows: "tuple[ClassEquationRow, ...]"
    unsplit_dimension: int
    checks: "tuple[Check, ...]"


def class_equation_check(FR: FusionRing) -> ClassEquationReport:
    """Integer characters of a commutative fusion ring and their class equation.

    Characters are found by simultaneous eigenspace splitting of the left
    multiplication matrices, keeping only integer eigenvalues; subspaces that
    refuse to split over the integers are reported, not guessed at. For each
    character the adjoint value omega(z) must be a positive integer dividing
    the global dimension.
    """
    if not FR.is_commutative():
        raise NotCommutative("the class equation enumeration needs a commutative ring")
    Q = FieldDescriptor.rationals()
    r = FR.rank
    mats = [MatrixE.from_ints(Q, FR.left_mult_matrix(FR.basis_vector(i)))
            for i in range(r)]

    # subspaces as column-tuples over Q, canonicalized
    def canonical(basis_cols: "list[tuple]") -> "tuple[tuple, ...]":
        M = MatrixE(Q, [list(col) for col in basis_cols])
        red, piv = M.rref()
        return tuple(red.rows[i] for i in range(len(piv)))

    full = [tuple(Q.one() if i == j else Q.zero() for i in range(r)) for j in range(r)]
    spaces: "list[tuple[tuple, ...]]" = [canonical(full)]
    for gen in mats:
        new_spaces = []
        for basis in spaces:
            k = len(basis)
            B = MatrixE(Q, [list(col) for col in basis]).transpose()  # r x k
            # restriction S: gen . B = B . S, solved columnwise
            img = gen * B
            S_cols = []
            for c in range(k):
                col = solve_linear(B, img.col(c))
                if col is None:
                    raise CorruptionError("subspace is not invariant")
                S_cols.append(col)
            S = MatrixE(Q, [[S_cols[c][i] for c in range(k)] for i in range(k)])
            cp = poly_as_integers(char_poly(S))
            roots, complete = integer_roots(list(cp))
            consumed = 0
            for lam in sorted(set(roots)):
                lam_s = Q.from_int(lam)
                shifted = S - MatrixE.identity(Q, k).scale(lam_s)
                ker = kernel_basis(shifted)
                if not ker:
                    continue
                cols = []
                for v in ker:
                    w = B.apply(v)
                    cols.append(tuple(w))
                new_spaces.append(canonical(cols))
                consumed += len(ker)
            if consumed < k:
                # residual part without integer eigenvalues: keep as a block
                residual = MatrixE.identity(Q, k)
                for lam in sorted(set(roots)):
                    mult = sum(1 for t in roots if t == lam)
                    shifted = S - MatrixE.identity(Q, k).scale(Q.from_int(lam))
                    power = shifted
                    for _ in range(mult - 1):
                        power = power * shifted
                    residual = residual * power
                cols = [tuple(B.apply(residual.col(c))) for c in range(k)]
                nonzero = [c for c in cols if any(x for x in c)]
                if nonzero:
                    new_spaces.append(canonical(nonzero))
        spaces = new_spaces

    rows: list[ClassEquationRow] = []
    unsplit = 0
    dim_h = FR.global_dim
    z = adjoint_class(FR)
    for basis in spaces:
        scalars = []
        ok = True
        B = MatrixE(Q, [list(col) for col in basis]).transpose()
        for gen in mats:
            img = gen * B
            col = solve_linear(B, img.col(0))
            s = col[0] if col is not None else None
            # the subspace is scalar for gen iff img = B * s
            if s is None or img != B.scale(s):
                ok = False
                break
            if not s.is_rational_integer():
                ok = False
                break
            scalars.append(s.as_int())
        if not ok:
            unsplit += len(basis)
            continue
        omega_z = sum(c * v for c, v in zip(z, scalars))
        quotient = dim_h // omega_z if omega_z > 0 and dim_h % omega_z == 0 else None
        rows.append(ClassEquationRow(values=tuple(scalars), omega_z=omega_z,
                                     quotient=quotient))
    rows.sort(key=lambda row: row.values)

    checks: list[Check] = [
        check_that(
            "character-multiplicativity",
            "each integer character respects the fusion tensor",
            all(
                row.values[i] * row.values[j]
                == sum(FR.tensor[i][j][k] * row.values[k] for k in range(r))
                for row in rows
                for i in range(r)
                for j in range(r)
            ),
        ),
        check_that(
            "class-equation-divisibility",
            "every character value on the adjoint class divides the dimension",
            all(row.omega_z > 0 and dim_h % row.omega_z == 0 for row in rows),
            lhs=str([row.omega_z for row in rows]),
            rhs=str(dim_h),
        ),
    ]
    if unsplit == 0:
        checks.append(check_eq(
            "character-count",
            "a fully split commutative ring has rank many integer characters",
            len(rows),
            r,
        ))
    else:
        checks.append(fact(
            "unsplit-dimension",
            "total dimension of subspaces without integer splitting",
            unsplit,
        ))
    return ClassEquationReport(rows=tuple(rows), unsplit_dimension=unsplit,
                               checks=tuple(checks))


@dataclass(frozen=True)
class ZhuRow:
    label: str
    dim: int
    central: bool
    divides: "bool | None"
    quotient: "int | None"


def zhu_divisibility(FR: FusionRing) -> "tuple[list[ZhuRow], list[Check]]":
    """Dimension divisibility for classes with central character."""
    dim_h = FR.global_dim
    rows = []
    for i in range(FR.rank):
        if FR.chi_central[i]:
            d = FR.dims[i]
            rows.append(ZhuRow(
                label=FR.labels[i],
                dim=d,
                central=True,
                divides=dim_h % d == 0,
                quotient=dim_h // d if dim_h % d == 0 else None,
            ))
        else:
            rows.append(ZhuRow(label=FR.labels[i], dim=FR.dims[i], central=False,
                               divides=None, quotient=None))
    checks = [check_that(
        "central-character-dimension-divides",
        "dimensions of classes with central character divide the global dimension",
        all(row.divides for row in rows if row.central),
        lhs=str([(row.label, row.dim) for row in rows if row.central]),
        rhs=str(dim_h),
    )]
    if not any(row.central for row in rows):
        checks = [skipped(
            "central-character-dimension-divides",
            "dimensions of classes with central character divide the global dimension",
            "no class is flagged central",
        )]
    return rows, checks


def chi_ad_nonvanishing(
    H: HopfSpec,
    FR: FusionRing,
    irreducibles: Sequence[Representation],
    group_likes: Sequence[Element],
) -> "tuple[list[Scalar], list[Check]]":
    """Values of the adjoint character at group-like elements.

    With the rational representation algebra semisimple (Casimir image
    spanning the center over Q), each value must be nonzero. When every
    algebra basis vector is group-like, the value at a basis group-like
    equals the size of its centralizer among the basis, counted directly.
    """
    A = H.algebra
    field = A.field
    checks: list[Check] = []
    for g in group_likes:
        if not H.is_group_like(g):
            raise PreconditionFailed("supplied element is not group-like")
    r = FR.rank
    C = FR.casimir_matrix()
    Q = FieldDescriptor.rationals()
    casimir_rank = MatrixE.from_ints(Q, C).rank()
    center_dim = len(kernel_basis(MatrixE.from_ints(Q, _commutator_rows(FR))))
    semisimple = casimir_rank == center_dim
    checks.append(check_that(
        "rational-casimir-surjective",
        "the Casimir image spans the center over the rationals",
        semisimple,
        lhs=f"casimir rank {casimir_rank}",
        rhs=f"center dimension {center_dim}",
    ))
    values = []
    basis_group = H.basis_is_group_like()
    for g in group_likes:
        val = field.zero()
        for i in range(r):
            a = irreducibles[FR.dual[i]].character_of(g)
            b = irreducibles[i].character_of(g)
            val = val + a * b
        values.append(val)
        if semisimple:
            checks.append(check_that(
                "adjoint-character-nonzero",
                "the adjoint character does not vanish at group-likes",
                bool(val),
                lhs=repr(val),
                witness=repr(g.coeffs),
            ))
        if basis_group:
            idx = [t for t, c in enumerate(g.coeffs) if c]
            if len(idx) == 1 and g.coeffs[idx[0]].is_one():
                t = idx[0]
                cent = 0
                for s in range(A.dim):
                    es = A.basis_element(s)
                    et = A.basis_element(t)
                    if es * et == et * es:
                        cent += 1
                checks.append(check_eq(
                    "adjoint-character-centralizer",
                    "at a basis group-like the adjoint character counts the centralizer",
                    val,
                    field.from_int(cent),
                ))
    return values, checks


def _commutator_rows(FR: FusionRing) -> "list[list[int]]":
    r = FR.rank
    rows = []
    for i in range(r):
        ei = FR.basis_vector(i)
        for k in range(r):
            row = []
            for j in range(r):
                ej = FR.basis_vector(j)
                row.append(FR.mul(ei, ej)[k] - FR.mul(ej, ei)[k])
            rows.append(row)
    return rows


def regular_class_checks(FR: FusionRing) -> "list[Check]":
    """The class of the regular module: integral behaviour and pairing grades."""
    Q = FieldDescriptor.rationals()
    reg = FR.regular_class()
    checks = []
    ok = True
    for i in range(FR.rank):
        lhs = FR.mul(FR.basis_vector(i), reg)
        rhs = tuple(FR.dims[i] * x for x in reg)
        if lhs != rhs:
            ok = False
            break
    checks.append(check_that(
        "regular-class-integral",
        "multiplying the regular class by a basis class scales it by the grade",
        ok,
    ))
    checks.append(check_that(
        "regular-class-pairing",
        "the pairing of the regular class with a basis class is its grade",
        all(FR.beta(reg, FR.basis_vector(i)) == FR.dims[i] for i in range(FR.rank)),
    ))
    # the right-integral space over Q for the dimension augmentation is the
    # line through the regular class
    r = FR.rank
    rows = []
    for i in range(r):
        for a in range(r):
            row = []
            for j in range(r):
                # coefficient of x_j in (x e_i - d_i x)_a; right multiplication
                row.append(FR.mul(FR.basis_vector(j), FR.basis_vector(i))[a]
                           - (FR.dims[i] if a == j else 0))
            rows.append(row)
    ker = kernel_basis(MatrixE.from_ints(Q, rows))
    line_ok = len(ker) == 1
    if line_ok:
        v = ker[0]
        reg_q = [Q.from_int(x) for x in reg]
        # proportional?
        ratio = None
        for a, b in zip(v, reg_q):
            if b:
                ratio = a / b
                break
        line_ok = ratio is not None and all(
            a == ratio * b for a, b in zip(v, reg_q)
        )
    checks.append(check_that(
        "integral-line-is-regular-class",
        "the rational solutions of the integral equations form the regular line",
        line_ok,
        lhs=f"solution space dimension {len(ker)}",
    ))
    return checks
