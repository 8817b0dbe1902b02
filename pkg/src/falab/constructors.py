"""Built-in example factories.

Groups are generated from permutations by breadth-first closure with a
deterministic element order (identity first, discovery order afterwards),
so everything built downstream is reproducible. Irreducible bundles carry
hard-coded integer generator matrices extended along the discovery words;
irreducibility is verified, never searched for.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraSpec, Element
from .errors import (
    ClosureBound,
    CorruptionError,
    InvalidInput,
    NonSplittingField,
    NotSplit,
)
from .fields import FieldDescriptor, Scalar
from .frobenius import FrobeniusStructure, build_frobenius
from .hopf import HopfSpec, dual_hopf
from .linalg import MatrixE
from .representations import (
    Representation,
    WeakFormCertificate,
    check_representation,
    hom_space,
)

Permutation = tuple  # tuple[int, ...], images of 0..deg-1


def _compose(p: Permutation, q: Permutation) -> Permutation:
    """(p q)(i) = p(q(i)); apply q first."""
    return tuple(p[q[i]] for i in range(len(p)))


def _cycle_notation(p: Permutation) -> str:
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = p[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = p[nxt]
        parts.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "e"


class GroupTable:
    """A finite group as an index multiplication table."""

    __slots__ = ("order", "table", "identity", "inverses", "labels",
                 "generators", "words", "perms")

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        generators: Sequence[int] = (),
        words: Sequence[Sequence[int]] | None = None,
        perms: Sequence[Permutation] | None = None,
    ):
        self.order = len(table)
        self.table = tuple(tuple(r) for r in table)
        n = self.order
        for r in self.table:
            if len(r) != n or sorted(r) != list(range(n)):
                raise InvalidInput("multiplication table is not a Latin square")
        for c in range(n):
            if sorted(self.table[r][c] for r in range(n)) != list(range(n)):
                raise InvalidInput("multiplication table is not a Latin square")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise InvalidInput(f"table not associative at ({i},{j},{k})")
        ident = None
        for e in range(n):
            if all(self.table[e][i] == i and self.table[i][e] == i for i in range(n)):
                ident = e
                break
        if ident is None:
            raise InvalidInput("table has no identity")
        self.identity = ident
        invs = []
        for i in range(n):
            inv = next((j for j in range(n) if self.table[i][j] == ident), None)
            if inv is None or self.table[inv][i] != ident:
                raise InvalidInput(f"element {i} has no inverse")
            invs.append(inv)
        self.inverses = tuple(invs)
        self.labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))
        self.generators = tuple(generators)
        self.words = tuple(tuple(w) for w in words) if words is not None else None
        self.perms = tuple(perms) if perms is not None else None

    def centralizer_order(self, i: int) -> int:
        return sum(1 for j in range(self.order)
                   if self.table[i][j] == self.table[j][i])

    def conjugacy_class_representatives(self) -> "list[int]":
        seen = set()
        reps = []
        for i in range(self.order):
            if i in seen:
                continue
            reps.append(i)
            for g in range(self.order):
                # g i g^-1
                c = self.table[self.table[g][i]][self.inverses[g]]
                seen.add(c)
        return reps

    def element_order(self, i: int) -> int:
        k = 1
        cur = i
        while cur != self.identity:
            cur = self.table[cur][i]
            k += 1
        return k


def group_from_generators(perms: Sequence[Permutation], bound: int = 10_000) -> GroupTable:
    """Closure of permutation generators; identity first, then discovery order."""
    if not perms:
        raise InvalidInput("need at least one generator")
    deg = len(perms[0])
    gens = []
    for p in perms:
        t = tuple(p)
        if sorted(t) != list(range(deg)):
            raise InvalidInput(f"{p!r} is not a permutation of 0..{deg - 1}")
        gens.append(t)
    ident = tuple(range(deg))
    elements = [ident]
    index = {ident: 0}
    words: list[tuple[int, ...]] = [()]
    head = 0
    while head < len(elements):
        cur = elements[head]
        for gi, g in enumerate(gens):
            nxt = _compose(cur, g)
            if nxt not in index:
                if len(elements) >= bound:
                    raise ClosureBound(f"closure exceeded {bound} elements")
                index[nxt] = len(elements)
                elements.append(nxt)
                words.append(words[head] + (gi,))
        head += 1
    n = len(elements)
    table = [[index[_compose(elements[i], elements[j])] for j in range(n)] for i in range(n)]
    gen_indices = tuple(index[g] for g in gens)
    return GroupTable(
        table,
        labels=[_cycle_notation(p) for p in elements],
        generators=gen_indices,
        words=words,
        perms=elements,
    )


def group_algebra(table: GroupTable, field: FieldDescriptor) -> AlgebraSpec:
    one = field.one()
    zero = field.zero()
    n = table.order
    unit = [zero] * n
    unit[table.identity] = one
    triples = [(i, j, table.table[i][j], one) for i in range(n) for j in range(n)]
    return AlgebraSpec.from_triples(field, n, triples, unit, labels=table.labels)


def group_hopf(table: GroupTable, field: FieldDescriptor) -> HopfSpec:
    """The group algebra with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}."""
    A = group_algebra(table, field)
    n = table.order
    one = field.one()
    zero = field.zero()
    comul = [(i, i, i, one) for i in range(n)]
    counit = [one] * n
    s_rows = [[zero] * n for _ in range(n)]
    for j in range(n):
        s_rows[table.inverses[j]][j] = one
    return HopfSpec.from_comul_triples(A, comul, counit, MatrixE(field, s_rows))


def roots_of_unity(field: FieldDescriptor, d: int) -> "list[Scalar]":
    """All solutions of x^d = 1 in the field, deterministically ordered."""
    if d < 1:
        raise InvalidInput("order must be positive")
    if field.kind == "Q":
        out = [field.one()]
        if d % 2 == 0:
            out.append(field.from_int(-1))
        return out
    if field.kind == "Fp":
        return [field.from_int(x) for x in range(1, field.p)
                if pow(x, d, field.p) == 1]
    # cyclotomic: torsion units are +- zeta^k
    z = field.zeta()
    seen = []
    cands = []
    cur = field.one()
    for _ in range(field.n):
        cands.append(cur)
        cands.append(-cur)
        cur = cur * z
    for c in cands:
        if (c ** d).is_one() and c not in seen:
            seen.append(c)
    return seen


def multiplicative_characters(table: GroupTable, field: FieldDescriptor) -> "list[tuple[Scalar, ...]]":
    """All homomorphisms from the group into the field's unit group.

    Candidate generator values are roots of unity of the generator orders;
    each candidate assignment extends along discovery words and survives only
    if genuinely multiplicative on the whole table.
    """
    if table.words is None or not table.generators:
        raise InvalidInput("table lacks generator data")
    n = table.order
    gens = table.generators
    options = [roots_of_unity(field, table.element_order(g)) for g in gens]

    def extend(assign: "list[Scalar]") -> "tuple[Scalar, ...] | None":
        vals = [None] * n
        for i in range(n):
            acc = field.one()
            for gi in table.words[i]:
                acc = acc * assign[gi]
            vals[i] = acc
        for i in range(n):
            for j in range(n):
                if vals[table.table[i][j]] != vals[i] * vals[j]:
                    return None
        return tuple(vals)

    out: list[tuple[Scalar, ...]] = []
    idx = [0] * len(gens)
    while True:
        assign = [options[t][idx[t]] for t in range(len(gens))]
        vals = extend(assign)
        if vals is not None and vals not in out:
            out.append(vals)
        pos = len(gens) - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < len(options[pos]):
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return out


def dual_group_hopf(
    table: GroupTable, field: FieldDescriptor
) -> "tuple[HopfSpec, list[Element]]":
    """The dual of the group Hopf algebra, plus its full group-like list.

    The group-likes of the dual are exactly the multiplicative characters of
    the group; each one is re-verified by the group-like predicate.
    """
    H = group_hopf(table, field)
    D = dual_hopf(H)
    likes = []
    for vals in multiplicative_characters(table, field):
        g = Element(D.algebra, vals)
        if not D.is_group_like(g):
            raise CorruptionError("multiplicative character fails the group-like test")
        likes.append(g)
    return D, likes


def matrix_algebra(
    n: int, field: FieldDescriptor
) -> "tuple[AlgebraSpec, FrobeniusStructure]":
    """Full matrix algebra on the unit basis E_ij, with the trace form.

    The dual basis of E_ij is E_ji and the Casimir element is n * identity;
    both facts are verified at construction.
    """
    if n < 1:
        raise InvalidInput("matrix size must be >= 1")
    one = field.one()
    zero = field.zero()
    dim = n * n

    def idx(i: int, j: int) -> int:
        return i * n + j

    triples = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                # E_ij E_jk = E_ik
                triples.append((idx(i, j), idx(j, k), idx(i, k), one))
    unit = [zero] * dim
    for i in range(n):
        unit[idx(i, i)] = one
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    A = AlgebraSpec.from_triples(field, dim, triples, unit, labels)
    lam = [zero] * dim
    for i in range(n):
        lam[idx(i, i)] = one
    F = build_frobenius(A, lam)
    if not F.symmetric:
        raise CorruptionError("trace form must be symmetric")
    for i in range(n):
        for j in range(n):
            expected = [zero] * dim
            expected[idx(j, i)] = one
            if F.dual_right[idx(i, j)].coeffs != tuple(expected):
                raise CorruptionError("dual basis of E_ij is not E_ji")
    if F.casimir_element() != A.one().scale(field.from_int(n)):
        raise CorruptionError("Casimir element of the trace form must be n * 1")
    return A, F


def sweedler_h4(field: FieldDescriptor) -> HopfSpec:
    """The four-dimensional Hopf algebra on {1, g, x, gx} with g^2 = 1,
    x^2 = 0, xg = -gx; not unimodular, not involutory, never separable."""
    if field.characteristic == 2:
        raise InvalidInput("characteristic 2 collapses the defining relations")
    one = field.one()
    zero = field.zero()
    m1 = field.from_int(-1)
    I, G, X, GX = 0, 1, 2, 3
    triples = [
        (I, I, I, one), (I, G, G, one), (I, X, X, one), (I, GX, GX, one),
        (G, I, G, one), (G, G, I, one), (G, X, GX, one), (G, GX, X, one),
        (X, I, X, one), (X, G, GX, m1), (X, X, I, zero), (X, GX, I, zero),
        (GX, I, GX, one), (GX, G, X, m1), (GX, X, I, zero), (GX, GX, I, zero),
    ]
    A = AlgebraSpec.from_triples(
        field, 4, triples, unit=[one, zero, zero, zero], labels=["1", "g", "x", "gx"]
    )
    comul = [
        (I, I, I, one),
        (G, G, G, one),
        (X, X, I, one), (X, G, X, one),
        (GX, GX, G, one), (GX, I, GX, one),
    ]
    counit = [one, one, zero, zero]
    rows = [[zero] * 4 for _ in range(4)]
    rows[I][I] = one
    rows[G][G] = one
    rows[GX][X] = m1   # S(x) = -gx
    rows[X][GX] = one  # S(gx) = x
    s = MatrixE(field, rows)
    return HopfSpec.from_comul_triples(A, comul, counit, s)


@dataclass(frozen=True)
class IrreducibleBundle:
    """A Hopf algebra with a complete labeled set of split irreducibles."""

    hopf: HopfSpec
    table: GroupTable
    modules: "tuple[Representation, ...]"
    labels: "tuple[str, ...]"
    certificate: "WeakFormCertificate | None"


def _rep_from_generator_matrices(
    H: HopfSpec, table: GroupTable, gen_mats: "list[MatrixE]"
) -> Representation:
    """Extend matrices given on the generators along the discovery words."""
    field = H.algebra.field
    m = gen_mats[0].nrows
    mats = []
    for word in table.words:
        acc = MatrixE.identity(field, m)
        for gi in word:
            acc = acc * gen_mats[gi]
        mats.append(acc)
    return check_representation(H.algebra, mats)


def _verify_bundle(hopf: HopfSpec, mods, labels) -> None:
    n = hopf.algebra.dim
    total = sum(m.dim * m.dim for m in mods)
    if total != n:
        raise NotSplit(f"squared dimensions sum to {total}, not {n}")
    for a, M in enumerate(mods):
        if len(hom_space(M, M)) != 1:
            raise NotSplit(f"module {labels[a]} is not Schur")
        for b in range(a + 1, len(mods)):
            if hom_space(M, mods[b]):
                raise NotSplit(f"modules {labels[a]} and {labels[b]} are not disjoint")


def irreducible_bundle(name: str, field: FieldDescriptor | None = None) -> IrreducibleBundle:
    """Complete irreducible sets for S3, S4, and cyclic groups Cn.

    ``name`` is one of "S3", "S4", or "C<n>". The default field is Q for the
    symmetric groups and the smallest cyclotomic field containing the needed
    roots of unity for Cn. Raises ``NonSplittingField`` when the supplied
    field cannot split the group.
    """
    if name == "S3":
        field = field or FieldDescriptor.rationals()
        table = group_from_generators([(1, 0, 2), (1, 2, 0)])  # (1 2), (1 2 3)
        hopf = group_hopf(table, field)
        fi = field.from_int
        triv = [MatrixE(field, [[fi(1)]]), MatrixE(field, [[fi(1)]])]
        sgn = [MatrixE(field, [[fi(-1)]]), MatrixE(field, [[fi(1)]])]
        std = [
            MatrixE.from_ints(field, [[-1, 1], [0, 1]]),
            MatrixE.from_ints(field, [[0, -1], [1, -1]]),
        ]
        mods = tuple(
            _rep_from_generator_matrices(hopf, table, gm) for gm in (triv, sgn, std)
        )
        labels = ("triv", "sgn", "std")
        cert = WeakFormCertificate(
            "group basis spans an order over Z containing the dual-basis tensor"
        )
        try:
            _verify_bundle(hopf, mods, labels)
        except NotSplit as exc:
            raise NonSplittingField(str(exc)) from exc
        return IrreducibleBundle(hopf, table, mods, labels,
                                 cert if field.characteristic == 0 else None)

    if name == "S4":
        field = field or FieldDescriptor.rationals()
        table = group_from_generators([(1, 0, 2, 3), (1, 2, 3, 0)])  # (1 2), (1 2 3 4)
        hopf = group_hopf(table, field)
        fi = field.from_int
        triv = [MatrixE(field, [[fi(1)]]), MatrixE(field, [[fi(1)]])]
        sgn = [MatrixE(field, [[fi(-1)]]), MatrixE(field, [[fi(-1)]])]
        two = [
            MatrixE.from_ints(field, [[1, 0], [1, -1]]),
            MatrixE.from_ints(field, [[0, -1], [-1, 0]]),
        ]
        std = [
            MatrixE.from_ints(field, [[-1, 1, 0], [0, 1, 0], [0, 0, 1]]),
            MatrixE.from_ints(field, [[0, 0, -1], [1, 0, -1], [0, 1, -1]]),
        ]
        std_sgn = [m.scale(fi(-1)) for m in std]
        mods = tuple(
            _rep_from_generator_matrices(hopf, table, gm)
            for gm in (triv, sgn, two, std, std_sgn)
        )
        labels = ("triv", "sgn", "two", "std", "std_sgn")
        cert = WeakFormCertificate(
            "group basis spans an order over Z containing the dual-basis tensor"
        )
        try:
            _verify_bundle(hopf, mods, labels)
        except NotSplit as exc:
            raise NonSplittingField(str(exc)) from exc
        return IrreducibleBundle(hopf, table, mods, labels,
                                 cert if field.characteristic == 0 else None)

    if name.startswith("C") and name[1:].isdigit():
        order = int(name[1:])
        if order < 1:
            raise InvalidInput("cyclic group order must be positive")
        if field is None:
            if order <= 2:
                field = FieldDescriptor.rationals()
            else:
                field = FieldDescriptor.cyclotomic(order)
        cycle = tuple((i + 1) % order for i in range(order)) if order > 1 else (0,)
        table = group_from_generators([cycle])
        hopf = group_hopf(table, field)
        roots = roots_of_unity(field, order)
        # a primitive root of order `order`
        primitive = None
        for r in roots:
            if all(not (r ** k).is_one() for k in range(1, order)):
                primitive = r
                break
        if primitive is None and order == 1:
            primitive = field.one()
        if primitive is None:
            raise NonSplittingField(
                f"field {field} has no primitive root of unity of order {order}"
            )
        mods = []
        for j in range(order):
            gen_mat = MatrixE(field, [[primitive ** j]])
            mods.append(_rep_from_generator_matrices(hopf, table, [gen_mat]))
        labels = tuple(f"chi{j}" for j in range(order))
        cert = (
            WeakFormCertificate(
                "group basis spans an order over Z containing the dual-basis tensor"
            )
            if field.characteristic == 0
            else None
        )
        try:
            _verify_bundle(hopf, tuple(mods), labels)
        except NotSplit as exc:
            raise NonSplittingField(str(exc)) from exc
        return IrreducibleBundle(hopf, table, tuple(mods), labels, cert)

    raise InvalidInput(f"unknown bundle name {name!r}")
