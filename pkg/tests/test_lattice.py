import pytest
from hypothesis import given, settings, strategies as st

from falab.errors import InvalidInput, ShapeMismatch
from falab.intlattice import IntLattice, integer_kernel, lattice_meet_line


def test_meet_line_examples():
    assert lattice_meet_line(IntLattice(2, [[2, 0], [0, 2]]), [1, 0]) == 2
    assert lattice_meet_line(IntLattice(2, [[1, 1]]), [1, 0]) == 0
    L = IntLattice(3, [[6, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert lattice_meet_line(L, [1, 0, 0]) == 6


def test_meet_line_errors():
    L = IntLattice(2, [[1, 0]])
    with pytest.raises(InvalidInput):
        lattice_meet_line(L, [0, 0])
    with pytest.raises(ShapeMismatch):
        lattice_meet_line(L, [1, 0, 0])


def test_hnf_canonical_form():
    L = IntLattice(3, [[3, 1, 1], [1, 3, 1], [1, 1, 5]])
    assert L.rows == ((1, 1, 5), (0, 2, 14), (0, 0, 18))
    # generator order must not matter
    M = IntLattice(3, [[1, 1, 5], [1, 3, 1], [3, 1, 1]])
    assert L == M


def test_hnf_invariants():
    L = IntLattice(4, [[2, 4, 6, 8], [0, 3, 5, 7], [0, 0, 0, 4], [2, 1, 1, 1]])
    pivots = []
    for row in L.rows:
        p = next(j for j, x in enumerate(row) if x)
        assert row[p] > 0
        pivots.append(p)
    assert pivots == sorted(pivots)
    for i, row in enumerate(L.rows):
        p = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            assert 0 <= L.rows[k][p] < row[p]


def test_membership():
    L = IntLattice(2, [[2, 0], [0, 3]])
    assert L.contains([4, 3])
    assert not L.contains([1, 0])
    assert L.contains([0, 0])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_meet_line_against_brute_force(entries, v):
    L = IntLattice(3, [entries[0:3], entries[3:6]])
    if not any(v):
        return
    d = lattice_meet_line(L, v)
    # brute force the least multiple inside the lattice
    brute = 0
    for m in range(1, 200):
        if L.contains([m * x for x in v]):
            brute = m
            break
    assert d == brute


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_integer_kernel_saturated(entries):
    rows = [entries[0:3], entries[3:6]]
    K = integer_kernel(rows, 3)
    # every kernel basis vector is annihilated
    for vec in K.rows:
        assert all(sum(r[j] * vec[j] for j in range(3)) == 0 for r in rows)
    # saturation: any integer vector in the rational kernel lies in K
    from fractions import Fraction

    from falab.fields import FieldDescriptor
    from falab.linalg import MatrixE, kernel_basis

    Q = FieldDescriptor.rationals()
    rational = kernel_basis(MatrixE.from_ints(Q, rows))
    assert K.rank == len(rational)
    for v in rational:
        denoms = [x.value.denominator for x in v]
        lcm = 1
        for d in denoms:
            from math import gcd

            lcm = lcm * d // gcd(lcm, d)
        ints = [int(x.value * lcm) for x in v]
        g = 0
        for x in ints:
            from math import gcd

            g = gcd(g, x)
        if g:
            ints = [x // g for x in ints]
        assert K.contains(ints)
