from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from falab.errors import InvalidInput, ShapeMismatch
from falab.fields import FieldDescriptor
from falab.linalg import (
    MatrixE,
    char_poly,
    integer_roots,
    kernel_basis,
    poly_as_integers,
    solve_linear,
)

Q = FieldDescriptor.rationals()
F3 = FieldDescriptor.prime_field(3)


def _cofactor_char_poly(rows):
    """Independent oracle: expand det(xI - A) over Fraction polynomials."""

    def pmul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def padd(a, b):
        n = max(len(a), len(b))
        out = [Fraction(0)] * n
        for i, x in enumerate(a):
            out[i] += x
        for i, x in enumerate(b):
            out[i] += x
        return out

    def pscale(a, s):
        return [x * s for x in a]

    n = len(rows)
    # matrix of polynomials xI - A
    mat = [
        [
            [Fraction(-rows[i][j]), Fraction(1)] if i == j else [Fraction(-rows[i][j])]
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(m):
        if len(m) == 1:
            return m[0][0]
        acc = [Fraction(0)]
        for j in range(len(m)):
            minor = [r[:j] + r[j + 1:] for r in m[1:]]
            term = pmul(m[0][j], det(minor))
            acc = padd(acc, pscale(term, Fraction((-1) ** j)))
        return acc

    return det(mat)


# -- solve_linear ---------------------------------------------------------------


def test_solve_identity():
    b = [Q.from_int(3), Q.from_int(5)]
    assert solve_linear(MatrixE.identity(Q, 2), b) == tuple(b)


def test_solve_inconsistent():
    A = MatrixE.from_ints(Q, [[1, 1], [2, 2]])
    assert solve_linear(A, [Q.from_int(1), Q.from_int(3)]) is None


def test_solve_prime_field():
    A = MatrixE.from_ints(F3, [[1, 1], [0, 1]])
    x = solve_linear(A, [F3.from_int(0), F3.from_int(2)])
    assert x == (F3.from_int(1), F3.from_int(2))
    assert A.apply(x) == (F3.zero(), F3.from_int(2))


def test_solve_shape_errors():
    A = MatrixE.identity(Q, 2)
    with pytest.raises(ShapeMismatch):
        solve_linear(A, [Q.one()])


# -- kernel_basis ---------------------------------------------------------------


def test_kernel_of_identity_empty():
    assert kernel_basis(MatrixE.identity(Q, 3)) == []


def test_kernel_of_zero_is_standard_basis():
    vecs = kernel_basis(MatrixE.zeros(Q, 2, 2))
    assert vecs == [(Q.one(), Q.zero()), (Q.zero(), Q.one())]


def test_kernel_canonical_vector():
    vecs = kernel_basis(MatrixE.from_ints(Q, [[1, 2]]))
    assert vecs == [(Q.from_int(-2), Q.one())]


# -- char_poly -------------------------------------------------------------------


def test_char_poly_identity():
    assert poly_as_integers(char_poly(MatrixE.identity(Q, 2))) == (1, -2, 1)


def test_char_poly_swap():
    assert poly_as_integers(char_poly(MatrixE.from_ints(Q, [[0, 1], [1, 0]]))) == (-1, 0, 1)


def test_char_poly_diagonal():
    A = MatrixE.from_ints(Q, [[6, 0, 0], [0, 2, 0], [0, 0, 3]])
    # oracle: (x-6)(x-2)(x-3) = x^3 - 11x^2 + 36x - 36
    assert poly_as_integers(char_poly(A)) == (-36, 36, -11, 1)


def test_char_poly_non_square():
    with pytest.raises(ShapeMismatch):
        char_poly(MatrixE.zeros(Q, 2, 3))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
def test_char_poly_matches_cofactor_oracle(entries):
    rows = [entries[0:3], entries[3:6], entries[6:9]]
    got = poly_as_integers(char_poly(MatrixE.from_ints(Q, rows)))
    oracle = _cofactor_char_poly(rows)
    assert list(got) == [int(c) for c in oracle]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_cayley_hamilton(entries):
    rows = [entries[0:3], entries[3:6], entries[6:9]]
    A = MatrixE.from_ints(Q, rows)
    coeffs = char_poly(A)
    acc = MatrixE.zeros(Q, 3, 3)
    power = MatrixE.identity(Q, 3)
    for c in coeffs:
        acc = acc + power.scale(c)
        power = power * A
    assert acc.is_zero()


def test_char_poly_prime_field_matches_reduction():
    rows = [[1, 2, 0], [0, 1, 1], [2, 0, 1]]
    over_q = poly_as_integers(char_poly(MatrixE.from_ints(Q, rows)))
    over_f3 = char_poly(MatrixE.from_ints(F3, rows))
    assert [c.value for c in over_f3] == [c % 3 for c in over_q]


# -- integer_roots ---------------------------------------------------------------


def test_integer_roots_examples():
    assert integer_roots([-36, 36, -11, 1]) == ([2, 3, 6], True)
    assert integer_roots([1, 0, 1]) == ([], False)
    assert integer_roots([1, -2, 1]) == ([1, 1], True)
    assert integer_roots([0, 0, 1]) == ([0, 0], True)


def test_integer_roots_rejects_non_monic():
    with pytest.raises(InvalidInput):
        integer_roots([1, 2])
    with pytest.raises(InvalidInput):
        integer_roots([Fraction(1), Fraction(1)])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_integer_roots_recover_built_roots(roots):
    poly = [1]
    for r in roots:
        poly = [0] + poly
        for i in range(len(poly) - 1):
            poly[i] += -r * poly[i + 1]
    found, complete = integer_roots(poly)
    assert complete
    assert found == sorted(roots)


# -- hypothesis round trips --------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=9, max_size=9),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
)
def test_solve_round_trip(entries, xs):
    A = MatrixE.from_ints(Q, [entries[0:3], entries[3:6], entries[6:9]])
    x = tuple(Q.from_int(v) for v in xs)
    b = A.apply(x)
    sol = solve_linear(A, b)
    assert sol is not None
    assert A.apply(sol) == b


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=12, max_size=12))
def test_kernel_properties(entries):
    A = MatrixE.from_ints(Q, [entries[0:4], entries[4:8], entries[8:12]])
    vecs = kernel_basis(A)
    assert len(vecs) == A.ncols - A.rank()
    for v in vecs:
        assert all(x.is_zero() for x in A.apply(v))
    if vecs:
        span = MatrixE(Q, [list(v) for v in vecs])
        assert span.rank() == len(vecs)
