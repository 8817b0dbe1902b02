import pytest
from hypothesis import given, settings, strategies as st

from falab.algebra import AlgebraSpec, apply_functional
from falab.errors import BadUnit, FieldMismatch, NotAssociative
from falab.fields import FieldDescriptor

from conftest import (
    dual_number_algebra,
    field_q,
    m2_with_trace,
    qc2_algebra,
    qs3_hopf,
    s3_table,
)

Q = FieldDescriptor.rationals()


def test_constructor_rejects_non_associative():
    one, zero = Q.one(), Q.zero()
    # basis {1, a, b}: a a = b, a b = 1, b a = 0 breaks (a a) a = a (a a)
    triples = [(0, 0, 0, one), (0, 1, 1, one), (0, 2, 2, one),
               (1, 0, 1, one), (2, 0, 2, one),
               (1, 1, 2, one), (1, 2, 0, one)]
    with pytest.raises(NotAssociative):
        AlgebraSpec.from_triples(Q, 3, triples, unit=[one, zero, zero])


def test_constructor_rejects_bad_unit():
    one, zero = Q.one(), Q.zero()
    with pytest.raises(BadUnit):
        AlgebraSpec.from_triples(
            Q, 2,
            [(0, 0, 0, one), (0, 1, 1, one), (1, 0, 1, one)],
            unit=[zero, one],
        )


def test_unit_multiplication():
    A = qc2_algebra()
    a = A.element_from_ints([3, -2])
    assert A.one() * a == a and a * A.one() == a


def test_group_law_in_qs3():
    H = qs3_hopf()
    A = H.algebra
    table = s3_table()
    for i in range(6):
        g = A.basis_element(i)
        ginv = A.basis_element(table.inverses[i])
        assert g * ginv == A.one()


def test_matrix_unit_products():
    A, _ = m2_with_trace()
    E11, E12, E21 = A.basis_element(0), A.basis_element(1), A.basis_element(2)
    assert E11 * E12 == E12
    assert E12 * E11 == A.zero()
    assert E12 * E21 == E11


def test_left_regular_of_unit_is_identity():
    A = qc2_algebra()
    from falab.linalg import MatrixE

    assert A.left_regular_matrix(A.one()) == MatrixE.identity(Q, 2)


def test_left_regular_all_ones_for_group_sum():
    A = qs3_hopf().algebra
    total = A.element_from_ints([1] * 6)
    L = A.left_regular_matrix(total)
    assert all(x == Q.one() for row in L.rows for x in row)


def test_left_regular_trace_of_matrix_unit():
    A, _ = m2_with_trace()
    L = A.left_regular_matrix(A.basis_element(0))  # E11
    assert L.trace() == Q.from_int(2)


def test_center_of_matrix_algebra_is_scalars():
    A, _ = m2_with_trace()
    center = A.center_basis()
    assert len(center) == 1
    z = center[0]
    # spans the unit line
    assert z.coeffs[0] == z.coeffs[3] and z.coeffs[1].is_zero() and z.coeffs[2].is_zero()


def test_center_of_qs3_is_class_sums():
    A = qs3_hopf().algebra
    table = s3_table()
    center = A.center_basis()
    assert len(center) == 3
    # each center element is constant on conjugacy classes
    classes = {}
    for i in range(6):
        for g in range(6):
            c = table.table[table.table[g][i]][table.inverses[g]]
            classes.setdefault(i, set()).add(c)
    for z in center:
        for i in range(6):
            for j in classes[i]:
                assert z.coeffs[i] == z.coeffs[j]


def test_center_of_commutative_algebra_is_everything():
    A = qc2_algebra()
    assert len(A.center_basis()) == 2


def test_regular_character_dimension_one():
    one = Q.one()
    A = AlgebraSpec.from_triples(Q, 1, [(0, 0, 0, one)], unit=[one])
    assert A.regular_character() == (one,)


def test_regular_character_matrix_algebra_is_twice_trace():
    A, _ = m2_with_trace()
    chi = A.regular_character()
    # on the unit basis, Tr(E11) = Tr(E22) = 1, off-diagonal units have trace 0
    assert chi == (Q.from_int(2), Q.zero(), Q.zero(), Q.from_int(2))


def test_regular_character_group_algebra():
    A = qs3_hopf().algebra
    chi = A.regular_character()
    expected = tuple(
        Q.from_int(6) if i == s3_table().identity else Q.zero() for i in range(6)
    )
    assert chi == expected


def test_norm_examples():
    A = qc2_algebra()
    assert A.norm(A.one()) == Q.one()
    a = A.element_from_ints([3, 2])
    assert A.norm(a) == Q.from_int(5)  # 3^2 - 2^2
    H = qs3_hopf()
    two = H.algebra.one().scale(Q.from_int(2))
    assert H.algebra.norm(two) == Q.from_int(64)  # 2^6


def test_elements_of_different_parents_do_not_mix():
    A = qc2_algebra()
    B = dual_number_algebra()
    with pytest.raises(FieldMismatch):
        A.one() + B.one()


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=12, max_size=12))
def test_left_regular_is_multiplicative(coeffs):
    A = qs3_hopf().algebra
    a = A.element_from_ints(coeffs[:6])
    b = A.element_from_ints(coeffs[6:])
    assert A.left_regular_matrix(a * b) == (
        A.left_regular_matrix(a) * A.left_regular_matrix(b)
    )


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_left_and_right_traces_agree(coeffs):
    A = qs3_hopf().algebra
    a = A.element_from_ints(coeffs)
    assert A.left_regular_matrix(a).trace() == A.right_regular_matrix(a).trace()
    assert A.left_regular_matrix(a).trace() == apply_functional(
        A.regular_character(), a
    )


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=8, max_size=8))
def test_norm_is_multiplicative(coeffs):
    A, _ = m2_with_trace()
    a = A.element_from_ints(coeffs[:4])
    b = A.element_from_ints(coeffs[4:])
    assert A.norm(a * b) == A.norm(a) * A.norm(b)
