from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from falab.errors import NotAHomomorphism, SingularForm
from falab.fields import FieldDescriptor
from falab.frobenius import build_augmentation, build_frobenius, change_of_form_unit
from falab.linalg import MatrixE

from conftest import (
    cn_table,
    dual_number_algebra,
    field_fp,
    frobenius_fixture_pool,
    m2_with_trace,
    qc2_algebra,
    qs3_hopf,
    s3_table,
)

Q = FieldDescriptor.rationals()


def s3_identity_form():
    A = qs3_hopf().algebra
    lam = [Q.one() if i == s3_table().identity else Q.zero() for i in range(6)]
    return build_frobenius(A, lam)


# -- build_frobenius ---------------------------------------------------------------


def test_trace_form_on_matrix_algebra():
    _, F = m2_with_trace()
    assert F.symmetric
    assert F.nakayama_is_identity()


def test_group_form_dual_bases_are_inverses():
    F = s3_identity_form()
    assert F.symmetric
    table = s3_table()
    A = F.algebra
    for i in range(6):
        assert F.dual_right[i] == A.basis_element(table.inverses[i])


def test_dual_numbers_forms():
    A = dual_number_algebra()
    F = build_frobenius(A, [Q.zero(), Q.one()])  # coefficient of x
    assert F.symmetric
    with pytest.raises(SingularForm) as info:
        build_frobenius(A, [Q.one(), Q.zero()])  # coefficient of 1
    assert info.value.witness is not None
    # the witness is orthogonal to everything
    w = info.value.witness
    lam = [Q.one(), Q.zero()]
    from falab.algebra import apply_functional

    for i in range(2):
        assert apply_functional(lam, A.basis_element(i) * w).is_zero()


def test_dual_basis_identities_across_fixture_pool():
    for name, F in frobenius_fixture_pool():
        A = F.algebra
        n = A.dim
        for a_idx in range(n):
            a = A.basis_element(a_idx)
            left = A.zero()
            right = A.zero()
            for i in range(n):
                left = left + A.basis_element(i).scale(F.pair(a, F.dual_right[i]))
                right = right + F.dual_right[i].scale(F.pair(A.basis_element(i), a))
            assert left == a, name
            assert right == a, name


def test_nakayama_is_algebra_automorphism():
    for name, F in frobenius_fixture_pool():
        A = F.algebra
        for i in range(A.dim):
            for j in range(A.dim):
                ei, ej = A.basis_element(i), A.basis_element(j)
                lhs = F.apply_nakayama(ei * ej)
                rhs = F.apply_nakayama(ei) * F.apply_nakayama(ej)
                assert lhs == rhs, name
        assert F.symmetric == F.nakayama_is_identity(), name


# -- change of form -----------------------------------------------------------------


def test_change_of_form_same_form_gives_unit():
    F = s3_identity_form()
    assert change_of_form_unit(F, F) == F.algebra.one()


def test_change_of_form_scalar_rescale():
    A = qc2_algebra()
    F1 = build_frobenius(A, [Q.one(), Q.zero()])
    F2 = build_frobenius(A, [Q.from_int(2), Q.zero()])
    assert change_of_form_unit(F1, F2) == A.one().scale(Q.from_int(2))


def test_change_of_form_group_shift():
    A = qc2_algebra()
    F1 = build_frobenius(A, [Q.one(), Q.zero()])
    F2 = build_frobenius(A, [Q.zero(), Q.one()])
    assert change_of_form_unit(F1, F2) == A.element_from_ints([0, 1])


# -- Casimir machinery ----------------------------------------------------------------


def test_casimir_on_matrix_algebra():
    _, F = m2_with_trace()
    A = F.algebra
    z = F.casimir_apply(A.one())
    assert z == A.one().scale(Q.from_int(2))
    assert F.casimir_element() == z


def test_casimir_on_group_algebra():
    F = s3_identity_form()
    A = F.algebra
    assert F.casimir_apply(A.one()) == A.one().scale(Q.from_int(6))
    assert F.casimir_element() == A.one().scale(Q.from_int(6))


def test_casimir_ideal_matrix_algebra_full():
    _, F = m2_with_trace()
    basis = F.casimir_ideal_basis()
    assert len(basis) == 1
    sep, wit = F.is_separable()
    assert sep
    assert F.casimir_apply(wit) == F.algebra.one()


def test_casimir_ideal_f3c3_vanishes():
    F3 = field_fp(3)
    from falab.constructors import group_hopf

    H = group_hopf(cn_table(3), F3)
    lam = [F3.one(), F3.zero(), F3.zero()]
    F = build_frobenius(H.algebra, lam)
    assert F.casimir_matrix().is_zero()
    assert F.casimir_ideal_basis() == []
    sep, wit = F.is_separable()
    assert not sep and wit is None


def test_casimir_ideal_dual_numbers():
    A = dual_number_algebra()
    F = build_frobenius(A, [Q.zero(), Q.one()])
    basis = F.casimir_ideal_basis()
    assert len(basis) == 1
    # the ideal is the line through x, so 1 is not in it
    assert basis[0].coeffs[0].is_zero()
    sep, _ = F.is_separable()
    assert not sep


def test_separable_group_algebra():
    F = s3_identity_form()
    sep, wit = F.is_separable()
    assert sep
    assert F.casimir_apply(wit) == F.algebra.one()


# -- augmentations ----------------------------------------------------------------------


def test_augmentation_group_algebra():
    F = s3_identity_form()
    aug = build_augmentation(F, [Q.one()] * 6)
    assert aug.right_integral == F.algebra.element_from_ints([1] * 6)
    assert aug.left_integral == aug.right_integral
    assert aug.dim_generator == Q.from_int(6)


def test_augmentation_modular_group_algebra():
    F3 = field_fp(3)
    from falab.constructors import group_hopf

    H = group_hopf(cn_table(3), F3)
    F = build_frobenius(H.algebra, [F3.one(), F3.zero(), F3.zero()])
    aug = build_augmentation(F, [F3.one()] * 3)
    assert aug.dim_generator.is_zero()


def test_augmentation_trivial_algebra():
    from falab.algebra import AlgebraSpec

    one = Q.one()
    A = AlgebraSpec.from_triples(Q, 1, [(0, 0, 0, one)], unit=[one])
    F = build_frobenius(A, [one])
    aug = build_augmentation(F, [one])
    assert aug.right_integral == A.one()
    assert aug.dim_generator == one


def test_augmentation_rejects_non_homomorphism():
    F = s3_identity_form()
    bad = [Q.from_int(2)] + [Q.one()] * 5
    with pytest.raises(NotAHomomorphism):
        build_augmentation(F, bad)


# -- metamorphic and structural properties -----------------------------------------------


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 60))
def test_rescaling_functional_rescales_gram_fixes_invariants(t):
    base = s3_identity_form()
    A = base.algebra
    scale = Q.from_fraction(Fraction(t, 7))
    scaled = build_frobenius(A, [x * scale for x in base.functional])
    assert scaled.gram == base.gram.scale(scale)
    # dual right vectors divide by the scalar
    for y_old, y_new in zip(base.dual_right, scaled.dual_right):
        assert y_new == y_old.scale(scale.inverse())
    # separability, Casimir ideal, and integral lines are unchanged
    assert scaled.is_separable()[0] == base.is_separable()[0]
    span_old = [e.coeffs for e in base.casimir_ideal_basis()]
    span_new = [e.coeffs for e in scaled.casimir_ideal_basis()]
    assert span_old == span_new  # canonical bases coincide
    aug_old = build_augmentation(base, [Q.one()] * 6)
    aug_new = build_augmentation(scaled, [Q.one()] * 6)
    ratio = None
    for x, y in zip(aug_new.right_integral.coeffs, aug_old.right_integral.coeffs):
        if y:
            ratio = x / y
            break
    assert ratio is not None
    assert aug_new.right_integral == aug_old.right_integral.scale(ratio)


@settings(max_examples=10, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=36, max_size=36))
def test_alternative_dual_bases_leave_casimir_invariant(entries):
    """Any dual-basis pair for the same form computes the same Casimir values."""
    F = s3_identity_form()
    A = F.algebra
    P = MatrixE.from_ints(Q, [entries[i * 6:(i + 1) * 6] for i in range(6)])
    if P.det().is_zero():
        return
    Pinv = P.inverse()
    xs = []
    ys = []
    for j in range(6):
        xs.append(A.element(P.col(j)))
        y = A.zero()
        for i in range(6):
            y = y + F.dual_right[i].scale(Pinv.rows[j][i])
        ys.append(y)
    # validity: a = sum_i beta(a, y_i) x_i for basis a
    for t in range(6):
        a = A.basis_element(t)
        acc = A.zero()
        for x, y in zip(xs, ys):
            acc = acc + x.scale(F.pair(a, y))
        assert acc == a
    # same Casimir operator values on the basis
    for t in range(6):
        a = A.basis_element(t)
        alt = A.zero()
        for x, y in zip(xs, ys):
            alt = alt + y * a * x
        assert alt == F.casimir_apply(a)
