from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from falab.errors import FieldMismatch, InvalidInput
from falab.fields import (
    FieldDescriptor,
    cyclotomic_polynomial,
    is_prime,
    scalar_from_text,
    scalar_to_text,
)

Q = FieldDescriptor.rationals()
F5 = FieldDescriptor.prime_field(5)
K4 = FieldDescriptor.cyclotomic(4)


def test_prime_check():
    assert is_prime(2) and is_prime(97)
    assert not is_prime(1) and not is_prime(91)
    with pytest.raises(InvalidInput):
        FieldDescriptor.prime_field(6)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_zeta_satisfies_its_polynomial(n):
    K = FieldDescriptor.cyclotomic(n)
    z = K.zeta()
    assert (z ** n).is_one()
    acc = K.zero()
    for i, c in enumerate(K.modulus):
        acc = acc + K.from_int(c) * z ** i
    assert acc.is_zero()


def test_canonical_forms():
    assert Q.from_fraction(Fraction(2, 4)) == Q.from_fraction(Fraction(1, 2))
    assert F5.from_int(7) == F5.from_int(2)
    assert F5.from_fraction(Fraction(1, 2)) == F5.from_int(3)  # 1/2 = 3 mod 5
    i = K4.zeta()
    assert i * i == K4.from_int(-1)
    assert K4.from_coeffs([Fraction(0), Fraction(0), Fraction(1)]) == K4.from_int(-1)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Q.one() / Q.zero()
    with pytest.raises(ZeroDivisionError):
        F5.one() / F5.zero()
    with pytest.raises(ZeroDivisionError):
        K4.one() / K4.zero()


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        Q.one() + F5.one()


def test_integer_recognition():
    assert Q.from_int(-3).as_int() == -3
    assert not Q.from_fraction(Fraction(1, 2)).is_rational_integer()
    z = K4.zeta()
    assert not z.is_rational_integer()
    assert (z * z * z * z).as_int() == 1
    with pytest.raises(InvalidInput):
        z.as_int()


def test_text_round_trip():
    cases = [
        (Q, "3"), (Q, "-5/7"), (F5, "4"),
    ]
    for field, text in cases:
        s = scalar_from_text(field, text)
        assert scalar_to_text(s) == text
    s = scalar_from_text(K4, ["1", "-1/2"])
    assert scalar_to_text(s) == ["1", "-1/2"]
    # overly long coefficient lists reduce into canonical form
    long = scalar_from_text(K4, ["0", "0", "0", "0", "1"])  # zeta^4 = 1
    assert long == K4.one()


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_rational_field_axioms(a, b, c):
    x, y, z = Q.from_int(a), Q.from_int(b), Q.from_int(c)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    if b:
        assert (x / y) * y == x


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_cyclotomic_field_axioms(a0, a1, b0, b1):
    x = K4.from_coeffs([Fraction(a0), Fraction(a1)])
    y = K4.from_coeffs([Fraction(b0), Fraction(b1)])
    assert x * y == y * x
    assert (x + y) * (x - y) == x * x - y * y
    if not y.is_zero():
        assert (x / y) * y == x
        assert (y.inverse() * y).is_one()


@given(st.integers(-20, 20))
def test_prime_field_inverse(a):
    x = F5.from_int(a)
    if x:
        assert (x * x.inverse()).is_one()
