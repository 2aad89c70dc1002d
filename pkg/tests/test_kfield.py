# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from core.errors import DivisionByZero, FieldMismatch, InvalidPrime, ScalarParseError
from core.kfield import (
    PrimeField,
    RationalField,
    RationalFunctionField2,
    field_from_descriptor,
    field_ops,
    is_rational_square,
    poly_degree,
    poly_divmod,
    poly_gcd,
    poly_mul,
)

FIELDS = [PrimeField(5), PrimeField(2), PrimeField(65537), RationalField(), RationalFunctionField2()]


def test_prime_field_product():
    F = PrimeField(5)
    assert field_ops(F.scalar(3), F.scalar(4), "mul").value == 2


def test_rational_sum():
    Q = RationalField()
    assert (Q.scalar(Fraction(1, 2)) + Q.scalar(Fraction(1, 3))).value == Fraction(5, 6)


def test_ratfunc_t_times_inverse_t():
    F = RationalFunctionField2()
    t = F.scalar(F.t())
    assert (t * t.inverse()).value == F.one()
    assert field_ops(t, F.scalar((1, 0b10)), "mul").value == (1, 1)


def test_ratfunc_canonical_form():
    F = RationalFunctionField2()
    # (t² + t) / t = t + 1
    assert F.normalize((0b110, 0b10)) == (0b11, 1)
    assert F.normalize((0, 0b111)) == (0, 1)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_field_axioms(field, rng):
    for _ in range(100):
        a, b, c = (field.random(rng) for _ in range(3))
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.sub(field.add(a, b), b) == a
        if not field.is_zero(a):
            assert field.mul(a, field.inv(a)) == field.one()
        assert field.normalize(a) == a


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_division_by_zero(field):
    with pytest.raises(DivisionByZero):
        field_ops(field.scalar(field.one()), field.scalar(field.zero()), "div")
    with pytest.raises(ZeroDivisionError):
        field.inv(field.zero())


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        PrimeField(5).scalar(1) + PrimeField(7).scalar(1)


@pytest.mark.parametrize("p", [4, 1, 91, 1 << 64])
def test_invalid_prime(p):
    with pytest.raises(InvalidPrime):
        PrimeField(p)


def test_parse_and_format():
    F = RationalFunctionField2()
    assert F.parse("6/2") == (0b11, 1)
    assert F.format((0b1011, 0b11)) == "b/3"
    Q = RationalField()
    assert Q.parse(" -3/6 ") == Fraction(-1, 2)
    assert Q.format(Fraction(5)) == "5/1"
    assert PrimeField(7).parse("9") == 2
    with pytest.raises(ScalarParseError):
        Q.parse("x/2")
    with pytest.raises(ScalarParseError):
        F.parse("1/0")


def test_descriptor_round_trip():
    for field in FIELDS:
        assert field_from_descriptor(field.descriptor()) == field
    with pytest.raises(ScalarParseError):
        field_from_descriptor({"kind": "complex"})


def test_is_rational_square():
    assert is_rational_square(Fraction(9, 4))
    assert is_rational_square(16)
    assert not is_rational_square(2)
    assert not is_rational_square(-4)


def test_binary_polynomial_helpers():
    # (t + 1)² = t² + 1
    assert poly_mul(0b11, 0b11) == 0b101
    assert poly_divmod(0b101, 0b11) == (0b11, 0)
    assert poly_divmod(0b111, 0b11) == (0b10, 1)
    assert poly_gcd(0b110, 0b101) == 0b11
    assert poly_degree(0b101) == 2
    assert poly_degree(0) == -1
