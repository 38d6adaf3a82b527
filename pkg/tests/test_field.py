from fractions import Fraction
from itertools import product

import pytest

from sareg.field import QQ, FieldElement, FieldError, PrimeField, field_arithmetic, field_from_spec, is_prime


def test_f5_exhaustive():
    F = PrimeField(5)
    els = range(5)
    for a, b, c in product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(FieldError):
        F.inv(0)


def test_primality_and_spec():
    assert is_prime(32003) and not is_prime(32001)
    assert field_from_spec(None) == PrimeField(32003)
    assert field_from_spec("Q") is QQ or field_from_spec("Q") == QQ
    assert field_from_spec("7") == PrimeField(7)
    for bad in ("6", "x", "1"):
        with pytest.raises(ValueError):
            field_from_spec(bad)


def test_element_mismatch():
    a = PrimeField(5).element(2)
    b = PrimeField(7).element(2)
    with pytest.raises(FieldError, match="mismatch"):
        a + b
    with pytest.raises(FieldError):
        field_arithmetic(a, b, "mul")
    assert (a * 3).value == 1
    assert (a / 2).value == 1
    with pytest.raises(FieldError, match="zero divisor"):
        a / 0


def test_rationals_exact():
    x = FieldElement(QQ, Fraction(1, 3))
    assert (x + Fraction(2, 3)).value == 1
    assert field_arithmetic(x, FieldElement(QQ, 3), "mul").value == 1
    with pytest.raises(FieldError):
        x / 0


def test_fraction_into_prime_field():
    F = PrimeField(7)
    assert F(Fraction(1, 2)) == 4
    with pytest.raises(FieldError):
        F(Fraction(1, 7))
