from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algebra.exceptions import (
    ElementParseError,
    FieldDivisionByZeroError,
    ModulusTooLargeError,
    NotPrimeModulusError,
    UnknownFieldError,
)
from algebra.fields import FieldKind, get_field, prime_field


@pytest.mark.parametrize("name,kind,characteristic", [
    ("q", FieldKind.RATIONALS, 0),
    ("Q", FieldKind.RATIONALS, 0),
    ("f7", FieldKind.PRIME, 7),
    ("F_7", FieldKind.PRIME, 7),
])
def test_get_field(name, kind, characteristic):
    field = get_field(name)
    assert field.kind == kind
    assert field.characteristic == characteristic


@pytest.mark.parametrize("name,error", [
    ("f4", NotPrimeModulusError),
    ("f1", NotPrimeModulusError),
    ("z", UnknownFieldError),
    ("fx", UnknownFieldError),
])
def test_get_field_rejects(name, error):
    with pytest.raises(error):
        get_field(name)


def test_modulus_too_large():
    with pytest.raises(ModulusTooLargeError):
        prime_field(2**31 + 11)


def test_prime_field_arithmetic():
    f7 = get_field("f7")
    assert f7.inv(3) == 5
    assert f7.div(1, 2) == 4
    assert f7.from_int(-1) == 6
    assert f7.pow(3, 6) == 1
    with pytest.raises(FieldDivisionByZeroError):
        f7.inv(0)


def test_parse(q):
    f7 = get_field("f7")
    assert q.parse(" -3/6 ") == Fraction(-1, 2)
    assert f7.parse("1/2") == 4
    assert f7.parse("3 mod 7") == 3
    with pytest.raises(ElementParseError):
        f7.parse("3 mod 5")
    with pytest.raises(ElementParseError):
        q.parse("1/0")


def test_render(q):
    assert q.render(Fraction(3, 4)) == "3/4"
    assert q.render(Fraction(4, 2)) == "2"
    assert get_field("f5").render(3) == "3 mod 5"
    assert get_field("f5").render(3, bare=True) == "3"


@settings(max_examples=200, deadline=None)
@given(p=st.sampled_from([2, 3, 5, 7, 101]), a=st.integers(), b=st.integers())
def test_prime_field_axioms(p, a, b):
    field = get_field(f"f{p}")
    a, b = field.from_int(a), field.from_int(b)
    assert field.add(field.sub(a, b), b) == a
    assert field.mul(a, b) == field.mul(b, a)
    if not field.is_zero(a):
        assert field.is_one(field.mul(a, field.inv(a)))
