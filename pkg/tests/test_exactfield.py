from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fields, scalars
from lefschetz_sections import (
    QQ,
    ContextMismatch,
    DivisionByZero,
    FieldCtx,
    InvalidParameter,
    scalar,
    scalar_from_integer,
    scalar_from_string,
    scalar_inv,
    scalar_to_string,
)


def test_from_integer_examples():
    assert scalar_from_integer(5, QQ).value == Fraction(5, 1)
    assert scalar_from_integer(7, FieldCtx(5)).value == 2
    assert scalar_from_integer(-1, FieldCtx(2)).value == 1


def test_inverse_examples():
    assert scalar_inv(scalar(Fraction(2, 3))) == scalar(Fraction(3, 2))
    assert scalar_inv(scalar(3, FieldCtx(7))).value == 5
    with pytest.raises(DivisionByZero):
        scalar_inv(scalar(0))
    with pytest.raises(ZeroDivisionError):
        scalar(0, FieldCtx(3)).inverse()


@pytest.mark.parametrize("p", [1, 4, 9, 2**31 + 11, -3])
def test_bad_characteristic(p):
    with pytest.raises(InvalidParameter):
        FieldCtx(p)


def test_largest_allowed_prime():
    assert FieldCtx(2147483647).characteristic == 2**31 - 1


def test_mixed_contexts_raise():
    with pytest.raises(ContextMismatch):
        scalar(1) + scalar(1, FieldCtx(3))
    with pytest.raises(ContextMismatch):
        scalar(1, FieldCtx(5)) * scalar(1, FieldCtx(7))


def test_string_round_trip_and_format():
    assert scalar_to_string(scalar(Fraction(-4, 6))) == "-2/3"
    assert scalar_to_string(scalar(4)) == "4"
    assert scalar_to_string(scalar(9, FieldCtx(7))) == "2 mod 7"
    assert scalar_from_string("2 mod 7") == scalar(2, FieldCtx(7))
    assert scalar_from_string("-1/2") == scalar(Fraction(-1, 2))
    assert scalar_from_string("1/2", FieldCtx(5)) == scalar(3, FieldCtx(5))
    with pytest.raises(InvalidParameter):
        scalar_from_string("0.5")
    with pytest.raises(ContextMismatch):
        scalar_from_string("1 mod 7", FieldCtx(5))


@given(fields.flatmap(lambda c: st.tuples(scalars(c), scalars(c), scalars(c))))
def test_field_axioms(triple):
    a, b, c = triple
    ctx = a.ctx
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ctx.zero() == a and a * ctx.one() == a
    assert a - a == 0
    if a:
        assert a * scalar_inv(a) == 1
        assert (b / a) * a == b


@given(fields.flatmap(lambda c: st.tuples(scalars(c), scalars(c))))
def test_results_stay_canonical(pair):
    a, b = pair
    for r in (a + b, a - b, a * b, -a):
        if r.ctx.characteristic:
            assert 0 <= r.value < r.ctx.characteristic
        else:
            assert r.denominator > 0
            assert gcd(abs(r.numerator), r.denominator) == 1
    zero = a - a
    if not zero.ctx.characteristic:
        assert (zero.numerator, zero.denominator) == (0, 1)


@given(st.sampled_from([2, 3, 5, 7, 101, 65537]), st.integers(-10**30, 10**30))
def test_reduction_commutes_with_embedding(p, n):
    ctx = FieldCtx(p)
    assert scalar_from_integer(n, ctx) == scalar_from_integer(n % p, ctx)


@given(fields.flatmap(scalars))
def test_serialization_round_trip(s):
    assert scalar_from_string(scalar_to_string(s), s.ctx) == s


def test_scalars_are_immutable_and_hashable():
    s = scalar(3)
    with pytest.raises(AttributeError):
        s.foo = 1
    assert len({scalar(1), scalar(Fraction(2, 2)), scalar(1, FieldCtx(3))}) == 2


def test_powers():
    assert scalar(2) ** 10 == 1024
    assert scalar(2) ** -2 == scalar(Fraction(1, 4))
    assert scalar(0) ** 0 == 1
    assert scalar(3, FieldCtx(7)) ** 6 == 1
