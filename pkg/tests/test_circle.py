from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hyperhodge.circle import (
    UnitRational,
    circular_gap,
    cyclic_order,
    format_rational,
    frac,
    parse_rational,
)
from hyperhodge.errors import DistinctnessViolation, EmptySet, OutOfRange, ParseError, PivotCollision

from conftest import unit

rationals = st.fractions(max_denominator=50)


@pytest.mark.parametrize("x, expected", [(F(7, 5), F(2, 5)), (F(-1, 5), F(4, 5)), (F(0), F(0))])
def test_frac_examples(x, expected):
    assert frac(x) == expected
    assert isinstance(frac(x), UnitRational)


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        ("1/10", "1/5", "3/10", True),
        ("9/10", "1/10", "1/2", True),
        ("1/10", "3/10", "1/5", False),
    ],
)
def test_cyclic_order_examples(a, b, c, expected):
    assert cyclic_order(a, b, c) is expected


def test_cyclic_order_rejects_repeated_points():
    with pytest.raises(DistinctnessViolation):
        cyclic_order(F(1, 3), F(1, 3), F(1, 2))


def test_circular_gap_examples():
    # min of frac(1/5 - x) over {2/5, 3/5, 4/5} = min(4/5, 3/5, 2/5)
    assert circular_gap(F(1, 5), [F(2, 5), F(3, 5), F(4, 5)]) == F(2, 5)
    assert circular_gap(F(1, 2), [F(0)]) == F(1, 2)
    assert circular_gap(F(0), [F(1, 2)]) == F(1, 2)


def test_circular_gap_errors():
    with pytest.raises(EmptySet):
        circular_gap(F(1, 2), [])
    with pytest.raises(PivotCollision):
        circular_gap(F(1, 2), [F(1, 3), F(1, 2)])


@given(rationals)
def test_frac_idempotent_and_in_range(x):
    assert frac(frac(x)) == frac(x)
    assert 0 <= frac(x) < 1
    assert (x - frac(x)).denominator == 1


@given(rationals, st.integers(-10**6, 10**6))
def test_frac_integer_periodic(x, n):
    assert frac(x + n) == frac(x)


@given(unit(), unit(), unit(), rationals)
def test_cyclic_order_rotation_invariant(a, b, c, t):
    if len({a, b, c}) < 3:
        return
    assert cyclic_order(a, b, c) == cyclic_order(frac(a + t), frac(b + t), frac(c + t))


@given(unit(), unit(), unit())
def test_cyclic_order_cyclic_and_antisymmetric(a, b, c):
    if len({a, b, c}) < 3:
        return
    assert cyclic_order(a, b, c) == cyclic_order(b, c, a)
    assert cyclic_order(a, b, c) is not cyclic_order(a, c, b)


@given(unit(30), unit(30))
def test_unit_comparisons_agree_with_fraction(x, y):
    u, v = UnitRational(x), UnitRational(y)
    assert (u < v, u <= v, u > v, u >= v, u == v) == (x < y, x <= y, x > y, x >= y, x == y)
    assert (u < y, u == y, hash(u) == hash(x)) == (x < y, x == y, True)


def test_unit_rational_range():
    with pytest.raises(OutOfRange):
        UnitRational(1)
    with pytest.raises(OutOfRange):
        UnitRational(-1, 3)
    assert UnitRational(2, 6) == F(1, 3)


@pytest.mark.parametrize("s, value", [("3/7", F(3, 7)), ("-1/2", F(-1, 2)), ("5", F(5)), ("+2/3", F(2, 3))])
def test_parse_rational(s, value):
    assert parse_rational(s) == value


@pytest.mark.parametrize("s", ["2/4", "1/0", "0.5", "1/-2", "a", "", "1//2"])
def test_parse_rational_rejects(s):
    with pytest.raises(ParseError):
        parse_rational(s)


@given(rationals)
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_format_integers_without_denominator():
    assert format_rational(F(4, 2)) == "2"
    assert format_rational(F(-3, 6)) == "-1/2"


def test_floats_are_refused():
    with pytest.raises(TypeError):
        frac(0.5)
