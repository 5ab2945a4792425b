"""Exact arithmetic on R/Z, with angles represented by rationals in [0, 1)."""

from __future__ import annotations

import re
from collections.abc import Iterable
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

from .errors import DistinctnessViolation, EmptySet, OutOfRange, ParseError, PivotCollision

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class UnitRational(Fraction):
    """A rational number x with 0 <= x < 1.

    Arithmetic on unit rationals returns plain ``Fraction`` values; only the
    constructor enforces the range.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if not 0 <= self < 1:
            raise OutOfRange(f"{self} is not in [0, 1)")
        return self

    def __repr__(self):
        return f"UnitRational({self.numerator}, {self.denominator})"

    # Exact cross-multiplication without the generic numbers.Rational dispatch.
    def __lt__(self, other):
        if type(other) in _FAST:
            return self._numerator * other._denominator < other._numerator * self._denominator
        return Fraction.__lt__(self, other)

    def __le__(self, other):
        if type(other) in _FAST:
            return self._numerator * other._denominator <= other._numerator * self._denominator
        return Fraction.__le__(self, other)

    def __gt__(self, other):
        if type(other) in _FAST:
            return self._numerator * other._denominator > other._numerator * self._denominator
        return Fraction.__gt__(self, other)

    def __ge__(self, other):
        if type(other) in _FAST:
            return self._numerator * other._denominator >= other._numerator * self._denominator
        return Fraction.__ge__(self, other)

    def __eq__(self, other):
        if type(other) in _FAST:
            return self._numerator == other._numerator and self._denominator == other._denominator
        return Fraction.__eq__(self, other)

    __hash__ = Fraction.__hash__


_FAST = (UnitRational, Fraction)


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ``x`` to a Fraction. Floats are rejected, strings must be canonical."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def as_unit(x: RationalLike) -> UnitRational:
    if isinstance(x, UnitRational):
        return x
    q = as_rational(x)
    return UnitRational(q.numerator, q.denominator)


def frac(x: RationalLike) -> UnitRational:
    """Fractional part: the unique u in [0, 1) with x - u an integer."""
    q = as_rational(x)
    n, d = q.numerator, q.denominator
    return UnitRational(n % d, d)


def cyclic_order(a: RationalLike, b: RationalLike, c: RationalLike) -> bool:
    """True iff E(a), E(b), E(c) occur counterclockwise, i.e. b is met before c
    when walking the circle counterclockwise from a."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    # integer form of frac(b - a) < frac(c - a); n % d keeps n/d reduced
    da, db, dc = a.denominator, b.denominator, c.denominator
    ra, rb, rc = a.numerator % da, b.numerator % db, c.numerator % dc
    if (ra, da) == (rb, db) or (rb, db) == (rc, dc) or (ra, da) == (rc, dc):
        raise DistinctnessViolation(f"points {a}, {b}, {c} are not pairwise distinct")
    ab, ac = da * db, da * dc
    return ((rb * da - ra * db) % ab) * ac < ((rc * da - ra * dc) % ac) * ab


def circular_gap(pivot: RationalLike, points: Iterable[RationalLike]) -> Fraction:
    """Clockwise distance from ``pivot`` to the nearest point: min frac(pivot - x)."""
    pivot = frac(pivot)
    pts = [frac(x) for x in points]
    if not pts:
        raise EmptySet("circular_gap needs at least one point")
    if pivot in pts:
        raise PivotCollision(f"pivot {pivot} is one of the points")
    return Fraction(min(frac(pivot - x) for x in pts))


def parse_rational(s: str) -> Fraction:
    """Parse the canonical ``"p/q"`` (or ``"p"``) representation.

    The denominator must be positive and the fraction in lowest terms.
    """
    if not isinstance(s, str):
        raise ParseError(f"expected a rational string, got {s!r}")
    m = _RATIONAL_RE.match(s.strip())
    if m is None:
        raise ParseError(f"malformed rational {s!r}")
    p = int(m.group(1))
    if m.group(2) is None:
        return Fraction(p)
    q = int(m.group(2))
    if q == 0:
        raise ParseError(f"zero denominator in {s!r}")
    if gcd(abs(p), q) != 1:
        raise ParseError(f"{s!r} is not in lowest terms")
    return Fraction(p, q)


def format_rational(x: RationalLike) -> str:
    q = as_rational(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
