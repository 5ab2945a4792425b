"""Seeded random and exhaustive generators of valid hypergeometric data."""

from __future__ import annotations

import random
from collections.abc import Iterator
from fractions import Fraction
from itertools import combinations_with_replacement

from .circle import UnitRational
from .hyperdata import HypergeometricData, validate


def unit_rationals(max_den: int) -> list[Fraction]:
    """All distinct rationals in [0, 1) with denominator <= max_den, sorted."""
    return sorted({Fraction(n, q) for q in range(1, max_den + 1) for n in range(q)})


def random_data(rng: random.Random, max_h: int, max_den: int, repeat: float = 0.3) -> HypergeometricData:
    """Draw a valid datum; with probability ``repeat`` an entry copies an
    earlier one on the same side, so repeated eigenvalues show up often."""
    h = rng.randint(1, max_h)
    while True:
        sides = []
        for _ in range(2):
            xs: list[Fraction] = []
            for _ in range(h):
                if xs and rng.random() < repeat:
                    xs.append(rng.choice(xs))
                else:
                    q = rng.randint(1, max_den)
                    xs.append(Fraction(rng.randrange(q), q))
            sides.append(xs)
        if not set(sides[0]) & set(sides[1]):
            return validate(*sides)


def random_batch(seed: int, n: int, max_h: int, max_den: int) -> list[HypergeometricData]:
    rng = random.Random(seed)
    return [random_data(rng, max_h, max_den) for _ in range(n)]


def all_data(max_h: int, max_den: int, min_h: int = 1) -> Iterator[HypergeometricData]:
    """Every valid datum with min_h <= h <= max_h and denominators <= max_den."""
    values = [UnitRational(x) for x in unit_rationals(max_den)]
    for h in range(min_h, max_h + 1):
        multisets = list(combinations_with_replacement(values, h))
        for alpha in multisets:
            aset = set(alpha)
            for beta in multisets:
                if aset.isdisjoint(beta):
                    yield HypergeometricData(alpha, beta)
