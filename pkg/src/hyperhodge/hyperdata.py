"""The defining datum (alpha, beta) of a regular hypergeometric connection."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .circle import RationalLike, UnitRational, as_rational, format_rational, frac, parse_rational
from .errors import AlphaBetaCollision, Empty, LengthMismatch, OutOfRange, ParseError, ZeroAngle

Side = Literal["alpha", "beta"]
Point = Literal["zero", "one", "infinity"]
MonodromyTag = Literal["regular_from_alpha", "regular_from_beta", "pseudo_reflection", "scalar"]


@dataclass(frozen=True)
class HypergeometricData:
    """Sorted parameter lists of the operator prod(D - alpha_j) - z prod(D - beta_j).

    Construct through :func:`validate`; the constructor re-checks all
    invariants but does not sort.
    """

    alpha: tuple[UnitRational, ...]
    beta: tuple[UnitRational, ...]

    def __post_init__(self):
        _check(self.alpha, self.beta)

    @property
    def h(self) -> int:
        return len(self.alpha)

    def count(self, side: Side, bound: Fraction, *, strict: bool = False) -> int:
        """Number of entries of ``side`` that are <= bound (< bound if strict)."""
        values = self.alpha if side == "alpha" else self.beta
        return bisect_left(values, bound) if strict else bisect_right(values, bound)

    def distinct(self, side: Side) -> tuple[UnitRational, ...]:
        values = self.alpha if side == "alpha" else self.beta
        return tuple(sorted(set(values)))

    def remove(self, k: int, j: int) -> HypergeometricData:
        """Drop alpha_k and beta_j (1-based): the datum of the rank h-1 operator."""
        alpha = self.alpha[: k - 1] + self.alpha[k:]
        beta = self.beta[: j - 1] + self.beta[j:]
        return HypergeometricData(alpha, beta)

    def to_json(self) -> dict:
        return {
            "alpha": [format_rational(a) for a in self.alpha],
            "beta": [format_rational(b) for b in self.beta],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> HypergeometricData:
        if not isinstance(obj, Mapping) or set(obj) - {"alpha", "beta"} or not {"alpha", "beta"} <= set(obj):
            raise ParseError('expected an object with exactly the keys "alpha" and "beta"')
        lists = []
        for key in ("alpha", "beta"):
            raw = obj[key]
            if not isinstance(raw, list):
                raise ParseError(f'"{key}" must be a list of rational strings')
            lists.append([parse_rational(s) for s in raw])
        return validate(*lists)

    def __str__(self):
        a = ", ".join(format_rational(x) for x in self.alpha)
        b = ", ".join(format_rational(x) for x in self.beta)
        return f"alpha=({a}) beta=({b})"


def _check(alpha: tuple, beta: tuple) -> None:
    if len(alpha) != len(beta):
        raise LengthMismatch(f"len(alpha)={len(alpha)} != len(beta)={len(beta)}")
    if not alpha:
        raise Empty("h must be at least 1")
    for x in alpha + beta:
        if not isinstance(x, UnitRational):
            raise OutOfRange(f"{x!r} is not a UnitRational")
    if any(x > y for x, y in zip(alpha, alpha[1:])) or any(x > y for x, y in zip(beta, beta[1:])):
        raise ValueError("parameter lists must be sorted")
    beta_set = set(beta)
    for i, a in enumerate(alpha, 1):
        if a in beta_set:
            raise AlphaBetaCollision(i, beta.index(a) + 1)


def validate(alpha: Iterable[RationalLike], beta: Iterable[RationalLike]) -> HypergeometricData:
    """Check and normalize a parameter pair; lists may be given in any order."""
    alpha = [as_rational(x) for x in alpha]
    beta = [as_rational(x) for x in beta]
    if len(alpha) != len(beta):
        raise LengthMismatch(f"len(alpha)={len(alpha)} != len(beta)={len(beta)}")
    if not alpha:
        raise Empty("h must be at least 1")
    for x in alpha + beta:
        if not 0 <= x < 1:
            raise OutOfRange(f"{format_rational(x)} is not in [0, 1)")
    return HypergeometricData(
        tuple(sorted(UnitRational(x) for x in alpha)),
        tuple(sorted(UnitRational(x) for x in beta)),
    )


def multiplicity(data: HypergeometricData, side: Side, angle: RationalLike) -> int:
    values = data.alpha if side == "alpha" else data.beta
    return values.count(as_rational(angle))


@dataclass(frozen=True)
class MonodromyClass:
    """Conjugacy class of a local monodromy, stored as Jordan data.

    For the regular tags ``blocks`` lists one ``(angle, size)`` pair per
    eigenvalue angle. A pseudo-reflection is determined by its determinant,
    kept in ``determinant``; its ``blocks`` are left empty and the full Jordan
    type is available from :meth:`jordan_type`.
    """

    tag: MonodromyTag
    rank: int
    blocks: tuple[tuple[UnitRational, int], ...] = ()
    determinant: UnitRational | None = field(default=None)

    def jordan_type(self) -> list[tuple[UnitRational, int]]:
        if self.tag != "pseudo_reflection":
            return list(self.blocks)
        det = self.determinant
        zero = UnitRational(0)
        if det != 0:
            return [(det, 1)] + [(zero, 1)] * (self.rank - 1)
        # unipotent pseudo-reflection: a transvection
        return [(zero, 2)] + [(zero, 1)] * (self.rank - 2)

    def determinant_angle(self) -> UnitRational:
        if self.determinant is not None:
            return self.determinant
        return frac(sum((a * n for a, n in self.jordan_type()), Fraction(0)))

    def to_json(self) -> dict:
        out = {
            "tag": self.tag,
            "rank": self.rank,
            "blocks": [{"angle": format_rational(a), "size": n} for a, n in self.blocks],
        }
        if self.determinant is not None:
            out["determinant"] = format_rational(self.determinant)
        return out


def local_monodromy(data: HypergeometricData, point: Point) -> MonodromyClass:
    if point == "zero":
        counts = Counter(data.alpha)
        blocks = tuple((a, counts[a]) for a in sorted(counts))
        return MonodromyClass("regular_from_alpha", data.h, blocks)
    if point == "infinity":
        counts = Counter(frac(-b) for b in data.beta)
        blocks = tuple((a, counts[a]) for a in sorted(counts, reverse=True))
        return MonodromyClass("regular_from_beta", data.h, blocks)
    if point == "one":
        det = frac(sum(data.beta, Fraction(0)) - sum(data.alpha, Fraction(0)))
        return MonodromyClass("pseudo_reflection", data.h, (), det)
    raise ValueError(f"unknown singular point {point!r}")


def twist(data: HypergeometricData, gamma: RationalLike) -> HypergeometricData:
    """Rotate every parameter by -gamma modulo 1."""
    g = as_rational(gamma)
    return HypergeometricData(
        tuple(sorted(frac(a - g) for a in data.alpha)),
        tuple(sorted(frac(b - g) for b in data.beta)),
    )


def phi_dual(data: HypergeometricData) -> HypergeometricData:
    """Parameters of the pullback along z -> 1/z."""
    return HypergeometricData(
        tuple(sorted(frac(-b) for b in data.beta)),
        tuple(sorted(frac(-a) for a in data.alpha)),
    )


def psi_dual(data: HypergeometricData) -> HypergeometricData:
    """Parameters after the projective map exchanging 0 and 2 on P^1 - {0, 1, 2}.

    Needs alpha_1 > 0 and beta_1 > 0 so that 1 - x stays in (0, 1).
    """
    if data.alpha[0] == 0 or data.beta[0] == 0:
        raise ZeroAngle("psi_dual requires alpha_1 > 0 and beta_1 > 0")
    h = data.h
    return HypergeometricData(
        tuple(UnitRational(1 - data.beta[h - m]) for m in range(1, h + 1)),
        tuple(UnitRational(1 - data.alpha[h - m]) for m in range(1, h + 1)),
    )


def self_duality_check(data: HypergeometricData) -> bool:
    h = data.h
    for m in range(h):
        if (data.alpha[m] + data.alpha[h - 1 - m]).denominator != 1:
            return False
        if (data.beta[m] + data.beta[h - 1 - m]).denominator != 1:
            return False
    return True
