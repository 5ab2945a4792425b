"""Numeric data of the (a, b)-stability condition on parabolic Higgs bundles.

Subbundles are described only by their numeric profile: degree, jump sets
of the two full flags, and whether the fiber at 1 contains the marked line.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .circle import RationalLike, as_rational, format_rational, frac, parse_rational
from .errors import (
    AlphaBetaCollision,
    FullRankProfile,
    InvalidProfile,
    JumpIndexOutOfRange,
    ParseError,
    Resonant,
    WeightOutOfRange,
    WeightsNotStrict,
)
from .hyperdata import validate
from .invariants import HodgeVector, hodge_vector


@dataclass(frozen=True)
class HiggsWeights:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    c: Fraction
    delta: int
    resonant: bool

    @property
    def h(self) -> int:
        return len(self.a)

    def to_json(self) -> dict:
        return {
            "a": [format_rational(x) for x in self.a],
            "b": [format_rational(x) for x in self.b],
            "c": format_rational(self.c),
            "delta": self.delta,
            "resonant": self.resonant,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> HiggsWeights:
        if not isinstance(obj, Mapping) or not {"a", "b"} <= set(obj):
            raise ParseError('weights need the keys "a" and "b"')
        if not isinstance(obj["a"], list) or not isinstance(obj["b"], list):
            raise ParseError('"a" and "b" must be lists of rational strings')
        return make_weights([parse_rational(s) for s in obj["a"]], [parse_rational(s) for s in obj["b"]])


@dataclass(frozen=True)
class SubbundleProfile:
    degree: int
    jumps_zero: frozenset[int]
    jumps_infinity: frozenset[int]
    contains_line: bool
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidProfile(f"rank {self.rank} < 1")
        if len(self.jumps_zero) != self.rank or len(self.jumps_infinity) != self.rank:
            raise InvalidProfile("a rank r subbundle has exactly r jumps in each full flag")

    @classmethod
    def make(cls, degree: int, jumps_zero: Iterable[int], jumps_infinity: Iterable[int],
             contains_line: bool, rank: int | None = None) -> SubbundleProfile:
        jz, ji = frozenset(jumps_zero), frozenset(jumps_infinity)
        return cls(degree, jz, ji, contains_line, len(jz) if rank is None else rank)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "jumps_zero": sorted(self.jumps_zero),
            "jumps_infinity": sorted(self.jumps_infinity),
            "contains_line": self.contains_line,
            "rank": self.rank,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> SubbundleProfile:
        try:
            degree, jz, ji = obj["degree"], obj["jumps_zero"], obj["jumps_infinity"]
            line, rank = obj["contains_line"], obj["rank"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad subbundle profile {obj!r}") from exc
        ints = [degree, rank, *jz, *ji] if isinstance(jz, list) and isinstance(ji, list) else None
        if ints is None or not all(isinstance(v, int) and not isinstance(v, bool) for v in ints):
            raise ParseError(f"bad subbundle profile {obj!r}")
        if not isinstance(line, bool):
            raise ParseError('"contains_line" must be a boolean')
        if len(set(jz)) != len(jz) or len(set(ji)) != len(ji):
            raise ParseError("repeated jump index")
        return cls(degree, frozenset(jz), frozenset(ji), line, rank)


def _check_strict(xs: list[Fraction], name: str) -> None:
    for x in xs:
        if not 0 < x < 1:
            raise WeightOutOfRange(f"{name} weight {format_rational(x)} not in (0, 1)")
    if any(x >= y for x, y in zip(xs, xs[1:])):
        raise WeightsNotStrict(f"{name} weights must be strictly increasing")


def make_weights(a: Iterable[RationalLike], b: Iterable[RationalLike]) -> HiggsWeights:
    a = [as_rational(x) for x in a]
    b = [as_rational(x) for x in b]
    if len(a) != len(b) or not a:
        raise WeightOutOfRange("a and b must be nonempty and of equal length")
    _check_strict(a, "a")
    _check_strict(b, "b")
    total = sum(a, Fraction(0)) + sum(b, Fraction(0))
    c = Fraction(frac(-total))
    delta = -c - total
    assert delta.denominator == 1
    resonant = any(x + y == 1 for x in a for y in b)
    return HiggsWeights(tuple(a), tuple(b), c, int(delta), resonant)


def full_profile(w: HiggsWeights) -> SubbundleProfile:
    everything = range(1, w.h + 1)
    return SubbundleProfile.make(w.delta, everything, everything, True)


def parabolic_degree(w: HiggsWeights, s: SubbundleProfile) -> Fraction:
    for i in s.jumps_zero | s.jumps_infinity:
        if not 1 <= i <= w.h:
            raise JumpIndexOutOfRange(f"jump index {i} not in 1..{w.h}")
    if s.rank > w.h:
        raise InvalidProfile(f"rank {s.rank} exceeds h={w.h}")
    deg = Fraction(s.degree)
    deg += sum((w.a[i - 1] for i in s.jumps_zero), Fraction(0))
    deg += sum((w.b[i - 1] for i in s.jumps_infinity), Fraction(0))
    if s.contains_line:
        deg += w.c
    return deg


def is_destabilizing(w: HiggsWeights, s: SubbundleProfile) -> bool:
    """Stability asks for deg_{a,b}(E') < 0 on every proper invariant E';
    degree exactly zero therefore destabilizes."""
    if not 1 <= s.rank < w.h:
        raise FullRankProfile(f"rank {s.rank} is not a proper subbundle rank for h={w.h}")
    return parabolic_degree(w, s) >= 0


def hypergeometric_parameters(w: HiggsWeights) -> tuple[list[Fraction], list[Fraction]]:
    """alpha_i = 1 - a_{h+1-i}, beta_i = b_i."""
    return [1 - w.a[w.h - i] for i in range(1, w.h + 1)], list(w.b)


def stable_decomposition_ranks(w: HiggsWeights) -> HodgeVector:
    """Ranks of the graded pieces E^(p) of the unique stable point."""
    alpha, beta = hypergeometric_parameters(w)
    try:
        data = validate(alpha, beta)
    except AlphaBetaCollision as exc:
        raise Resonant("some a_i + b_j = 1") from exc
    return hodge_vector(data)


@dataclass
class CandidateReport:
    weights: HiggsWeights
    rows: list[tuple[SubbundleProfile, Fraction, bool]]

    @property
    def stable(self) -> bool:
        return not any(flag for _, _, flag in self.rows)

    def to_json(self) -> dict:
        return {
            "weights": self.weights.to_json(),
            "candidates": [
                {"profile": s.to_json(), "parabolic_degree": format_rational(d), "destabilizing": flag}
                for s, d, flag in self.rows
            ],
            "verdict": "no supplied candidate destabilizes" if self.stable else "destabilized",
            "stable": self.stable,
        }


def check_candidates(w: HiggsWeights, candidates: Iterable[SubbundleProfile]) -> CandidateReport:
    rows = [(s, parabolic_degree(w, s), is_destabilizing(w, s)) for s in candidates]
    return CandidateReport(w, rows)
