"""Closed-form Hodge invariants of hypergeometric connections.

Conventions: Hodge numbers are indexed so that h^p = #rho^{-1}(p - 1). Local
tables at 0 and infinity use the matching indexing, so the Lefschetz sum of
either table reproduces :func:`hodge_vector` with no shift.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeVar

from .circle import UnitRational, as_unit, format_rational, frac, parse_rational
from .errors import HodgeError, IndexOutOfRange, MassViolation, NotSelfDual, ParseError
from .hyperdata import HypergeometricData, self_duality_check

Key = tuple[UnitRational, int, int]


@dataclass(frozen=True)
class LocalHodgeTable:
    """Multiplicities indexed by (angle, nilpotency level l, Hodge degree p).

    Holds either nu- or mu-invariants; stored entries are strictly positive
    and kept sorted, so equality is equality of the underlying association.
    """

    entries: tuple[tuple[Key, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[tuple, int] | Iterable[tuple[tuple, int]]) -> LocalHodgeTable:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        acc: dict[Key, int] = defaultdict(int)
        for (angle, l, p), n in items:
            if l < 0:
                raise ValueError(f"negative level l={l}")
            acc[(as_unit(angle), int(l), int(p))] += int(n)
        for key, n in acc.items():
            if n < 0:
                raise ValueError(f"negative multiplicity at {key}")
        return cls(tuple(sorted((k, n) for k, n in acc.items() if n)))

    def as_dict(self) -> dict[Key, int]:
        return dict(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def angles(self) -> list[UnitRational]:
        return sorted({k[0] for k, _ in self.entries})

    def at(self, angle) -> dict[tuple[int, int], int]:
        """Entries at one angle as {(l, p): mult}."""
        return {(l, p): n for (a, l, p), n in self.entries if a == angle}

    def mass(self, angle) -> int:
        return sum((l + 1) * n for (a, l, p), n in self.entries if a == angle)

    def degrees(self) -> list[int]:
        return sorted({p for (_, _, p), _ in self.entries})

    def shifted(self, c: int) -> LocalHodgeTable:
        return LocalHodgeTable(tuple(((a, l, p + c), n) for (a, l, p), n in self.entries))

    def relabeled(self, angle_map) -> LocalHodgeTable:
        return LocalHodgeTable.from_mapping(((angle_map(a), l, p), n) for (a, l, p), n in self.entries)

    def restricted(self, keep) -> LocalHodgeTable:
        return LocalHodgeTable(tuple((k, n) for k, n in self.entries if keep(k[0])))

    def to_json(self) -> list[dict]:
        return [
            {"angle": format_rational(a), "l": l, "p": p, "mult": n}
            for (a, l, p), n in self.entries
        ]

    @classmethod
    def from_json(cls, rows) -> LocalHodgeTable:
        if not isinstance(rows, list):
            raise ParseError("a local Hodge table is a list of entries")
        items = []
        for row in rows:
            try:
                key = (parse_rational(row["angle"]), row["l"], row["p"])
                n = row["mult"]
            except (KeyError, TypeError) as exc:
                raise ParseError(f"bad table entry {row!r}") from exc
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (row["l"], row["p"], n)) or n <= 0:
                raise ParseError(f"bad table entry {row!r}")
            items.append((key, n))
        try:
            return cls.from_mapping(items)
        except (ValueError, HodgeError) as exc:
            raise ParseError(str(exc)) from exc


@dataclass(frozen=True)
class HodgeVector:
    """Hodge numbers {p: h^p}, positive entries only, sorted by p."""

    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> HodgeVector:
        for p, n in mapping.items():
            if n < 0:
                raise ValueError(f"negative Hodge number at p={p}")
        return cls(tuple(sorted((int(p), int(n)) for p, n in mapping.items() if n)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def total(self) -> int:
        return sum(n for _, n in self.entries)

    def degrees(self) -> list[int]:
        return [p for p, _ in self.entries]

    def shifted(self, c: int) -> HodgeVector:
        return HodgeVector(tuple((p + c, n) for p, n in self.entries))

    def to_json(self) -> dict[str, int]:
        return {str(p): n for p, n in self.entries}


@dataclass(frozen=True)
class RealHodgeDiamond:
    weight: int
    ranks: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.ranks)

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "ranks": [{"p": p, "q": q, "rank": n} for (p, q), n in self.ranks],
        }


Shiftable = TypeVar("Shiftable", LocalHodgeTable, HodgeVector)


def normalize_min_p_to_zero(x: Shiftable) -> Shiftable:
    degrees = x.degrees()
    return x.shifted(-degrees[0]) if degrees else x


def equal_up_to_shift(x: Shiftable, y: Shiftable) -> int | None:
    """Return c with x.shifted(c) == y, or None if no such shift exists."""
    dx, dy = x.degrees(), y.degrees()
    if not dx or not dy:
        return 0 if x == y else None
    c = dy[0] - dx[0]
    return c if x.shifted(c) == y else None


# --- closed formulas --------------------------------------------------------

def rho(data: HypergeometricData, k: int) -> int:
    """rho(k) = #{j : alpha_j < beta_k} - k."""
    if not 1 <= k <= data.h:
        raise IndexOutOfRange(f"k={k} not in 1..{data.h}")
    return data.count("alpha", data.beta[k - 1], strict=True) - k


def rho_values(data: HypergeometricData) -> list[int]:
    return [rho(data, k) for k in range(1, data.h + 1)]


def hodge_vector(data: HypergeometricData) -> HodgeVector:
    return HodgeVector.from_mapping(Counter(r + 1 for r in rho_values(data)))


def local_table_zero(data: HypergeometricData) -> LocalHodgeTable:
    counts = Counter(data.alpha)
    table = {}
    for a, n in counts.items():
        p = data.count("alpha", a) - data.count("beta", a)
        table[(a, n - 1, p)] = 1
    return LocalHodgeTable.from_mapping(table)


def local_table_infinity(data: HypergeometricData) -> LocalHodgeTable:
    counts = Counter(data.beta)
    table = {}
    for b, n in counts.items():
        p = data.count("alpha", b, strict=True) - data.count("beta", b, strict=True)
        table[(frac(-b), n - 1, p)] = 1
    return LocalHodgeTable.from_mapping(table)


def mu_from_nu(table: LocalHodgeTable) -> LocalHodgeTable:
    """Vanishing-cycle invariants: at angle 0 the level l drops by one and
    level-0 entries disappear; other angles are unchanged."""
    out = {}
    for (a, l, p), n in table:
        if a != 0:
            out[(a, l, p)] = n
        elif l >= 1:
            out[(a, l - 1, p)] = n
    return LocalHodgeTable.from_mapping(out)


def lefschetz_hodge(table: LocalHodgeTable) -> HodgeVector:
    """Sum the Lefschetz strings: an entry at level l and degree q contributes
    to degrees q, q-1, ..., q-l."""
    acc: Counter[int] = Counter()
    for (_, l, q), n in table:
        for k in range(l + 1):
            acc[q - k] += n
    return HodgeVector.from_mapping(acc)


def check_mass(table: LocalHodgeTable, values: Iterable[UnitRational]) -> None:
    """Per-eigenvalue mass identity: sum (l+1) * mult at angle a == multiplicity of a."""
    expected = Counter(values)
    for a in set(expected) | set(table.angles()):
        got = table.mass(a)
        if got != expected[a]:
            raise MassViolation(f"mass {got} at angle {format_rational(a)}, expected {expected[a]}")


def signature(data: HypergeometricData) -> int:
    return sum((-1) ** (r % 2) for r in rho_values(data))


def interlacing(data: HypergeometricData) -> bool:
    merged = sorted([(a, 0) for a in data.alpha] + [(b, 1) for b in data.beta])
    sides = [s for _, s in merged]
    values = [x for x, _ in merged]
    if len(set(values)) != len(values):
        return False
    return all(sides[i] != sides[i + 1] for i in range(len(sides) - 1))


def real_hodge_diamond(data: HypergeometricData) -> RealHodgeDiamond:
    if not self_duality_check(data):
        raise NotSelfDual(f"{data} does not satisfy alpha_m + alpha_(h+1-m), beta_m + beta_(h+1-m) in Z")
    values = rho_values(data)
    p_plus, p_minus = max(values), min(values)
    counts = Counter(values)
    ranks = tuple(sorted(((k - p_minus, p_plus - k), n) for k, n in counts.items()))
    return RealHodgeDiamond(p_plus - p_minus, ranks)


def jump_profile(data: HypergeometricData, t: Fraction) -> int:
    """f(t) = #{alpha_i <= t} - #{beta_i <= t}."""
    return data.count("alpha", t) - data.count("beta", t)


def max_jump_profile(data: HypergeometricData) -> int:
    """max of f over [0, 1); f is a step function jumping only on alpha and beta,
    and it vanishes just below 1."""
    return max([0] + [jump_profile(data, t) for t in set(data.alpha) | set(data.beta)])


def psi_relabel(table: LocalHodgeTable) -> LocalHodgeTable:
    """Carry a table at z=0 of psi_dual(d) to the table at infinity of d.

    An angle a' = 1 - beta at zero of the dual becomes the angle frac(-beta)
    at infinity; levels and degrees are kept.
    """
    return table.relabeled(lambda a: frac(-(1 - a)))


