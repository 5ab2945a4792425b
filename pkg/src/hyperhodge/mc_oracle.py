"""Independent recomputation of the local Hodge table at z=0 by rank recursion.

Each step realizes the datum as a middle convolution of a rank h-1 datum
(one alpha and one beta removed) and transports local Hodge data through it:

* after a twist making the smallest alpha positive, of maximal multiplicity
  and smaller than every beta, nu- and mu-invariants at z=0 coincide;
* if some alpha is repeated, one step with (k, j) = (1, 1) plus the mass
  identity determines the table (:func:`mu_step`);
* rank two with distinct alphas is a base case (:func:`rank2_base`);
* otherwise two children with different k pin the table down up to a common
  shift (:func:`solve_constraints`).

Intermediate tables are only meaningful up to a uniform shift of p and are
kept normalized to min p = 0. The final table is anchored by the max-degree
identity: its largest degree equals max f(t) with
f(t) = #{alpha_i <= t} - #{beta_i <= t}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .circle import UnitRational, circular_gap, cyclic_order, format_rational, frac
from .errors import (
    EqualAlphas,
    HodgeError,
    Inconsistent,
    MassViolation,
    NotRankTwo,
    Underdetermined,
    ZeroAngle,
)
from .hyperdata import HypergeometricData, twist
from .invariants import (
    HodgeVector,
    LocalHodgeTable,
    check_mass,
    equal_up_to_shift,
    lefschetz_hodge,
    local_table_zero,
    max_jump_profile,
    normalize_min_p_to_zero,
)


@dataclass(frozen=True)
class MCStep:
    k: int
    j: int
    gamma: UnitRational
    child: HypergeometricData


@dataclass(frozen=True)
class ConstraintSystem:
    """Child table of M_{k,j} together with the orientation of each child angle.

    ``orientation[a]`` is cyclic_order(a, alpha_k, beta_j).
    """

    k: int
    j: int
    child_mu: LocalHodgeTable
    orientation: tuple[tuple[UnitRational, bool], ...]

    def predicted(self, c: int) -> LocalHodgeTable:
        """Parent invariants at the angles alpha_m != alpha_k implied by the
        constraint with constant c."""
        orient = dict(self.orientation)
        rows = []
        for (a, l, p), n in self.child_mu:
            rows.append(((a, l, p - c + (0 if orient[a] else 1)), n))
        return LocalHodgeTable.from_mapping(rows)


def mc_rank(h: int) -> int:
    """Generic rank of MC_{beta_j - alpha_k}(M_{k,j} (x) L'_{k,j})."""
    if h < 2:
        raise ValueError("middle convolution step needs h >= 2")
    return (h - 1) + (h - 1) + 1 - (h - 1)


def make_step(twisted: HypergeometricData, k: int, j: int, gamma=UnitRational(0)) -> MCStep:
    child = twisted.remove(k, j)
    assert mc_rank(twisted.h) == child.h + 1 == twisted.h
    return MCStep(k, j, gamma, child)


def select_twist(data: HypergeometricData) -> tuple[UnitRational, HypergeometricData]:
    """Choose gamma so that after twisting the smallest alpha is positive, has
    maximal multiplicity and lies below every beta.

    The pivot is the first alpha of maximal multiplicity; it is moved to half
    its clockwise gap from the other parameters.
    """
    counts = Counter(data.alpha)
    top = max(counts.values())
    pivot = next(a for a in data.alpha if counts[a] == top)
    others = (set(data.alpha) | set(data.beta)) - {pivot}
    gap = circular_gap(pivot, others)
    gamma = frac(pivot - gap / 2)
    return gamma, twist(data, gamma)


def _orientation(child_angles, alpha_k, beta_j) -> tuple[tuple[UnitRational, bool], ...]:
    out = []
    for a in child_angles:
        forward = cyclic_order(a, alpha_k, beta_j)
        # the comparison of fractional parts used to derive the case split
        assert (frac(alpha_k - a) < frac(alpha_k - beta_j)) == forward
        out.append((a, forward))
    return tuple(out)


def mu_step(child_mu: LocalHodgeTable, k: int, j: int, twisted: HypergeometricData) -> LocalHodgeTable:
    """Parent mu-table at z=0 from the child's, when alpha_k is repeated.

    Angles other than alpha_k are copied, moved up one degree unless
    alpha_m -> alpha_k -> beta_j. At alpha_k the level and degree both rise by
    one; level 0 is filled by the mass identity, which leaves nothing there.
    """
    if twisted.alpha[0] == 0:
        raise ZeroAngle("mu_step needs alpha_1 > 0 so that nu and mu agree at z=0")
    ak, bj = twisted.alpha[k - 1], twisted.beta[j - 1]
    others = [a for a in child_mu.angles() if a != ak]
    orient = dict(_orientation(others, ak, bj))
    rows = []
    for (a, l, p), n in child_mu:
        if a == ak:
            rows.append(((a, l + 1, p + 1), n))
        else:
            rows.append(((a, l, p + (0 if orient[a] else 1)), n))
    parent = LocalHodgeTable.from_mapping(rows)
    check_mass(parent, twisted.alpha)
    return parent


def rank2_base(data: HypergeometricData) -> LocalHodgeTable:
    """Rank two with distinct alphas, from the two explicit cases.

    Twisting to 0 < a1 < a2 < b1 <= b2 (Case I) gives degrees 1, 2; twisting
    to 0 < a1 < b1 < a2 < b2 (Case II) gives degree 1 twice.
    """
    if data.h != 2:
        raise NotRankTwo(f"rank is {data.h}")
    if data.alpha[0] == data.alpha[1]:
        raise EqualAlphas("rank2_base needs distinct alphas")
    values = set(data.alpha) | set(data.beta)
    for pivot in data.alpha:
        gamma = frac(pivot - circular_gap(pivot, values - {pivot}) / 2)
        tw = twist(data, gamma)
        (a1, a2), (b1, b2) = tw.alpha, tw.beta
        if a2 < b1:
            degrees = (1, 2)
        elif b1 < a2 < b2:
            degrees = (1, 1)
        else:
            continue
        return LocalHodgeTable.from_mapping(
            {(frac(a1 + gamma), 0, degrees[0]): 1, (frac(a2 + gamma), 0, degrees[1]): 1}
        )
    raise AssertionError(f"no twist of {data} reaches either rank-two case")


def constraint_system(twisted: HypergeometricData, k: int, j: int, child_mu: LocalHodgeTable) -> ConstraintSystem:
    ak, bj = twisted.alpha[k - 1], twisted.beta[j - 1]
    return ConstraintSystem(k, j, child_mu, _orientation(child_mu.angles(), ak, bj))


def solve_constraints(data: HypergeometricData, systems: list[ConstraintSystem]) -> LocalHodgeTable:
    """Glue child predictions into the parent table, fixing each system's
    constant on an angle shared with the systems already merged."""
    if data.h < 3:
        raise Underdetermined("the constraint system determines the table only for h >= 3")
    if len(set(data.alpha)) != data.h:
        raise ValueError("solve_constraints handles distinct alphas only")
    if len({s.k for s in systems}) < 2:
        raise Underdetermined("need two constraint systems with different k")

    merged = normalize_min_p_to_zero(systems[0].predicted(0))
    for system in systems[1:]:
        guess = system.predicted(0)
        shared = sorted(set(guess.angles()) & set(merged.angles()))
        if not shared:
            raise Underdetermined(f"system ({system.k},{system.j}) shares no angle with the others")
        a = shared[0]
        c = min(p for _, p in guess.at(a)) - min(p for _, p in merged.at(a))
        pred = system.predicted(c)
        for a in shared:
            if pred.at(a) != merged.at(a):
                raise Inconsistent(f"systems disagree at angle {format_rational(a)}")
        new = pred.restricted(lambda x: x not in shared)
        merged = LocalHodgeTable.from_mapping(list(merged) + list(new))

    missing = set(data.alpha) - set(merged.angles())
    if missing:
        raise Underdetermined(f"angles {sorted(map(format_rational, missing))} not covered")
    check_mass(merged, data.alpha)
    return normalize_min_p_to_zero(merged)


@lru_cache(maxsize=4096)
def _table_up_to_shift(data: HypergeometricData) -> LocalHodgeTable:
    if data.h == 1:
        return LocalHodgeTable.from_mapping({(data.alpha[0], 0, 0): 1})
    if data.h == 2 and data.alpha[0] != data.alpha[1]:
        return normalize_min_p_to_zero(rank2_base(data))

    gamma, tw = select_twist(data)
    if max(Counter(tw.alpha).values()) >= 2:
        step = make_step(tw, 1, 1, gamma)
        table = mu_step(_table_up_to_shift(step.child), 1, 1, tw)
    else:
        systems = []
        for k, j in ((1, 1), (2, 1)):
            step = make_step(tw, k, j, gamma)
            systems.append(constraint_system(tw, k, j, _table_up_to_shift(step.child)))
        table = solve_constraints(tw, systems)
    return normalize_min_p_to_zero(table.relabeled(lambda a: frac(a + gamma)))


def oracle_local_table(data: HypergeometricData) -> LocalHodgeTable:
    """nu-table at z=0 computed by the recursion, in the canonical indexing."""
    table = _table_up_to_shift(data)
    return table.shifted(max_jump_profile(data) - table.degrees()[-1])


@dataclass
class VerifyReport:
    data: HypergeometricData
    oracle: LocalHodgeTable | None
    closed_form: LocalHodgeTable
    shift: int | None
    passed: bool
    diff: list[dict] = field(default_factory=list)
    error: str | None = None

    def to_json(self) -> dict:
        def lef(t):
            return None if t is None else lefschetz_hodge(t).to_json()

        return {
            "input": self.data.to_json(),
            "oracle": None if self.oracle is None else self.oracle.to_json(),
            "closed_form": self.closed_form.to_json(),
            "lefschetz": {"oracle": lef(self.oracle), "closed_form": lef(self.closed_form)},
            "shift": self.shift,
            "pass": self.passed,
            "diff": self.diff,
            "error": self.error,
        }


def _diff(oracle: LocalHodgeTable, closed: LocalHodgeTable) -> list[dict]:
    a, b = oracle.as_dict(), closed.as_dict()
    rows = []
    for key in sorted(set(a) | set(b)):
        if a.get(key, 0) != b.get(key, 0):
            angle, l, p = key
            rows.append({
                "angle": format_rational(angle), "l": l, "p": p,
                "oracle": a.get(key, 0), "closed_form": b.get(key, 0),
            })
    return rows


def verify(data: HypergeometricData) -> VerifyReport:
    closed = local_table_zero(data)
    try:
        oracle = oracle_local_table(data)
    except HodgeError as exc:
        return VerifyReport(data, None, closed, None, False, error=f"{type(exc).__name__}: {exc}")
    shift = equal_up_to_shift(oracle, closed)
    passed = oracle == closed and lefschetz_hodge(oracle) == lefschetz_hodge(closed)
    return VerifyReport(data, oracle, closed, shift, passed, [] if passed else _diff(oracle, closed))


def oracle_hodge_vector(data: HypergeometricData) -> HodgeVector:
    return lefschetz_hodge(oracle_local_table(data))
