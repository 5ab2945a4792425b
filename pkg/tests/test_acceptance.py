"""Acceptance criteria, one test per criterion.

Each criterion is a plain function returning ``(ok, detail)`` so the file
can also be run directly: ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import statistics
import sys
import time
from fractions import Fraction
from itertools import permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperhodge.circle import cyclic_order
from hyperhodge.errors import AlphaBetaCollision
from hyperhodge.higgs import (
    full_profile,
    hypergeometric_parameters,
    make_weights,
    parabolic_degree,
    stable_decomposition_ranks,
)
from hyperhodge.hyperdata import phi_dual, psi_dual, validate
from hyperhodge.invariants import (
    LocalHodgeTable,
    equal_up_to_shift,
    hodge_vector,
    interlacing,
    lefschetz_hodge,
    local_table_infinity,
    local_table_zero,
    psi_relabel,
    real_hodge_diamond,
    signature,
)
from hyperhodge.mc_oracle import _table_up_to_shift, constraint_system, oracle_local_table, rank2_base
from hyperhodge.sampling import all_data, random_batch, unit_rationals

SEED = 20250101
SWEEP = random_batch(SEED, 200, 6, 12)


# --- 1 ----------------------------------------------------------------------

def quintic_instance():
    d = validate([0, 0, 0, 0], [Fraction(k, 5) for k in range(1, 5)])
    return hodge_vector(d), signature(d), local_table_zero(d), real_hodge_diamond(d)


def criterion_1():
    hv, sig, nu, diamond = quintic_instance()
    ok = (
        hv.as_dict() == {1: 1, 2: 1, 3: 1, 4: 1}
        and sig == 0
        and nu == LocalHodgeTable.from_mapping({(0, 3, 4): 1})
        and diamond.weight == 3
        and diamond.as_dict() == {(0, 3): 1, (1, 2): 1, (2, 1): 1, (3, 0): 1}
    )
    timings = []
    for _ in range(200):
        start = time.perf_counter()
        quintic_instance()
        timings.append(time.perf_counter() - start)
    median = statistics.median(timings)
    return ok and median < 1e-3, f"median {median * 1e3:.3f} ms"


# --- 2 ----------------------------------------------------------------------

def criterion_2():
    T = LocalHodgeTable.from_mapping
    f = Fraction
    case_1 = validate([f(1, 5), f(2, 5)], [f(3, 5), f(4, 5)])
    case_2 = validate([f(1, 5), f(3, 5)], [f(2, 5), f(4, 5)])
    # nu^1_{alpha_1} = 1 and nu^2_{alpha_2} = 1 in the first case,
    # nu^1_{alpha_1} = nu^1_{alpha_2} = 1 in the second
    expected_1 = T({(f(1, 5), 0, 1): 1, (f(2, 5), 0, 2): 1})
    expected_2 = T({(f(1, 5), 0, 1): 1, (f(3, 5), 0, 1): 1})
    results = {
        "base I": rank2_base(case_1) == expected_1,
        "base II": rank2_base(case_2) == expected_2,
        "oracle I": oracle_local_table(case_1) == expected_1,
        "oracle II": oracle_local_table(case_2) == expected_2,
        "closed I": local_table_zero(case_1) == expected_1,
        "closed II": local_table_zero(case_2) == expected_2,
    }
    bad = [k for k, v in results.items() if not v]
    return not bad, "all six tables match" if not bad else f"mismatch: {bad}"


# --- 3 ----------------------------------------------------------------------

def criterion_3():
    _table_up_to_shift.cache_clear()
    start = time.perf_counter()
    mismatches = [d for d in SWEEP if oracle_local_table(d) != local_table_zero(d)]
    elapsed = time.perf_counter() - start
    detail = f"{len(SWEEP) - len(mismatches)}/{len(SWEEP)} equal in {elapsed:.2f} s"
    if mismatches:
        detail += f"; first mismatch {mismatches[0]}"
    return not mismatches and elapsed < 60, detail


# --- 4 ----------------------------------------------------------------------

def criterion_4():
    bad = [
        d for d in SWEEP
        if not lefschetz_hodge(local_table_zero(d)) == hodge_vector(d) == lefschetz_hodge(local_table_infinity(d))
    ]
    return not bad, f"{len(SWEEP) - len(bad)}/{len(SWEEP)} satisfy both identities"


# --- 5 ----------------------------------------------------------------------

def criterion_5():
    count = bad = 0
    start = time.perf_counter()
    for d in all_data(3, 7):
        count += 1
        hv = hodge_vector(d)
        one_piece = sum(1 for n in hv.as_dict().values() if n) == 1
        if not interlacing(d) == one_piece == (abs(signature(d)) == d.h):
            bad += 1
    elapsed = time.perf_counter() - start
    return bad == 0 and count > 0, f"{count - bad}/{count} data agree ({elapsed:.1f} s)"


# --- 6 ----------------------------------------------------------------------

def criterion_6():
    phi_bad = [d for d in SWEEP if equal_up_to_shift(hodge_vector(phi_dual(d)), hodge_vector(d)) is None]
    eligible = [d for d in SWEEP if d.alpha[0] > 0 and d.beta[0] > 0]
    psi_bad = [d for d in eligible if psi_relabel(local_table_zero(psi_dual(d))) != local_table_infinity(d)]
    ok = not phi_bad and not psi_bad and eligible
    return ok, (
        f"phi {len(SWEEP) - len(phi_bad)}/{len(SWEEP)}, "
        f"psi {len(eligible) - len(psi_bad)}/{len(eligible)}"
    )


# --- 7 ----------------------------------------------------------------------

def six_case_holds(d) -> bool:
    parent = local_table_zero(d)
    for k in range(1, d.h + 1):
        away = parent.restricted(lambda a, ak=d.alpha[k - 1]: a != ak)
        for j in range(1, d.h + 1):
            c = 1 if d.alpha[k - 1] > d.beta[j - 1] else 0
            system = constraint_system(d, k, j, local_table_zero(d.remove(k, j)))
            if system.predicted(c) != away:
                return False
    return True


def criterion_7():
    eligible = [d for d in SWEEP if d.h >= 3 and len(set(d.alpha)) == d.h]
    # the sweep draws repeated alphas often; widen coverage with a second seeded batch
    extra = [d for d in random_batch(SEED + 1, 400, 6, 12) if d.h >= 3 and len(set(d.alpha)) == d.h]
    bad = [d for d in eligible + extra if not six_case_holds(d)]
    ok = not bad and eligible
    return ok, f"sweep {len(eligible)} data, extra {len(extra)} data, {len(bad)} failures"


# --- 8 ----------------------------------------------------------------------

def random_weights(rng: random.Random):
    pool = unit_rationals(12)[1:]
    h = rng.randint(1, 6)
    return make_weights(sorted(rng.sample(pool, h)), sorted(rng.sample(pool, h)))


def criterion_8():
    rng = random.Random(SEED)
    ws = [random_weights(rng) for _ in range(100)]
    degree_bad = sum(parabolic_degree(w, full_profile(w)) != 0 for w in ws)
    rank_bad = resonance_bad = resonant = 0
    for w in ws:
        alpha, beta = hypergeometric_parameters(w)
        try:
            validate(alpha, beta)
            collided = False
        except AlphaBetaCollision:
            collided = True
        resonance_bad += collided != w.resonant
        resonant += w.resonant
        if not w.resonant:
            rank_bad += stable_decomposition_ranks(w).total() != w.h
    ok = degree_bad == rank_bad == resonance_bad == 0
    return ok, f"100 weight systems ({resonant} resonant); failures: degree {degree_bad}, ranks {rank_bad}, resonance {resonance_bad}"


# --- 9 ----------------------------------------------------------------------

def cyclic_by_sorting(a: int, b: int, c: int) -> bool:
    """(a, b, c) is counterclockwise iff it is a rotation of the sorted triple."""
    s = sorted((a, b, c))
    return (a, b, c) in {tuple(s), (s[1], s[2], s[0]), (s[2], s[0], s[1])}


def criterion_9():
    points = unit_rationals(12)
    # both reference checks run on exact integer numerators over lcm(1..12)
    L = math.lcm(*range(1, 13))
    num = {x: int(x * L) for x in points}
    start = time.perf_counter()
    count = bad = 0
    for a, b, c in permutations(points, 3):
        count += 1
        na, nb, nc = num[a], num[b], num[c]
        by_frac = (nb - na) % L < (nc - na) % L
        if not cyclic_order(a, b, c) == by_frac == cyclic_by_sorting(na, nb, nc):
            bad += 1
    elapsed = time.perf_counter() - start
    return bad == 0 and elapsed < 10, f"{count - bad}/{count} triples agree in {elapsed:.2f} s"


CRITERIA = {
    1: ("quintic instance", criterion_1),
    2: ("rank-2 base cases", criterion_2),
    3: ("oracle equals closed form", criterion_3),
    4: ("Lefschetz identity", criterion_4),
    5: ("unitarity equivalence", criterion_5),
    6: ("duality suite", criterion_6),
    7: ("six-case constraints", criterion_7),
    8: ("Higgs identities", criterion_8),
    9: ("circle algebra", criterion_9),
}


def report(n: int) -> tuple[bool, str]:
    name, fn = CRITERIA[n]
    ok, detail = fn()
    line = f"criterion {n} ({name}): {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    return bool(ok), line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    from conftest import ACCEPTANCE_LINES

    ok, line = report(n)
    ACCEPTANCE_LINES[n] = line
    assert ok, line


if __name__ == "__main__":
    results = [report(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
