"""Hodge invariants of regular hypergeometric connections on P^1 - {0, 1, infinity}."""

from .circle import UnitRational, circular_gap, cyclic_order, format_rational, frac, parse_rational
from .hyperdata import (
    HypergeometricData,
    MonodromyClass,
    local_monodromy,
    multiplicity,
    phi_dual,
    psi_dual,
    self_duality_check,
    twist,
    validate,
)
from .invariants import (
    HodgeVector,
    LocalHodgeTable,
    RealHodgeDiamond,
    equal_up_to_shift,
    hodge_vector,
    interlacing,
    lefschetz_hodge,
    local_table_infinity,
    local_table_zero,
    mu_from_nu,
    normalize_min_p_to_zero,
    real_hodge_diamond,
    rho,
    signature,
)
from .mc_oracle import oracle_local_table, verify

__all__ = [
    "HodgeVector",
    "HypergeometricData",
    "LocalHodgeTable",
    "MonodromyClass",
    "RealHodgeDiamond",
    "UnitRational",
    "circular_gap",
    "cyclic_order",
    "equal_up_to_shift",
    "format_rational",
    "frac",
    "hodge_vector",
    "interlacing",
    "lefschetz_hodge",
    "local_monodromy",
    "local_table_infinity",
    "local_table_zero",
    "mu_from_nu",
    "multiplicity",
    "normalize_min_p_to_zero",
    "oracle_local_table",
    "parse_rational",
    "phi_dual",
    "psi_dual",
    "real_hodge_diamond",
    "rho",
    "self_duality_check",
    "signature",
    "twist",
    "validate",
    "verify",
]
