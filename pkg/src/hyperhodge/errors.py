"""Exception hierarchy.

Every error carries its class name as the stable identifier surfaced by the
CLI, so callers can match on ``type(err).__name__``.
"""

from __future__ import annotations


class HodgeError(ValueError):
    """Base class for all domain errors raised by the package."""


# circle arithmetic
class DistinctnessViolation(HodgeError):
    pass


class EmptySet(HodgeError):
    pass


class PivotCollision(HodgeError):
    pass


class ParseError(HodgeError):
    pass


# hypergeometric data
class LengthMismatch(HodgeError):
    pass


class OutOfRange(HodgeError):
    pass


class Empty(HodgeError):
    pass


class AlphaBetaCollision(HodgeError):
    def __init__(self, i: int, j: int):
        super().__init__(f"alpha[{i}] == beta[{j}]")
        self.i = i
        self.j = j


class ZeroAngle(HodgeError):
    pass


# invariants
class IndexOutOfRange(HodgeError):
    pass


class NotSelfDual(HodgeError):
    pass


# middle convolution oracle
class MassViolation(HodgeError):
    pass


class NotRankTwo(HodgeError):
    pass


class EqualAlphas(HodgeError):
    pass


class Inconsistent(HodgeError):
    pass


class Underdetermined(HodgeError):
    pass


# higgs
class WeightsNotStrict(HodgeError):
    pass


class WeightOutOfRange(HodgeError):
    pass


class JumpIndexOutOfRange(HodgeError):
    pass


class FullRankProfile(HodgeError):
    pass


class Resonant(HodgeError):
    pass


class VerificationFailure(HodgeError):
    pass


class InvalidProfile(HodgeError):
    pass
