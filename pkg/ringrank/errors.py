# -*- coding: utf-8 -*-
"""A module containing the exceptions raised by ringrank.

Every error derives from RingRankError. Errors caused by the caller's input
derive from InputError, and errors raised while computing on a valid input
derive from ComputationError; the command line maps the two families to
distinct exit codes.

Classes:
    RingRankError: The base class of all ringrank errors.
    InputError: An invalid object or parameter was supplied.
    ComputationError: A computation on a valid input failed or was refused.
"""

from __future__ import unicode_literals


__all__ = (
    "RingRankError",
    "InputError",
    "ComputationError",
    "SchemaError",
    "DimensionMismatch",
    "RankDeficient",
    "Singular",
    "NotContained",
    "InvalidTable",
    "NotMonic",
    "MissingIdentity",
    "NotClosed",
    "ZeroIdeal",
    "OwnerMismatch",
    "NotPrime",
    "ZeroRing",
    "UnitOrZeroX",
    "BadDegree",
    "SplitPrime",
    "DegreeOne",
    "RamifiedPrime",
    "TruncationTooShort",
    "NoStabilization",
    "SizeCapExceeded",
    "NonIntegralLog",
    "InvariantViolation",
    "NotInSpan",
)


class RingRankError(Exception):
    """The base class of every error raised by ringrank."""

    exit_code = 1


class InputError(RingRankError, ValueError):
    """The caller supplied an object or a parameter that is not valid."""

    exit_code = 2


class ComputationError(RingRankError, ArithmeticError):
    """A computation on a valid input failed or was refused."""

    exit_code = 3


class SchemaError(InputError):
    """A job document or configuration value does not match its schema."""


class DimensionMismatch(InputError):
    """Two operands do not have the same dimension."""


class RankDeficient(InputError):
    """A full-rank span was required but the generators span less."""


class Singular(InputError):
    """A nonsingular matrix was required."""


class NotContained(InputError):
    """An inner lattice is not contained in the outer lattice."""


class InvalidTable(InputError):
    """A multiplication table violates a ring axiom."""


class NotMonic(InputError):
    """A polynomial that must be monic is not."""


class MissingIdentity(InputError):
    """A suborder lattice does not contain the identity."""


class NotClosed(InputError):
    """A suborder lattice or ideal lattice is not closed under products."""


class ZeroIdeal(InputError):
    """A nonzero ideal was required."""


class OwnerMismatch(InputError):
    """Two ideals belong to different rings."""


class NotPrime(InputError):
    """An integer that must be prime is not."""


class ZeroRing(InputError):
    """A nonzero ring was required."""


class UnitOrZeroX(InputError):
    """The scaling element of an A + xS order is zero or a unit."""


class BadDegree(InputError):
    """A degree parameter is below the allowed minimum."""


class SplitPrime(InputError):
    """A prime has more than one prime ideal above it."""


class DegreeOne(InputError):
    """The prime above p has residue degree one."""


class RamifiedPrime(InputError):
    """The unique prime above p does not equal pS."""


class TruncationTooShort(InputError):
    """A truncation degree is too small to represent the requested degrees."""


class NoStabilization(ComputationError):
    """A Hilbert sequence did not stabilize within the iteration cap."""


class SizeCapExceeded(ComputationError):
    """A brute-force operation was refused because the ring is too large."""


class NonIntegralLog(ComputationError):
    """An index that must be a power of a residue field size is not."""


class InvariantViolation(ComputationError):
    """A computed object violates an invariant that must hold."""


class NotInSpan(ComputationError):
    """A vector is not in the integer span of the given columns."""
