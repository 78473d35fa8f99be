"""Exception hierarchy."""

from __future__ import annotations


class UnigateError(Exception):
    """Base class for all package errors."""


class GateValidationError(UnigateError):
    """Input matrix fails the gate invariants."""


class NotUnitary(GateValidationError):
    pass


class DetNotOne(GateValidationError):
    pass


class NotReal(GateValidationError):
    """SO input carries non-negligible imaginary entries."""


class BadDimension(GateValidationError):
    pass


class DimensionMismatch(UnigateError):
    pass


class NumericalFailure(UnigateError):
    """An eigen/Schur solver did not deliver the promised structure."""


class EmptyInput(UnigateError):
    pass


class UnsupportedGroup(UnigateError):
    pass


class SetBudgetExceeded(UnigateError):
    pass


class NotClosed(UnigateError):
    pass


class CommutingPair(UnigateError):
    pass


class NotObstructedShape(UnigateError):
    pass


class BadLambda(UnigateError):
    pass
