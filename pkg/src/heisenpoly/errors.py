"""Exception hierarchy.

Two families: :class:`DomainError` for bad inputs (the CLI maps these to exit
code 2) and :class:`NumericalError` for failures of a numerical procedure on
valid inputs (exit code 3).
"""

from __future__ import annotations


class HeisenpolyError(Exception):
    """Base class for all package errors."""


class DomainError(HeisenpolyError, ValueError):
    pass


class NumericalError(HeisenpolyError, ArithmeticError):
    pass


# -- domain ----------------------------------------------------------------

class NonFinite(DomainError):
    pass


class ParamOutOfRange(DomainError):
    pass


class PreconditionViolation(DomainError):
    pass


class ThetaOutOfRange(DomainError):
    pass


class DegreeTooLarge(DomainError):
    pass


class TermCountExceedsTable(DomainError):
    pass


class ArgumentTooSmall(DomainError):
    pass


class CenterMismatch(DomainError):
    pass


class PoleError(DomainError):
    """Evaluation requested at a pole of a gamma factor."""


class GammaPole(PoleError):
    pass


class BPole(PoleError):
    pass


class PoleAtNonpositiveInteger(PoleError):
    pass


# -- numerical -------------------------------------------------------------

class DivisionByNearZero(NumericalError):
    pass


class CancellationFailure(NumericalError):
    pass


class OrderExhausted(NumericalError):
    pass


class NonConvergence(NumericalError):
    pass


class NoConvergence(NonConvergence):
    pass


class SeriesDivergenceGuard(NumericalError):
    pass


class ZeroCountMismatch(NumericalError):
    pass
