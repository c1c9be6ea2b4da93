"""Parameter pair (alpha, beta) and evaluation points."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import NonFinite, ParamOutOfRange


def is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


@dataclass(frozen=True)
class Params:
    """The exponents of the two singular factors of the generating function.

    ``a`` and ``b`` are the coefficients of the Laplace-type ODE for the
    first T-function; they are derived on access so they can never go stale.
    """

    alpha: float
    beta: float

    @property
    def a(self) -> float:
        return 2.0 - self.alpha - self.beta

    @property
    def b(self) -> float:
        return self.beta - self.alpha

    @property
    def gamma_sum(self) -> float:
        return self.alpha + self.beta

    @property
    def gamma_pole(self) -> bool:
        """True when Gamma(alpha + beta) has a pole."""
        return is_nonpositive_integer(self.alpha + self.beta)

    @property
    def symmetric(self) -> bool:
        return self.alpha == self.beta

    def swapped(self) -> "Params":
        return Params(self.beta, self.alpha)


def validate_params(p: Params) -> Params:
    alpha, beta = float(p.alpha), float(p.beta)
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise NonFinite(f"alpha and beta must be finite, got ({p.alpha}, {p.beta})")
    return Params(alpha, beta)


@dataclass(frozen=True)
class EvalPoint:
    rho: float
    theta: float
    n: int

    def __post_init__(self):
        if not math.isfinite(self.rho) or self.rho <= 0:
            raise ParamOutOfRange(f"rho must be positive, got {self.rho}")
        if not (0.0 <= self.theta <= math.pi):
            raise ParamOutOfRange(f"theta must lie in [0, pi], got {self.theta}")
        if int(self.n) != self.n or self.n < 0:
            raise ParamOutOfRange(f"n must be a nonnegative integer, got {self.n}")
