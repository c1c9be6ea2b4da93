"""Gamma-function helpers.

Backed by the C library's ``tgamma``/``lgamma`` through :mod:`math`; the only
additions are pole handling, the sign of Gamma, and the reciprocal gamma that
is entire (zero at the poles).
"""

from __future__ import annotations

import math

from ..core.params import is_nonpositive_integer
from ..errors import PoleAtNonpositiveInteger


def gamma_fn(x: float) -> float:
    if is_nonpositive_integer(x):
        raise PoleAtNonpositiveInteger(f"Gamma has a pole at {x}")
    return math.gamma(x)


def gamma_sign(x: float) -> float:
    if x > 0:
        return 1.0
    if is_nonpositive_integer(x):
        raise PoleAtNonpositiveInteger(f"Gamma has a pole at {x}")
    return -1.0 if math.floor(-x) % 2 == 0 else 1.0


def log_gamma_signed(x: float) -> tuple[float, float]:
    """``(log|Gamma(x)|, sign Gamma(x))``."""
    if is_nonpositive_integer(x):
        raise PoleAtNonpositiveInteger(f"Gamma has a pole at {x}")
    return math.lgamma(x), gamma_sign(x)


def rgamma(x: float) -> float:
    """``1/Gamma(x)``, equal to zero at the poles of Gamma."""
    if is_nonpositive_integer(x):
        return 0.0
    try:
        g = math.gamma(x)
    except OverflowError:
        g = math.inf
    if g != 0.0 and math.isfinite(g):
        return 1.0 / g
    return gamma_sign(x) * math.exp(-math.lgamma(x))
