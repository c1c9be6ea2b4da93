"""Exact evaluation of the Heisenberg polynomials on the unit circle.

All routines return the value at ``rho = 1``; homogeneity supplies the rest,
``C_n(rho e^{i theta}) = rho**n C_n(e^{i theta})``, see :class:`PolyValue`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core.params import Params, validate_params
from .errors import DegreeTooLarge, ParamOutOfRange

MAX_DEGREE = 10**6


def _check_degree(n: int, max_degree: int) -> int:
    if int(n) != n or n < 0:
        raise ParamOutOfRange(f"degree must be a nonnegative integer, got {n}")
    if n > max_degree:
        raise DegreeTooLarge(f"n={n} exceeds the configured maximum {max_degree}")
    return int(n)


def reduce_theta(p: Params, theta: float) -> tuple[Params, float]:
    """Map theta into [0, pi], swapping (alpha, beta) when the angle is negated."""
    t = math.remainder(float(theta), 2.0 * math.pi)  # in [-pi, pi]
    if t < 0.0:
        return p.swapped(), -t
    return p, t


def poch_over_factorial(g: float, kmax: int) -> np.ndarray:
    """``(g)_k / k!`` for ``k = 0..kmax`` by the running ratio ``(g+k)/(k+1)``."""
    k = np.arange(kmax, dtype=float)
    out = np.empty(kmax + 1)
    out[0] = 1.0
    if kmax:
        out[1:] = np.cumprod((g + k) / (k + 1.0))
    return out


def eval_exact(p: Params, n: int, theta: float, *, max_degree: int = MAX_DEGREE) -> complex:
    """``C_n^{(alpha,beta)}(e^{i theta})`` by direct, exactly rounded summation.

    The two Pochhammer ratio sequences are built by running products (no
    factorials, no overflow); each term is a product of one entry from each,
    and the sum is accumulated with ``math.fsum`` per component.
    """
    p = validate_params(p)
    n = _check_degree(n, max_degree)
    p, theta = reduce_theta(p, theta)
    if n == 0:
        return 1.0 + 0.0j
    a = poch_over_factorial(p.alpha, n)
    b = poch_over_factorial(p.beta, n)
    terms = a * b[::-1]
    phase = (n - 2 * np.arange(n + 1)) * theta
    if p.alpha == p.beta:
        # term_j = term_{n-j}: the imaginary parts cancel identically
        return complex(math.fsum(terms * np.cos(phase)), 0.0)
    return complex(math.fsum(terms * np.cos(phase)), math.fsum(terms * np.sin(phase)))


def eval_via_generating_recurrence(
    p: Params, n_max: int, theta: float, *, max_degree: int = MAX_DEGREE
) -> np.ndarray:
    """``C_0 .. C_{n_max}`` as the Cauchy product of the two binomial series
    ``(1 - w e^{-i theta})^{-alpha}`` and ``(1 - w e^{i theta})^{-beta}``."""
    p = validate_params(p)
    n_max = _check_degree(n_max, max_degree)
    p, theta = reduce_theta(p, theta)
    j = np.arange(n_max + 1)
    left = poch_over_factorial(p.alpha, n_max) * np.exp(-1j * j * theta)
    right = poch_over_factorial(p.beta, n_max) * np.exp(1j * j * theta)
    return np.convolve(left, right)[: n_max + 1]


def gegenbauer_oracle(alpha: float, n: int, x: float) -> float:
    """Gegenbauer ``C_n^{(alpha)}(x)`` by its three-term recurrence."""
    if not alpha > -0.5 or alpha == 0.0:
        raise ParamOutOfRange(f"Gegenbauer parameter must satisfy alpha > -1/2, alpha != 0; got {alpha}")
    if not -1.0 <= x <= 1.0:
        raise ParamOutOfRange(f"x must lie in [-1, 1], got {x}")
    n = _check_degree(n, MAX_DEGREE)
    prev, cur = 1.0, 2.0 * alpha * x
    if n == 0:
        return prev
    for k in range(2, n + 1):
        prev, cur = cur, (2.0 * x * (k + alpha - 1.0) * cur - (k + 2.0 * alpha - 2.0) * prev) / k
    return cur


@dataclass(frozen=True)
class PolyValue:
    """``C_n`` at ``rho e^{i theta}``, stored as the unit-circle value and rho.

    ``rho**n`` is only applied on request, so large degrees never overflow
    until a plain complex is demanded.
    """

    unit_value: complex
    n: int
    rho: float
    theta: float
    params: Params

    @property
    def log10_scale(self) -> float:
        return self.n * math.log10(self.rho)

    @property
    def value(self) -> complex:
        return self.unit_value * self.rho**self.n

    def mantissa_exponent(self) -> tuple[complex, int]:
        return to_mantissa_exponent(self.unit_value, self.log10_scale)


def to_mantissa_exponent(unit_value: complex, log10_scale: float) -> tuple[complex, int]:
    """Split ``unit_value * 10**log10_scale`` into ``(mantissa, exponent10)``."""
    mag = abs(unit_value)
    if mag == 0.0:
        return 0j, 0
    total = math.log10(mag) + log10_scale
    e = math.floor(total)
    return unit_value / mag * 10.0 ** (total - e), e


def poly_value(p: Params, n: int, theta: float, rho: float = 1.0) -> PolyValue:
    if not rho > 0 or not math.isfinite(rho):
        raise ParamOutOfRange(f"rho must be positive and finite, got {rho}")
    return PolyValue(eval_exact(p, n, theta), int(n), float(rho), float(theta), validate_params(p))
