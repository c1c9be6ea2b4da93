"""Bessel functions of the first kind and their positive zeros."""

from __future__ import annotations

import math

from ..core.dd import DD, two_prod, two_sum
from ..errors import NoConvergence, ParamOutOfRange
from .gamma import rgamma

X_SWITCH = 20.0
MAX_TERMS = 1000


def bessel_j_series(nu: float, x: float) -> float:
    """Power series, summed in double-double (usable well past x = 20)."""
    if x <= 0:
        raise ParamOutOfRange(f"x must be positive, got {x}")
    if nu < 0 and nu == math.floor(nu):
        m = int(-nu)
        return (-1) ** m * bessel_j_series(float(m), x)
    q = DD(*two_prod(x, x)) * 0.25
    term = DD(rgamma(nu + 1.0))
    total = term
    quiet = 0
    for k in range(MAX_TERMS):
        den = DD(*two_sum(nu, float(k + 1))) * float(k + 1)
        term = -(term * q) / den
        total = total + term
        if k > x:
            quiet = quiet + 1 if abs(term.hi) <= 1e-18 * abs(total.hi) else 0
            if quiet >= 10:
                break
    else:
        raise NoConvergence(f"Bessel series did not settle at x={x}")
    return total.to_float() * (0.5 * x) ** nu


def bessel_j_asymptotic(nu: float, x: float) -> float:
    """Hankel's expansion ``sqrt(2/(pi x)) (P cos w - Q sin w)`` cut at its smallest term."""
    if x <= 0:
        raise ParamOutOfRange(f"x must be positive, got {x}")
    mu = 4.0 * nu * nu
    p_sum, q_sum = 1.0, 0.0
    term = 1.0
    last = 1.0
    for k in range(1, 400):
        term = term * (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        mag = abs(term)
        if mag > last or mag == 0.0:
            break
        sgn = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            p_sum += sgn * term
        else:
            q_sum += sgn * term
        last = mag
        if mag < 1e-17:
            break
    w = x - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p_sum * math.cos(w) - q_sum * math.sin(w))


def bessel_j(nu: float, x: float, *, method: str = "auto", x_switch: float = X_SWITCH) -> float:
    """J_nu(x) for real nu and x > 0."""
    if not math.isfinite(nu):
        raise ParamOutOfRange(f"order must be finite, got {nu}")
    if not x > 0:
        raise ParamOutOfRange(f"x must be positive, got {x}")
    if method == "series":
        return bessel_j_series(nu, x)
    if method == "asymptotic":
        return bessel_j_asymptotic(nu, x)
    if method != "auto":
        raise ParamOutOfRange(f"unknown method {method!r}")
    if x <= max(x_switch, 2.0 * nu * nu):
        return bessel_j_series(nu, x)
    return bessel_j_asymptotic(nu, x)


def mcmahon_guess(nu: float, k: int) -> float:
    b = (k + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    e = 8.0 * b
    return (
        b
        - (mu - 1.0) / e
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e**3)
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e**5)
    )


def bessel_zero(nu: float, k: int, *, max_steps: int = 50) -> float:
    """k-th positive zero of J_nu, McMahon start refined by damped Newton."""
    if not nu > -1.0:
        raise ParamOutOfRange(f"order must exceed -1, got {nu}")
    if int(k) != k or k < 1:
        raise ParamOutOfRange(f"zero index must be a positive integer, got {k}")
    x = max(mcmahon_guess(nu, k), 0.5)
    for _ in range(max_steps):
        j = bessel_j(nu, x)
        dj = bessel_j(nu - 1.0, x) - nu / x * j
        step = j / dj
        step = max(-0.5, min(0.5, step))
        x -= step
        if abs(step) <= 1e-12 * x:  # quadratic convergence: next correction ~ step**2
            break
    else:
        raise NoConvergence(f"Newton iteration for j_({nu},{k}) did not converge")
    if abs(bessel_j(nu, x)) > 1e-10:
        raise NoConvergence(f"zero j_({nu},{k}) has residual {bessel_j(nu, x):.2e}")
    return x
