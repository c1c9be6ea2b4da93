"""Uniform compound asymptotic expansions of C_n^{(alpha,beta)}(rho e^{i theta}).

Three equivalent assemblies share one coefficient table:

* ``thm1``: ``theta^{1-g} [T1(n theta) sum alpha_k/n^k + T2(n theta) sum beta_k/n^k]``
* ``thm2``: ``n^{g-1} z^n [M(alpha, g, -2in theta) sum c_k/n^k + M' sum d_k/n^k]``
* ``cor1`` (alpha = beta): Bessel functions of order ``alpha - 1/2`` and ``alpha - 3/2``.

Values are kept on the unit circle; ``rho**n`` is carried as a base-10
exponent and only applied on request.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core.params import Params, is_nonpositive_integer, validate_params
from .darboux import DEFAULT_K, DELTA, THETA_MIN, CoeffTable, coeff_table
from .errors import GammaPole, ParamOutOfRange, TermCountExceedsTable, ThetaOutOfRange
from .exact import eval_exact, to_mantissa_exponent
from .special.bessel import bessel_j
from .special.gamma import rgamma
from .special.kummer import kummer_m, kummer_m_prime
from .special.tfuncs import X_SERIES_MAX, Route as TRoute, TPair, entire_part, t_pair_kummer

N_MIN = 5


class ExpansionRoute(str, enum.Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    COR1 = "cor1"


@dataclass(frozen=True)
class ExpansionResult:
    unit_value: complex
    m: int
    route: ExpansionRoute
    n: int
    theta: float
    rho: float = 1.0
    t_used: TPair | None = None
    low_confidence: bool = False
    trivial: bool = False

    @property
    def log10_scale(self) -> float:
        return self.n * math.log10(self.rho)

    @property
    def value(self) -> complex:
        return self.unit_value * self.rho**self.n

    def mantissa_exponent(self) -> tuple[complex, int]:
        return to_mantissa_exponent(self.unit_value, self.log10_scale)


def _check_common(p: Params, n: int, theta: float, m: int, delta: float, K: int | None = None):
    p = validate_params(p)
    if int(n) != n or n < 1:
        raise ParamOutOfRange(f"n must be a positive integer, got {n}")
    theta = float(theta)
    if not (0.0 <= theta <= math.pi - delta):
        raise ThetaOutOfRange(f"theta={theta} outside [0, pi - {delta}]")
    if int(m) != m or m < 1:
        raise ParamOutOfRange(f"m must be a positive integer, got {m}")
    if K is not None and m > K:
        raise TermCountExceedsTable(f"m={m} exceeds the table size K={K}")
    return p, int(n), theta, int(m)


def _table_for(p: Params, theta: float, m: int, table: CoeffTable | None, theta_min: float) -> tuple[CoeffTable, int]:
    if table is None:
        table = coeff_table(p, theta, K=m, theta_min=theta_min)
    elif table.theta != theta:
        raise ParamOutOfRange(f"table built at theta={table.theta}, requested {theta}")
    if theta < theta_min:
        return table, 1
    if m > table.K:
        raise TermCountExceedsTable(f"m={m} exceeds the table size K={table.K}")
    return table, m


def _partial(coeffs: np.ndarray, n: int, m: int, shift: int = 0) -> complex:
    k = np.arange(m)
    return complex(np.sum(coeffs[:m] / float(n) ** (k + shift)))


def scaled_t_products(p: Params, n: int, theta: float, *, x_series_max: float = X_SERIES_MAX):
    """``theta^{1-g} T_l(n theta)`` in a form that survives theta -> 0.

    Returns ``(scale, e_val, e_prime, t_pair)`` with ``scale = n^{g-1}`` and,
    for small ``x = n theta``, the entire part ``E(x)`` and ``E'(x)``:

        theta^{1-g} T1 = scale * E
        theta^{1-g} T2 = scale * ((g-1) E / x + E')

    For larger x (Kummer route) ``e_val``/``e_prime`` are ``None`` and only the
    T pair is returned.
    """
    g = p.alpha + p.beta
    x = n * theta
    scale = float(n) ** (g - 1.0)
    if x <= x_series_max:
        e_val, e_prime = entire_part(p, x)
        e_val, e_prime = complex(e_val[0]), complex(e_prime[0])
        tp = None
        if x > 0:
            t1 = x ** (g - 1.0) * e_val
            t2 = (g - 1.0) * x ** (g - 2.0) * e_val + x ** (g - 1.0) * e_prime
            tp = TPair(t1, t2, x, TRoute.SERIES)
        return scale, e_val, e_prime, tp
    return scale, None, None, t_pair_kummer(p, x)


def expand_thm1(
    p: Params,
    n: int,
    theta: float,
    m: int = 1,
    *,
    rho: float = 1.0,
    table: CoeffTable | None = None,
    delta: float = DELTA,
    theta_min: float = THETA_MIN,
    n_min: int = N_MIN,
) -> ExpansionResult:
    p, n, theta, m = _check_common(p, n, theta, m, delta)
    if p.gamma_pole:
        raise GammaPole(f"alpha+beta={p.alpha + p.beta} is a pole of Gamma")
    table, m = _table_for(p, theta, m, table, theta_min)
    g = p.alpha + p.beta
    sum_a = _partial(table.alpha_k, n, m)
    sum_b = _partial(table.beta_k, n, m)
    scale, e_val, e_prime, tp = scaled_t_products(p, n, theta)
    if e_val is not None:
        # beta_k * (g-1) E / (n theta) regrouped as (beta_k/theta) (g-1) E / n
        sum_bt = _partial(table.beta_over_theta, n, m, shift=1)
        value = scale * (e_val * sum_a + (g - 1.0) * e_val * sum_bt + e_prime * sum_b)
    else:
        pref = theta ** (1.0 - g)
        value = pref * (tp.t1 * sum_a + tp.t2 * sum_b)
    return ExpansionResult(
        complex(value), m, ExpansionRoute.THM1, n, theta, float(rho), tp, n < n_min
    )


def expand_thm2(
    p: Params,
    n: int,
    rho: float,
    theta: float,
    m: int = 1,
    *,
    table: CoeffTable | None = None,
    delta: float = DELTA,
    theta_min: float = THETA_MIN,
    n_min: int = N_MIN,
) -> ExpansionResult:
    p, n, theta, m = _check_common(p, n, theta, m, delta)
    if not rho > 0 or not math.isfinite(rho):
        raise ParamOutOfRange(f"rho must be positive and finite, got {rho}")
    if p.gamma_pole:
        if is_nonpositive_integer(p.alpha) and is_nonpositive_integer(p.beta):
            # every c_k, d_k carries 1/Gamma(alpha+beta) or 1/Gamma(alpha+beta-1)
            return ExpansionResult(0j, m, ExpansionRoute.THM2, n, theta, float(rho),
                                   low_confidence=n < n_min, trivial=True)
        raise GammaPole(f"alpha+beta={p.alpha + p.beta} is a pole of Gamma")
    table, m = _table_for(p, theta, m, table, theta_min)
    g = p.alpha + p.beta
    z = -2j * n * theta
    mv = kummer_m(p.alpha, g, z)
    mpv = kummer_m_prime(p.alpha, g, z)
    value = float(n) ** (g - 1.0) * cmath.exp(1j * n * theta) * (
        mv * _partial(table.c_k, n, m) + mpv * _partial(table.d_k, n, m)
    )
    return ExpansionResult(complex(value), m, ExpansionRoute.THM2, n, theta, float(rho),
                           low_confidence=n < n_min)


def expand_cor1(
    alpha: float,
    n: int,
    rho: float,
    theta: float,
    m: int = 1,
    *,
    table: CoeffTable | None = None,
    delta: float = DELTA,
    theta_min: float = THETA_MIN,
    n_min: int = N_MIN,
) -> ExpansionResult:
    p, n, theta, m = _check_common(Params(alpha, alpha), n, theta, m, delta)
    if not rho > 0 or not math.isfinite(rho):
        raise ParamOutOfRange(f"rho must be positive and finite, got {rho}")
    if is_nonpositive_integer(p.alpha):
        raise GammaPole(f"Gamma(alpha) has a pole at alpha={alpha}")
    if theta == 0.0:
        raise ThetaOutOfRange("the Bessel form needs theta > 0")
    table, m = _table_for(p, theta, m, table, theta_min)
    nu = p.alpha - 0.5
    x = n * theta
    pref = math.sqrt(math.pi) * rgamma(p.alpha) * (n / (2.0 * theta)) ** nu
    j1, j2 = bessel_j(nu, x), bessel_j(nu - 1.0, x)
    value = pref * (j1 * _partial(table.alpha_k, n, m) + j2 * _partial(table.beta_k, n, m))
    tp = TPair(
        complex(math.sqrt(math.pi) * rgamma(p.alpha) * (x / 2.0) ** nu * j1),
        complex(math.sqrt(math.pi) * rgamma(p.alpha) * (x / 2.0) ** nu * j2),
        x,
        TRoute.BESSEL,
    )
    return ExpansionResult(complex(value), m, ExpansionRoute.COR1, n, theta, float(rho), tp,
                           n < n_min)


# -- error studies ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ErrorProfile:
    """Errors of the T-function expansion against exact values.

    Matrices are indexed ``[theta_index, n_index]``. ``normalized`` is
    ``|error| / (theta^{1-g} (|T1| + |T2|))`` and ``bound_ratio`` is that times
    ``n^m``; its maximum is the empirical constant of the error bound.
    """

    params: Params
    n_grid: np.ndarray
    theta_grid: np.ndarray
    m: int
    abs_err: np.ndarray
    normalized: np.ndarray
    bound_ratio: np.ndarray
    exact: np.ndarray = field(repr=False)
    approx: np.ndarray = field(repr=False)

    @property
    def empirical_constant(self) -> float:
        return float(np.max(self.bound_ratio))

    def slopes(self) -> np.ndarray:
        """Least-squares log-log slope of ``normalized`` against n, per theta."""
        if len(self.n_grid) < 2:
            return np.full(len(self.theta_grid), np.nan)
        logn = np.log(self.n_grid.astype(float))
        return np.array([np.polyfit(logn, np.log(row), 1)[0] for row in self.normalized])


def _t_envelope(p: Params, n: int, theta: float) -> float:
    """``theta^{1-g} (|T1(n theta)| + |T2(n theta)|)``."""
    g = p.alpha + p.beta
    scale, e_val, e_prime, tp = scaled_t_products(p, n, theta)
    if e_val is not None:
        x = n * theta
        return scale * (abs(e_val) + abs((g - 1.0) * e_val / x + e_prime))
    return theta ** (1.0 - g) * (abs(tp.t1) + abs(tp.t2))


def error_profile(p: Params, n_grid, theta_grid, m: int = 1, *, delta: float = DELTA) -> ErrorProfile:
    p = validate_params(p)
    n_grid = np.asarray(list(n_grid), dtype=int)
    theta_grid = np.asarray(list(theta_grid), dtype=float)
    if n_grid.size == 0 or theta_grid.size == 0:
        raise ParamOutOfRange("error_profile needs non-empty grids")
    if np.any(theta_grid <= 0):
        raise ThetaOutOfRange("error_profile needs theta > 0 (the error bound is singular at 0)")
    shape = (theta_grid.size, n_grid.size)
    abs_err = np.zeros(shape)
    normalized = np.zeros(shape)
    exact = np.zeros(shape, dtype=complex)
    approx = np.zeros(shape, dtype=complex)
    for i, theta in enumerate(theta_grid):
        table = coeff_table(p, theta, K=max(m, DEFAULT_K)) if theta >= THETA_MIN else None
        for j, n in enumerate(n_grid):
            ex = eval_exact(p, int(n), theta)
            res = expand_thm1(p, int(n), theta, m, table=table, delta=delta)
            exact[i, j], approx[i, j] = ex, res.unit_value
            abs_err[i, j] = abs(ex - res.unit_value)
            normalized[i, j] = abs_err[i, j] / _t_envelope(p, int(n), theta)
    bound_ratio = normalized * n_grid.astype(float)[None, :] ** m
    return ErrorProfile(p, n_grid, theta_grid, m, abs_err, normalized, bound_ratio, exact, approx)
