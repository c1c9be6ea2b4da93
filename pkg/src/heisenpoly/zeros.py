"""Zeros of the symmetric (Gegenbauer) case and the positivity scan for T1."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .core.params import Params, validate_params
from .darboux import DELTA
from .errors import ArgumentTooSmall, ParamOutOfRange, PreconditionViolation, ThetaOutOfRange, ZeroCountMismatch
from .exact import eval_exact
from .special.bessel import bessel_zero
from .special.gamma import rgamma
from .special.tfuncs import X_SERIES_MAX, entire_part, t_pair_kummer

GRID_FACTOR = 8
RETRY_FACTOR = 32
XTOL = 1e-14


@dataclass(frozen=True, eq=False)
class ZeroReport:
    n: int
    alpha: float
    zeros: np.ndarray
    estimates_bessel: np.ndarray  # j_{alpha-1/2,k} / (n + alpha)
    estimates_large_k: np.ndarray  # (k + (alpha-1)/2) pi / (n + alpha)

    @property
    def disc_bessel(self) -> np.ndarray:
        return self.zeros - self.estimates_bessel

    @property
    def disc_large_k(self) -> np.ndarray:
        return self.zeros - self.estimates_large_k


def _check_symmetric_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not alpha > -0.5 or alpha == 0.0:
        raise ParamOutOfRange(f"zero search needs alpha > -1/2 and alpha != 0, got {alpha}")
    return alpha


def _bracket_zeros(f, n_points: int) -> list[float]:
    grid = np.pi * np.arange(1, n_points) / n_points
    vals = np.array([f(t) for t in grid])
    roots = [float(t) for t, v in zip(grid, vals) if v == 0.0]
    for i in np.nonzero(vals[:-1] * vals[1:] < 0)[0]:
        roots.append(brentq(f, grid[i], grid[i + 1], xtol=XTOL, rtol=4 * np.finfo(float).eps))
    return sorted(roots)


def find_zeros(alpha: float, n: int, *, grid_factor: int = GRID_FACTOR) -> ZeroReport:
    """All n zeros of ``C_n^{(alpha,alpha)}(e^{i theta})`` on (0, pi), increasing."""
    alpha = _check_symmetric_alpha(alpha)
    if int(n) != n or n < 1:
        raise ParamOutOfRange(f"n must be a positive integer, got {n}")
    n = int(n)
    p = Params(alpha, alpha)

    def f(t: float) -> float:
        return eval_exact(p, n, t).real

    roots = _bracket_zeros(f, grid_factor * n)
    if len(roots) != n:
        roots = _bracket_zeros(f, RETRY_FACTOR * n)
    if len(roots) != n:
        raise ZeroCountMismatch(f"found {len(roots)} zeros of C_{n}^({alpha}), expected {n}")
    zeros = np.array(roots)
    k = np.arange(1, n + 1)
    nu = alpha - 0.5
    est_bessel = np.array([bessel_zero(nu, int(j)) for j in k]) / (n + alpha)
    est_large_k = (k + (alpha - 1.0) / 2.0) * np.pi / (n + alpha)
    return ZeroReport(n, alpha, zeros, est_bessel, est_large_k)


@dataclass(frozen=True)
class ZeroOrderReport:
    alpha: float
    k: int
    n_pair: tuple[int, int]
    errors: tuple[float, float]
    ratio: float | None
    expected: float
    degenerate: bool

    @property
    def within(self) -> bool | None:
        """Ratio inside [expected/2, 2*expected]; ``None`` when degenerate."""
        if self.degenerate or self.ratio is None:
            return None
        return self.expected / 2.0 <= self.ratio <= 2.0 * self.expected


def zero_order_check(alpha: float, k: int, n_pair: tuple[int, int] = (50, 100)) -> ZeroOrderReport:
    """How fast ``theta_{n,k} - j_{alpha-1/2,k}/(n+alpha)`` shrinks from n1 to n2."""
    alpha = _check_symmetric_alpha(alpha)
    n1, n2 = int(n_pair[0]), int(n_pair[1])
    if not 1 <= k <= min(n1, n2):
        raise ParamOutOfRange(f"k={k} must lie in 1..{min(n1, n2)}")
    errs = []
    for n in (n1, n2):
        rep = find_zeros(alpha, n)
        errs.append(abs(rep.disc_bessel[k - 1]))
    expected = (n2 / n1) ** 3
    if alpha == 1.0:
        return ZeroOrderReport(alpha, k, (n1, n2), tuple(errs), None, expected, True)
    ratio = errs[0] / errs[1] if errs[1] > 0 else math.inf
    return ZeroOrderReport(alpha, k, (n1, n2), tuple(errs), ratio, expected, False)


@dataclass(frozen=True)
class CosineApprox:
    value: complex
    envelope: float
    caveat: float  # size of the neglected relative term, 1/(n theta)


def cosine_approx(alpha: float, n: int, theta: float, *, rho: float = 1.0, delta: float = DELTA) -> CosineApprox:
    """Large-``n theta`` form: an envelope times ``cos((n+alpha) theta - alpha pi/2)``."""
    alpha = _check_symmetric_alpha(alpha)
    theta = float(theta)
    if not 0.0 < theta <= math.pi - delta:
        raise ThetaOutOfRange(f"theta={theta} outside (0, pi - {delta}]")
    if n * theta < 10.0:
        raise ArgumentTooSmall(f"n*theta={n * theta:.3g} < 10; the cosine form is not meaningful")
    env = (
        rho**n
        * theta ** (-alpha)
        * rgamma(alpha)
        * (n / 2.0) ** (alpha - 1.0)
        * (math.sin(theta) / theta) ** (-alpha)
    )
    value = env * math.cos((n + alpha) * theta - alpha * math.pi / 2.0)
    return CosineApprox(complex(value), abs(env), 1.0 / (n * theta))


# -- positivity of T1 ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Prop1Report:
    """Scan of T1 on (0, x_max] with ``I(x) = x^{1-(alpha+beta)/2} T1(x)``.

    ``im_flux`` is ``Im[conj(I) I']`` with I' from central differences.
    """

    params: Params
    x: np.ndarray
    abs_t1: np.ndarray
    im_flux: np.ndarray
    beta_gt_alpha: bool

    @property
    def min_abs_t1(self) -> float:
        return float(np.min(self.abs_t1))

    @property
    def all_positive(self) -> bool:
        return bool(np.all(self.abs_t1 > 0) and np.all(self.im_flux > 0))

    @property
    def nondecreasing(self) -> bool:
        tol = 1e-8 * float(np.max(np.abs(self.im_flux)))
        return bool(np.all(np.diff(self.im_flux) >= -tol))


def _t1_values(p: Params, x: np.ndarray) -> np.ndarray:
    g = p.alpha + p.beta
    out = np.empty(x.shape, dtype=complex)
    small = x <= X_SERIES_MAX
    if np.any(small):
        e_val, _ = entire_part(p, x[small])
        out[small] = x[small] ** (g - 1.0) * e_val
    for i in np.nonzero(~small)[0]:
        out[i] = t_pair_kummer(p, float(x[i])).t1
    return out


def prop1_scan(p: Params, x_max: float = 50.0, grid: int = 2000, *, x_min_ratio: float = 1e-6) -> Prop1Report:
    p = validate_params(p)
    if p.alpha == p.beta:
        raise PreconditionViolation("alpha == beta: T1 is a multiple of a Bessel function and has zeros")
    g = p.alpha + p.beta
    if not g > 0:
        raise PreconditionViolation(f"the scan needs alpha + beta > 0, got {g}")
    if not x_max > 0 or grid < 2:
        raise ParamOutOfRange("need x_max > 0 and at least two grid points")
    x = np.geomspace(x_max * x_min_ratio, x_max, grid)
    h = 1e-5 * x
    t1 = _t1_values(p, x)
    t1_plus = _t1_values(p, x + h)
    t1_minus = _t1_values(p, x - h)
    expo = 1.0 - g / 2.0
    i0 = x**expo * t1
    di = ((x + h) ** expo * t1_plus - (x - h) ** expo * t1_minus) / (2.0 * h)
    flux = np.imag(np.conj(i0) * di)
    return Prop1Report(p, x, np.abs(t1), flux, p.beta > p.alpha)
