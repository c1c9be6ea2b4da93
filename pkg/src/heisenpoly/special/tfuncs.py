"""The special functions T1 and T2 (T2 = T1') by three independent routes.

* ``series``: the double power series in x, with coefficients
  ``S_k = [w^k] (1+w)^{-alpha} (1-w)^{-beta}``;
* ``kummer``: ``x^{g-1} e^{ix} M(alpha, g, -2ix) / Gamma(g)``, ``g = alpha+beta``;
* ``bessel``: the alpha = beta reduction to ``J_{alpha-1/2}`` and ``J_{alpha-3/2}``.

Throughout, ``E(x) = x^{1-g} T1(x)`` denotes the entire part of T1.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..core.dd import DD, two_sum
from ..core.params import Params, is_nonpositive_integer
from ..errors import GammaPole, ParamOutOfRange, SeriesDivergenceGuard
from .bessel import bessel_j
from .gamma import rgamma
from .kummer import kummer_m, kummer_m_prime

X_SERIES_MAX = 30.0
SERIES_MAX_TERMS = 500


class Route(str, enum.Enum):
    SERIES = "series"
    KUMMER = "kummer"
    BESSEL = "bessel"


@dataclass(frozen=True)
class TPair:
    t1: complex
    t2: complex
    x: float
    route: Route


@lru_cache(maxsize=64)
def _s_coefficients(alpha: float, beta: float, kmax: int) -> tuple[np.ndarray, np.ndarray]:
    """``S_0..S_kmax`` in double-double via
    ``(k+1) S_{k+1} = (beta-alpha) S_k + (alpha+beta+k-1) S_{k-1}``,
    which follows from ``(1-w^2) F' = ((beta-alpha) + (alpha+beta) w) F``."""
    hi = np.zeros(kmax + 1)
    lo = np.zeros(kmax + 1)
    diff = DD(*two_sum(beta, -alpha))
    s_prev, s_cur = DD(0.0), DD(1.0)
    hi[0] = 1.0
    for k in range(kmax):
        coef = DD(*two_sum(alpha + beta, float(k - 1))) if k else DD(0.0)
        s_next = (diff * s_cur + coef * s_prev) / float(k + 1)
        s_prev, s_cur = s_cur, s_next
        hi[k + 1], lo[k + 1] = s_cur.hi, s_cur.lo
    return hi, lo


def series_coefficients(p: Params, kmax: int) -> np.ndarray:
    hi, lo = _s_coefficients(float(p.alpha), float(p.beta), int(kmax))
    return hi + lo


def entire_part(p: Params, x) -> tuple[np.ndarray, np.ndarray]:
    """``E(x) = x^{1-g} T1(x)`` and ``E'(x)`` for x >= 0 (scalar or array).

    Terms ``i^k S_k x^k / Gamma(g+k)`` are accumulated in double-double so the
    ``~e^x`` cancellation is absorbed. At a pole of ``Gamma(g+k)`` the term is
    zero, which is the entire continuation in g.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x < 0):
        raise ParamOutOfRange("entire_part needs x >= 0")
    g = p.alpha + p.beta
    xmax = float(np.max(x)) if x.size else 0.0
    kmax = SERIES_MAX_TERMS
    s_hi, s_lo = _s_coefficients(float(p.alpha), float(p.beta), kmax)
    zero = np.zeros_like(x)
    # real/imag parts of E and of x*E'
    acc = [DD(zero.copy(), zero.copy()) for _ in range(4)]
    k0 = int(1 - g) if is_nonpositive_integer(g) else 0
    # w_k = x^k / Gamma(g+k), running ratio from k0 on
    w = DD(x**k0 * rgamma(g + k0), zero.copy())
    quiet = 0
    for k in range(k0, kmax + 1):
        if k > k0:
            w = (w * x) / DD(*two_sum(g, float(k - 1)))
        v = w * DD(s_hi[k], s_lo[k])
        slot = k % 4
        sign = 1.0 if slot < 2 else -1.0
        re_or_im = slot % 2  # i^k: 1, i, -1, -i
        acc[re_or_im] = acc[re_or_im] + v * sign
        acc[2 + re_or_im] = acc[2 + re_or_im] + v * (sign * k)
        if k > xmax + 2:
            mag = np.abs(v.hi) * (k + 1)
            ref = np.abs(acc[0].hi) + np.abs(acc[1].hi) + 1e-300
            quiet = quiet + 1 if np.all(mag <= 1e-18 * ref) else 0
            if quiet >= 10:
                break
    else:
        raise SeriesDivergenceGuard(f"T-series terms still significant at k={kmax} (x up to {xmax})")
    e_val = acc[0].to_float() + 1j * acc[1].to_float()
    xe_prime = acc[2].to_float() + 1j * acc[3].to_float()
    with np.errstate(divide="ignore", invalid="ignore"):
        e_prime = np.where(x > 0, xe_prime / np.where(x > 0, x, 1.0), 0.0)
    # at x = 0 the derivative is the k=1 coefficient
    if np.any(x == 0):
        s1 = s_hi[1] + s_lo[1]
        e_prime = np.where(x == 0, 1j * s1 * rgamma(g + 1.0), e_prime)
    return e_val, e_prime


def _check_x(x: float) -> float:
    x = float(x)
    if not (x > 0 and math.isfinite(x)):
        raise ParamOutOfRange(f"x must be positive and finite, got {x}")
    return x


def t_pair_series(p: Params, x: float) -> TPair:
    x = _check_x(x)
    g = p.alpha + p.beta
    e_val, e_prime = entire_part(p, x)
    e_val, e_prime = complex(e_val[0]), complex(e_prime[0])
    t1 = x ** (g - 1.0) * e_val
    t2 = (g - 1.0) * x ** (g - 2.0) * e_val + x ** (g - 1.0) * e_prime
    return TPair(t1, t2, x, Route.SERIES)


def t_pair_kummer(p: Params, x: float) -> TPair:
    x = _check_x(x)
    if p.gamma_pole:
        raise GammaPole(f"alpha+beta={p.alpha + p.beta} is a pole of Gamma")
    g = p.alpha + p.beta
    z = -2j * x
    m = kummer_m(p.alpha, g, z)
    mp = kummer_m_prime(p.alpha, g, z)
    common = cmath.exp(1j * x) * rgamma(g)
    t1 = x ** (g - 1.0) * common * m
    t2 = (g - 1.0 + 1j * x) * x ** (g - 2.0) * common * m - 2j * x ** (g - 1.0) * common * mp
    return TPair(t1, t2, x, Route.KUMMER)


def t_pair_bessel(alpha: float, x: float) -> TPair:
    x = _check_x(x)
    if is_nonpositive_integer(alpha):
        raise GammaPole(f"Gamma(alpha) has a pole at alpha={alpha}")
    nu = alpha - 0.5
    pref = math.sqrt(math.pi) * rgamma(alpha) * (0.5 * x) ** nu
    t1 = pref * bessel_j(nu, x)
    t2 = pref * bessel_j(nu - 1.0, x)
    return TPair(complex(t1), complex(t2), x, Route.BESSEL)


def t_pair(p: Params, x: float, *, x_series_max: float = X_SERIES_MAX) -> TPair:
    """Best available route: series up to ``x_series_max``, Kummer beyond."""
    if _check_x(x) <= x_series_max:
        return t_pair_series(p, x)
    return t_pair_kummer(p, x)
