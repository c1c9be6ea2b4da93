"""Coefficients alpha_k(theta), beta_k(theta) of the uniform expansion.

Every function in the recursion is represented by two Taylor jets, one at
``s = +i`` and one at ``s = -i``: the decomposition

    h_k(s) = alpha_k + s beta_k + (s^2 + 1) g_k(s)

only needs the values of ``h_k`` at those points and an exact division by
``(s - i)(s + i)``, and the next step

    h_{k+1} = (s^2+1)/theta * [(alpha-1)/(s+i) + (beta-1)/(s-i) - d/ds] g_k

is polynomial in ``s`` once the fractions are cleared. Each round costs two
orders of the jets (one monomial division, one derivative).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core.jet import DEFAULT_ORDER, Jet, jet_pow
from .core.params import Params, validate_params
from .errors import OrderExhausted, TermCountExceedsTable, ThetaOutOfRange
from .special.gamma import rgamma

THETA_MIN = 1e-2
DELTA = 0.1
ORDER_GUARD = 8
DEFAULT_K = 4

CENTERS = (1j, -1j)


@dataclass(frozen=True)
class HJetPair:
    at_plus_i: Jet
    at_minus_i: Jet
    k: int
    theta: float

    @property
    def order(self) -> int:
        return self.at_plus_i.order

    def jets(self) -> tuple[Jet, Jet]:
        return self.at_plus_i, self.at_minus_i


def leading_coefficients(p: Params, theta: float) -> tuple[complex, complex]:
    """Closed forms of ``alpha_0(theta)`` and ``beta_0(theta)``."""
    ratio = math.sin(theta) / theta if theta != 0.0 else 1.0
    up = cmath.exp(1j * theta * p.alpha) * ratio ** (-p.alpha)
    down = cmath.exp(-1j * theta * p.beta) * ratio ** (-p.beta)
    return (up + down) / 2.0, (up - down) / 2j


def leading_beta_over_theta(p: Params, theta: float) -> complex:
    """``beta_0(theta)/theta`` including its limit ``(alpha+beta)/2`` at theta = 0."""
    if theta == 0.0:
        return complex((p.alpha + p.beta) / 2.0)
    return leading_coefficients(p, theta)[1] / theta


def _check_theta(theta: float, theta_min: float, delta: float) -> float:
    theta = float(theta)
    if not (theta_min <= theta <= math.pi - delta):
        raise ThetaOutOfRange(
            f"theta={theta} outside the recursion range [{theta_min}, pi - {delta}]"
        )
    return theta


def _phi_jet(scale: complex, theta: float, center: complex, order: int) -> Jet:
    """Jet in ``u = s - center`` of ``scale * (1 - e^{-theta u}) / (theta u)``."""
    k = np.arange(order + 1)
    coeffs = scale * (-theta) ** k / np.array([math.factorial(j + 1) for j in k], dtype=float)
    return Jet(center, coeffs)


def _exp_jet(theta: float, center: complex, order: int) -> Jet:
    """Jet of ``e^{-theta s}`` about ``center``."""
    k = np.arange(order + 1)
    coeffs = cmath.exp(-theta * center) * (-theta) ** k / np.array(
        [math.factorial(j) for j in k], dtype=float
    )
    return Jet(center, coeffs)


def build_h0(
    p: Params,
    theta: float,
    *,
    order: int = DEFAULT_ORDER,
    theta_min: float = THETA_MIN,
    delta: float = DELTA,
) -> HJetPair:
    """Jets of
    ``h_0 = e^{i theta (alpha-beta)} B_+^{-alpha} B_-^{-beta}`` at ``s = +-i`` with
    ``B_+ = (e^{i theta} - e^{-theta s}) / ((s+i) theta)`` and
    ``B_- = (e^{-i theta} - e^{-theta s}) / ((s-i) theta)``.

    The bracket that is 0/0 at a center is replaced by its removable limit
    ``e^{-+i theta} (1 - e^{-w})/w`` with ``w = theta (s -+ i)``.
    """
    p = validate_params(p)
    theta = _check_theta(theta, theta_min, delta)
    pref = cmath.exp(1j * theta * (p.alpha - p.beta))
    jets = []
    for center in CENTERS:
        ex = _exp_jet(theta, center, order)
        s = Jet.identity(center, order)
        if center == 1j:
            b_plus = (cmath.exp(1j * theta) - ex) / ((s + 1j) * theta)
            b_minus = _phi_jet(cmath.exp(-1j * theta), theta, center, order)
        else:
            b_plus = _phi_jet(cmath.exp(1j * theta), theta, center, order)
            b_minus = (cmath.exp(-1j * theta) - ex) / ((s - 1j) * theta)
        jets.append(jet_pow(b_plus, -p.alpha) * jet_pow(b_minus, -p.beta) * pref)
    return HJetPair(jets[0], jets[1], 0, theta)


def decompose_h(h: HJetPair) -> tuple[complex, complex, HJetPair]:
    """Split off the affine part ``alpha_k + s beta_k`` and divide the rest by ``s^2 + 1``."""
    hp, hm = h.at_plus_i.eval_at_center(), h.at_minus_i.eval_at_center()
    alpha_k = (hp + hm) / 2.0
    beta_k = (hp - hm) / 2j
    g = []
    for jet in h.jets():
        c = jet.center
        s = Jet.identity(c, jet.order)
        rest = jet - (s * beta_k + alpha_k)
        # (s^2 + 1) = (s - c)(s + c) for c = +-i
        g.append(rest.divide_by_monomial(scale=jet.scale()) / (Jet.identity(c, jet.order - 1) + c))
    return alpha_k, beta_k, HJetPair(g[0], g[1], h.k, h.theta)


def recurse_h(g: HJetPair, p: Params, theta: float) -> HJetPair:
    """``h_{k+1}`` from ``g_k``; the output order is one less than the input."""
    if g.order < 1:
        raise OrderExhausted(f"g_{g.k} jets have order {g.order}; cannot differentiate")
    out = []
    for jet in g.jets():
        c = jet.center
        m = jet.order - 1
        s = Jet.identity(c, m)
        gk = jet.truncate(m)
        dg = jet.derivative()
        s_minus_i, s_plus_i = s - 1j, s + 1j
        h = ((p.alpha - 1.0) * s_minus_i * gk + (p.beta - 1.0) * s_plus_i * gk
             - s_minus_i * s_plus_i * dg) / theta
        out.append(h)
    return HJetPair(out[0], out[1], g.k + 1, theta)


@dataclass(frozen=True, eq=False)
class CoeffTable:
    """Per-theta coefficients for the two compound expansions.

    ``alpha_k``/``beta_k`` feed the T-function form, ``c_k``/``d_k`` the Kummer
    form. ``beta_over_theta`` is ``beta_k/theta`` with its finite limit at
    theta = 0. ``jet_alpha0``/``jet_beta0`` keep the recursion's own values of
    the leading pair (the table itself carries the closed forms).
    """

    params: Params
    theta: float
    alpha_k: np.ndarray
    beta_k: np.ndarray
    beta_over_theta: np.ndarray
    c_k: np.ndarray
    d_k: np.ndarray
    jet_alpha0: complex | None = None
    jet_beta0: complex | None = None

    @property
    def K(self) -> int:
        return len(self.alpha_k)


def _kummer_form(p: Params, alpha_k, beta_k, beta_over_theta):
    """``c_k = (alpha_k + i beta_k)/Gamma(g) + (beta_{k-1}/theta)/Gamma(g-1)``, ``d_k = -2i beta_k/Gamma(g)``.

    The shifted index on the second term of ``c_k`` comes from the
    ``x^{g-2}`` piece of T2, which is one power of n down.
    """
    g = p.alpha + p.beta
    r0, r1 = rgamma(g), rgamma(g - 1.0)
    shifted = np.concatenate([[0.0], beta_over_theta[:-1]])
    c = (alpha_k + 1j * beta_k) * r0 + shifted * r1
    d = -2j * beta_k * r0
    return c, d


def coeff_table(
    p: Params,
    theta: float,
    K: int = DEFAULT_K,
    *,
    order: int = DEFAULT_ORDER,
    theta_min: float = THETA_MIN,
    delta: float = DELTA,
    guard: int = ORDER_GUARD,
) -> CoeffTable:
    """Coefficients k < K at one theta.

    Below ``theta_min`` the recursion is not run (its 1/theta factors are
    ill-conditioned there) and only the closed-form k = 0 pair is returned.
    """
    p = validate_params(p)
    theta = float(theta)
    if K < 1:
        raise TermCountExceedsTable(f"K must be at least 1, got {K}")
    if theta > math.pi - delta or theta < 0.0:
        raise ThetaOutOfRange(f"theta={theta} outside [0, pi - {delta}]")
    a0, b0 = leading_coefficients(p, theta)
    bt0 = leading_beta_over_theta(p, theta)
    if theta < theta_min:
        alpha_k = np.array([a0])
        beta_k = np.array([b0])
        bot = np.array([bt0])
        c, d = _kummer_form(p, alpha_k, beta_k, bot)
        return CoeffTable(p, theta, alpha_k, beta_k, bot, c, d)
    if 2 * (K - 1) > order - guard:
        raise TermCountExceedsTable(
            f"K={K} needs jet order >= {2 * (K - 1) + guard}, have {order}"
        )
    alpha_k = np.zeros(K, dtype=complex)
    beta_k = np.zeros(K, dtype=complex)
    h = build_h0(p, theta, order=order, theta_min=theta_min, delta=delta)
    for k in range(K):
        ak, bk, g = decompose_h(h)
        alpha_k[k], beta_k[k] = ak, bk
        if k + 1 < K:
            h = recurse_h(g, p, theta)
    jet_a0, jet_b0 = complex(alpha_k[0]), complex(beta_k[0])
    alpha_k[0], beta_k[0] = a0, b0
    bot = beta_k / theta
    bot[0] = bt0
    c, d = _kummer_form(p, alpha_k, beta_k, bot)
    return CoeffTable(p, theta, alpha_k, beta_k, bot, c, d, jet_a0, jet_b0)
