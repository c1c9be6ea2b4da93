import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp

from heisenpoly.core import Params
from heisenpoly.errors import BPole, GammaPole, PoleAtNonpositiveInteger
from heisenpoly.special import (
    bessel_j,
    bessel_zero,
    entire_part,
    gamma_fn,
    kummer_m,
    kummer_m_prime,
    log_gamma_signed,
    rgamma,
    t_pair_bessel,
    t_pair_kummer,
    t_pair_series,
)
from heisenpoly.special.bessel import bessel_j_asymptotic, bessel_j_series, mcmahon_guess
from heisenpoly.special.kummer import kummer_m_asymptotic, kummer_m_series
from heisenpoly.special.tfuncs import series_coefficients

mpmath.mp.dps = 40


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# -- gamma -----------------------------------------------------------------

def test_gamma_values():
    assert gamma_fn(1.0) == 1.0
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gamma_fn(10.0) == pytest.approx(362880.0, rel=1e-15)


def test_gamma_poles():
    with pytest.raises(PoleAtNonpositiveInteger):
        gamma_fn(-3.0)
    assert rgamma(0.0) == 0.0 and rgamma(-4.0) == 0.0
    assert rgamma(200.0) == pytest.approx(float(mpmath.rgamma(200)), rel=1e-12)
    assert log_gamma_signed(-0.5) == (pytest.approx(math.log(2 * math.sqrt(math.pi))), -1.0)
    assert log_gamma_signed(-1.5)[1] == 1.0


# -- Kummer ----------------------------------------------------------------

def test_kummer_trivial_values():
    assert kummer_m(0.7, 1.3, 0j) == 1.0
    assert kummer_m(0.0, 1.3, 5 - 2j) == 1.0


def test_kummer_elementary_case():
    # M(1, 2, x) = (e^x - 1)/x
    assert kummer_m(1.0, 2.0, 3.0) == pytest.approx((math.exp(3.0) - 1.0) / 3.0, rel=1e-14)


def test_kummer_b_pole():
    with pytest.raises(BPole):
        kummer_m(0.5, -2.0, 1.0)
    # terminating case a = -3 <= b = -2 stays finite... only when a >= b
    assert kummer_m(-1.0, -2.0, 2.0) == pytest.approx(1.0 + (-1.0) / (-2.0) * 2.0)


@pytest.mark.parametrize("x", [0.5, 5.0, 25.0, 39.0, 41.0, 80.0, 150.0])
@pytest.mark.parametrize("a,b", [(0.3, 1.2), (0.7, 1.4), (1.5, 1.1)])
def test_kummer_against_mpmath(a, b, x):
    z = -2j * x
    ref = complex(mpmath.hyp1f1(a, b, z))
    refp = complex(a / b * mpmath.hyp1f1(a + 1, b + 1, z))
    assert rel(kummer_m(a, b, z), ref) < 1e-12
    assert rel(kummer_m_prime(a, b, z), refp) < 1e-12


@pytest.mark.parametrize("r", [40.0, 45.0, 50.0])
def test_kummer_routes_overlap(r):
    z = -1j * r
    assert rel(kummer_m_series(0.3, 1.2, z), kummer_m_asymptotic(0.3, 1.2, z)) < 1e-10


# -- Bessel ----------------------------------------------------------------

def test_bessel_half_integer_closed_form():
    x = 2.5
    assert bessel_j(0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sin(x), abs=1e-12)


def test_bessel_small_argument():
    assert bessel_j(0.0, 1e-300) == 1.0


@pytest.mark.parametrize("nu", [-0.9, -0.3, 0.0, 0.2, 0.5, 1.3, 2.0])
def test_bessel_branches_agree(nu):
    x = 13.0
    assert abs(bessel_j_series(nu, x) - bessel_j_asymptotic(nu, x)) < 1e-8


@pytest.mark.parametrize("nu", [-1.5, -0.7, 0.0, 0.2, 0.8, 1.7, 3.0])
@pytest.mark.parametrize("x", [0.01, 1.0, 7.5, 19.0, 21.0, 55.0])
def test_bessel_against_scipy(nu, x):
    assert bessel_j(nu, x) == pytest.approx(sp.jv(nu, x), abs=1e-13, rel=1e-12)


def test_bessel_zero_half_order():
    assert bessel_zero(0.5, 1) == pytest.approx(math.pi, rel=1e-14)
    assert bessel_zero(0.5, 3) == pytest.approx(3 * math.pi, rel=1e-14)


@pytest.mark.parametrize("nu", [0.0, 0.2, 1.0, 2.5])
def test_bessel_zero_against_scipy(nu):
    for k in range(1, 8):
        assert bessel_zero(nu, k) == pytest.approx(float(mpmath.besseljzero(nu, k)), rel=1e-12)


def test_bessel_zero_large_k_offset_bounded():
    nu = 0.25
    offsets = [bessel_zero(nu, k) - (k + nu / 2 - 0.25) * math.pi for k in (10, 20, 40, 80)]
    assert all(abs(o) < 0.05 for o in offsets)
    # and shrinking like 1/k
    assert abs(offsets[-1]) < abs(offsets[0])
    assert mcmahon_guess(nu, 80) == pytest.approx(bessel_zero(nu, 80), rel=1e-8)


# -- T functions -----------------------------------------------------------

def test_series_coefficients_match_expansion():
    # (1+w)^{-a} (1-w)^{-b} Maclaurin coefficients via mpmath taylor
    a, b = 0.3, 0.9
    ref = mpmath.taylor(lambda w: (1 + w) ** (-a) * (1 - w) ** (-b), 0, 8)
    np.testing.assert_allclose(series_coefficients(Params(a, b), 8), [float(c) for c in ref], rtol=1e-14)


def test_t1_leading_behaviour():
    p = Params(0.3, 0.9)
    x = 1e-4
    t = t_pair_series(p, x)
    assert t.t1 * math.gamma(1.2) * x ** (1 - 1.2) == pytest.approx(1.0, abs=1e-3)


def test_t1_is_j0_for_legendre_parameters():
    assert t_pair_series(Params(0.5, 0.5), 2.0).t1 == pytest.approx(sp.j0(2.0), abs=1e-13)


def central(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


def test_t2_is_derivative_of_t1_series():
    p = Params(0.3, 0.9)
    d = central(lambda s: t_pair_series(p, s).t1, 3.0, 1e-5)
    assert rel(t_pair_series(p, 3.0).t2, d) < 1e-8


def test_kummer_route_matches_series():
    p = Params(0.3, 0.9)
    a, b = t_pair_kummer(p, 5.0), t_pair_series(p, 5.0)
    assert rel(a.t1, b.t1) < 1e-10 and rel(a.t2, b.t2) < 1e-10


def test_kummer_route_matches_bessel():
    a, b = t_pair_kummer(Params(0.7, 0.7), 10.0), t_pair_bessel(0.7, 10.0)
    assert abs(a.t1 - b.t1) < 1e-9 and abs(a.t2 - b.t2) < 1e-9


def test_ode_residual_kummer_route():
    p = Params(0.3, 0.9)
    x, h = 4.0, 1e-3
    f = lambda s: t_pair_kummer(p, s).t1
    t1 = f(x)
    d1 = (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)
    d2 = (-f(x - 2 * h) + 16 * f(x - h) - 30 * t1 + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h)
    resid = x * d2 + p.a * d1 + (x - 1j * p.b) * t1
    assert abs(resid) <= 1e-7 * abs(x * d2)


def test_bessel_route_examples():
    assert t_pair_bessel(0.5, math.pi).t1 == pytest.approx(sp.j0(math.pi), abs=1e-14)
    assert t_pair_bessel(1.5, 2.0).t1 == pytest.approx(2.0 * sp.j1(2.0), abs=1e-14)
    d = central(lambda s: t_pair_bessel(1.2, s).t1, 6.0, 1e-5)
    assert abs(t_pair_bessel(1.2, 6.0).t2 - d) < 1e-8
    with pytest.raises(GammaPole):
        t_pair_bessel(-1.0, 2.0)


def test_kummer_route_gamma_pole():
    with pytest.raises(GammaPole):
        t_pair_kummer(Params(1.0, -1.0), 2.0)


@pytest.mark.parametrize("x", [0.5, 2.0, 7.0])
def test_kummer_equation_residual(x):
    # y(z) = x^{1-g} e^{-ix} T1(x) with z = -2ix solves z y'' + (g - z) y' - alpha y = 0
    p = Params(0.3, 0.9)
    g = p.alpha + p.beta
    h = 1e-3

    def y(s):
        return s ** (1 - g) * cmath.exp(-1j * s) * t_pair_series(p, s).t1

    y0 = y(x)
    dy = (y(x - 2 * h) - 8 * y(x - h) + 8 * y(x + h) - y(x + 2 * h)) / (12 * h)
    d2y = (-y(x - 2 * h) + 16 * y(x - h) - 30 * y0 + 16 * y(x + h) - y(x + 2 * h)) / (12 * h * h)
    z = -2j * x
    # d/dz = (d/dx) / (-2i)
    yz, yzz = dy / (-2j), d2y / (-2j) ** 2
    resid = z * yzz + (g - z) * yz - p.alpha * y0
    scale = abs(z * yzz) + abs((g - z) * yz) + abs(p.alpha * y0)
    assert abs(resid) <= 1e-8 * scale


def test_entire_part_continuous_at_origin():
    p = Params(0.3, 0.9)
    xs = np.array([0.0, 1e-12, 1e-8, 1e-4])
    e, ep = entire_part(p, xs)
    assert e[0] == pytest.approx(1 / math.gamma(1.2), rel=1e-15)
    np.testing.assert_allclose(e, e[0], atol=1e-4)
    np.testing.assert_allclose(ep, ep[0], atol=1e-4)


def test_entire_part_at_gamma_pole():
    # alpha + beta = 0: the k = 0 term drops and the series starts at k = 1
    p = Params(1.0, -1.0)
    e, _ = entire_part(p, np.array([0.0, 1.0]))
    assert e[0] == 0.0
    assert np.isfinite(e[1]) and abs(e[1]) > 0


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.05, max_value=2.0),
    st.floats(min_value=0.05, max_value=2.0),
    st.floats(min_value=0.1, max_value=29.0),
)
def test_t2_is_derivative_everywhere(a, b, x):
    p = Params(a, b)
    h = 1e-5 * max(x, 1.0)
    d = central(lambda s: t_pair_series(p, s).t1, x, h)
    t = t_pair_series(p, x)
    assert abs(t.t2 - d) <= 1e-7 * (abs(t.t2) + abs(t.t1) / x)


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.05, max_value=2.0),
    st.floats(min_value=0.05, max_value=2.0),
    st.floats(min_value=0.1, max_value=29.0),
)
def test_series_and_kummer_routes_agree(a, b, x):
    p = Params(a, b)
    s, k = t_pair_series(p, x), t_pair_kummer(p, x)
    assert abs(s.t1 - k.t1) <= 1e-9 * (abs(k.t1) + abs(k.t2))
