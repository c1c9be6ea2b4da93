import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heisenpoly.core import Params
from heisenpoly.errors import DegreeTooLarge, ParamOutOfRange
from heisenpoly.exact import (
    eval_exact,
    eval_via_generating_recurrence,
    gegenbauer_oracle,
    poch_over_factorial,
    poly_value,
    to_mantissa_exponent,
)


def legendre(n: int, x: float) -> float:
    p0, p1 = 1.0, x
    if n == 0:
        return p0
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1


def three_term(p: Params, n: int, theta: float) -> complex:
    """Independent oracle: the recurrence
    (n+1) C_{n+1} = (2n cos t + alpha e^{-it} + beta e^{it}) C_n - (n - 1 + alpha + beta) C_{n-1},
    which follows from differentiating the generating function."""
    c_prev, c = 1.0 + 0j, p.alpha * cmath.exp(-1j * theta) + p.beta * cmath.exp(1j * theta)
    if n == 0:
        return c_prev
    for k in range(1, n):
        mult = 2 * k * math.cos(theta) + p.alpha * cmath.exp(-1j * theta) + p.beta * cmath.exp(1j * theta)
        c_prev, c = c, (mult * c - (k - 1 + p.alpha + p.beta) * c_prev) / (k + 1)
    return c


def test_degree_zero():
    assert eval_exact(Params(0.3, 0.9), 0, 1.234) == 1.0
    np.testing.assert_array_equal(eval_via_generating_recurrence(Params(0.3, 0.9), 0, 0.5), [1.0])


def test_degree_one():
    a, b, t = 0.3, 0.9, 0.77
    expected = a * cmath.exp(-1j * t) + b * cmath.exp(1j * t)
    assert eval_exact(Params(a, b), 1, t) == pytest.approx(expected, abs=1e-15)


def test_chebyshev_zero_hand_expanded():
    # C_2^{(1,1)} = 1 + 2 cos 2 theta, zero at pi/3
    assert abs(eval_exact(Params(1.0, 1.0), 2, math.pi / 3)) < 1e-15


@pytest.mark.parametrize("n", [0, 1, 5, 40, 300])
def test_theta_zero_is_pochhammer(n):
    a, b = 0.3, 0.9
    expected = math.exp(math.lgamma(a + b + n) - math.lgamma(a + b) - math.lgamma(n + 1))
    assert eval_exact(Params(a, b), n, 0.0) == pytest.approx(expected, rel=1e-13)


def test_poch_over_factorial_matches_binomial_series():
    # (1-w)^{-g}: coefficients from the generalized binomial theorem
    g = 1.7
    expected = [math.gamma(g + k) / (math.gamma(g) * math.factorial(k)) for k in range(8)]
    np.testing.assert_allclose(poch_over_factorial(g, 7), expected, rtol=1e-14)


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5])
def test_legendre_reduction(theta):
    out = eval_via_generating_recurrence(Params(0.5, 0.5), 50, theta)
    for n in range(51):
        assert out[n] == pytest.approx(legendre(n, math.cos(theta)), abs=1e-12)
        assert eval_exact(Params(0.5, 0.5), n, theta) == pytest.approx(legendre(n, math.cos(theta)), abs=1e-12)


def test_chebyshev_u_reduction():
    theta = 1.0
    out = eval_via_generating_recurrence(Params(1.0, 1.0), 50, theta)
    for n in range(51):
        u = math.sin((n + 1) * theta) / math.sin(theta)
        assert out[n] == pytest.approx(u, abs=1e-11)


def test_gegenbauer_oracle_examples():
    assert abs(gegenbauer_oracle(1.0, 2, math.cos(math.pi / 3))) < 1e-15
    assert gegenbauer_oracle(0.5, 3, 1.0) == pytest.approx(1.0, abs=1e-15)
    v = eval_exact(Params(0.7, 0.7), 5, math.acos(0.3))
    assert v.real == pytest.approx(gegenbauer_oracle(0.7, 5, 0.3), abs=1e-12)


def test_gegenbauer_oracle_rejects():
    with pytest.raises(ParamOutOfRange):
        gegenbauer_oracle(0.0, 3, 0.2)
    with pytest.raises(ParamOutOfRange):
        gegenbauer_oracle(0.5, 3, 1.5)


def test_degree_guard():
    with pytest.raises(DegreeTooLarge):
        eval_exact(Params(0.3, 0.9), 100, 1.0, max_degree=50)
    with pytest.raises(ParamOutOfRange):
        eval_exact(Params(0.3, 0.9), -1, 1.0)


params = st.floats(min_value=-1.5, max_value=2.5, allow_nan=False)
thetas = st.floats(min_value=-3.1, max_value=3.1, allow_nan=False)


@settings(max_examples=150, deadline=None)
@given(params, params, st.integers(0, 60), thetas)
def test_three_term_oracle(a, b, n, theta):
    p = Params(a, b)
    v = eval_exact(p, n, theta)
    w = three_term(p, n, theta)
    assert abs(v - w) <= 1e-10 * max(1.0, abs(v))


@settings(max_examples=150, deadline=None)
@given(params, params, st.integers(0, 60), thetas)
def test_conjugate_swap_symmetry(a, b, n, theta):
    v = eval_exact(Params(a, b), n, -theta)
    w = eval_exact(Params(b, a), n, theta)
    assert abs(v - w) <= 1e-12 * max(1.0, abs(v))
    # direct from the term-wise definition: conj of C_n^{(a,b)}(e^{i t}) swaps the parameters
    assert abs(eval_exact(Params(a, b), n, theta).conjugate() - w) <= 1e-12 * max(1.0, abs(v))


@settings(max_examples=100, deadline=None)
@given(params.filter(lambda a: a != 0), st.integers(0, 60), thetas)
def test_symmetric_parameters_give_real_values(a, n, theta):
    v = eval_exact(Params(a, a), n, theta)
    assert abs(v.imag) <= 1e-11 * max(abs(v), 1e-300)


@pytest.mark.parametrize("theta", [0.0, 0.4, 1.7, 3.0])
def test_nonpositive_integer_vanishing(theta):
    p = Params(-2.0, -1.0)
    for n in range(4, 61):
        assert eval_exact(p, n, theta) == 0.0
    assert eval_exact(p, 3, theta) != 0.0


@pytest.mark.parametrize("rho", [0.5, 2.0])
def test_homogeneity(rho):
    p, n, theta = Params(0.3, 0.9), 37, 0.8
    pv = poly_value(p, n, theta, rho)
    base = poly_value(p, n, theta)
    assert pv.unit_value == base.unit_value
    assert pv.value == base.unit_value * rho**n
    assert pv.log10_scale == pytest.approx(n * math.log10(rho))


def test_mantissa_exponent_survives_overflow():
    p = Params(0.3, 0.9)
    pv = poly_value(p, 2000, 0.5, rho=10.0)
    mant, exp10 = pv.mantissa_exponent()
    assert exp10 >= 1999
    assert 1.0 <= abs(mant) < 10.0
    mant2, exp2 = to_mantissa_exponent(pv.unit_value, 0.0)
    assert mant2 * 10.0**exp2 == pytest.approx(pv.unit_value, rel=1e-14)
