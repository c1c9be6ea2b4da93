"""Kummer's confluent hypergeometric function M(a, b, z) for real a, b.

Small and moderate ``|z|``: Maclaurin series summed in double-double, after
Kummer's transformation to ``Re z >= 0``. On the imaginary axis the terms reach
``~e^{|z|}`` while the sum stays O(1), so plain doubles would be useless well
before ``|z| = 40``. Large ``|z|``: the two-sector asymptotic expansion,
each series cut at its smallest term.
"""

from __future__ import annotations

import cmath
import math

from ..core.dd import CDD, DD, two_sum
from ..core.params import is_nonpositive_integer
from ..errors import BPole, NonConvergence
from .gamma import gamma_fn, rgamma

Z_SWITCH = 40.0
MAX_SERIES_TERMS = 5000
ASYMPTOTIC_RTOL = 1e-10


def _check_b(a: float, b: float) -> None:
    if is_nonpositive_integer(b) and not (is_nonpositive_integer(a) and a >= b):
        raise BPole(f"M(a, b, z) undefined: b={b} is a nonpositive integer")


def kummer_m_series(a: float, b: float, z: complex) -> complex:
    """Maclaurin series of M(a, b, z), valid for all z; costs grow with |z|."""
    _check_b(a, b)
    z = complex(z)
    if z == 0 or a == 0:
        return 1.0 + 0.0j
    if z.real < 0.0:
        return cmath.exp(z) * kummer_m_series(b - a, b, -z)
    zmag = abs(z)
    zc = CDD.from_complex(z)
    term = CDD(DD(1.0), DD(0.0))
    total = CDD(DD(1.0), DD(0.0))
    quiet = 0
    for k in range(MAX_SERIES_TERMS):
        if a + k == 0:
            break  # polynomial case: series terminates
        num = DD(*two_sum(a, float(k)))
        den = DD(*two_sum(b, float(k))) * float(k + 1)
        term = (term * zc) * (num / den)
        total = total + term
        if k > zmag:
            quiet = quiet + 1 if term.abs_hi() <= 1e-18 * total.abs_hi() else 0
            if quiet >= 10:
                break
    else:
        raise NonConvergence(f"Kummer series did not settle in {MAX_SERIES_TERMS} terms at z={z}")
    return total.to_complex()


def _asymptotic_sum(p: float, q: float, w: complex) -> tuple[complex, float]:
    """``sum_s (p)_s (q)_s / s! * w**s`` truncated at its smallest term.

    Returns the partial sum and the magnitude of the first omitted term.
    """
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    last = 1.0
    for s in range(400):
        nxt = term * (p + s) * (q + s) / (s + 1) * w
        mag = abs(nxt)
        if mag == 0.0:
            return total, 0.0
        if mag > last:
            return total, mag
        term = nxt
        total += term
        last = mag
        if mag <= 1e-17 * abs(total):
            return total, 0.0
    return total, last


def kummer_m_asymptotic(a: float, b: float, z: complex) -> complex:
    """Large-|z| expansion of M(a, b, z), with both exponential contributions."""
    _check_b(a, b)
    z = complex(z)
    # e^{+-i pi a} z^{-a}: upper sign for Im z >= 0, lower for Im z < 0
    sign = 1.0 if z.imag >= 0.0 else -1.0
    algebraic = cmath.exp(sign * 1j * math.pi * a) * z ** (-a)
    s1, err1 = _asymptotic_sum(a, a - b + 1.0, -1.0 / z)
    s2, err2 = _asymptotic_sum(b - a, 1.0 - a, 1.0 / z)
    c1 = rgamma(b - a) * algebraic
    c2 = rgamma(a) * cmath.exp(z) * z ** (a - b)
    value = gamma_fn(b) * (c1 * s1 + c2 * s2)
    err = abs(gamma_fn(b)) * (abs(c1) * err1 + abs(c2) * err2)
    if value != 0 and err > ASYMPTOTIC_RTOL * abs(value):
        raise NonConvergence(
            f"asymptotic expansion of M({a}, {b}, z) only reaches {err / abs(value):.1e} at |z|={abs(z):.3g}"
        )
    return value


def kummer_m(a: float, b: float, z: complex, *, z_switch: float = Z_SWITCH) -> complex:
    _check_b(a, b)
    z = complex(z)
    if z == 0 or a == 0 or is_nonpositive_integer(a) or abs(z) <= z_switch:
        return kummer_m_series(a, b, z)
    return kummer_m_asymptotic(a, b, z)


def kummer_m_prime(a: float, b: float, z: complex, *, z_switch: float = Z_SWITCH) -> complex:
    """dM/dz = (a/b) M(a+1, b+1, z)."""
    _check_b(a, b)
    if a == 0:
        return 0j
    return a / b * kummer_m(a + 1.0, b + 1.0, z, z_switch=z_switch)
