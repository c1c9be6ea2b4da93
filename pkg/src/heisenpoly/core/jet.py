"""Truncated Taylor jets of complex functions about a complex center.

A jet of order ``M`` stores the coefficients ``c[0..M]`` of
``f(center + u) = sum_k c[k] u**k + O(u**(M+1))``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from ..errors import CancellationFailure, CenterMismatch, DivisionByNearZero, OrderExhausted

JET_DIV_RTOL = 1e-13
JET_CANCEL_RTOL = 1e-8
DEFAULT_ORDER = 24


@dataclass(frozen=True, eq=False)
class Jet:
    center: complex
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "center", complex(self.center))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: complex, center: complex, order: int = DEFAULT_ORDER) -> "Jet":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(center, c)

    @classmethod
    def identity(cls, center: complex, order: int = DEFAULT_ORDER) -> "Jet":
        """The jet of ``s -> s``."""
        c = np.zeros(order + 1, dtype=complex)
        c[0] = center
        if order >= 1:
            c[1] = 1.0
        return cls(center, c)

    # -- helpers -----------------------------------------------------------

    def _like(self, coeffs) -> "Jet":
        return Jet(self.center, coeffs)

    def _check(self, other: "Jet") -> None:
        if other.center != self.center or other.order != self.order:
            raise CenterMismatch(
                f"jets differ: center {self.center} vs {other.center}, "
                f"order {self.order} vs {other.order}"
            )

    def scale(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if len(self.coeffs) else 0.0

    def truncate(self, order: int) -> "Jet":
        return self._like(self.coeffs[: order + 1])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return self._like(self.coeffs + other.coeffs)
        c = self.coeffs.copy()
        c[0] += other
        return self._like(c)

    __radd__ = __add__

    def __neg__(self):
        return self._like(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return self._like(np.convolve(self.coeffs, other.coeffs)[: self.order + 1])
        return self._like(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self._like(self.coeffs / other)
        self._check(other)
        b = other.coeffs
        if abs(b[0]) <= JET_DIV_RTOL * other.scale():
            raise DivisionByNearZero(f"divisor constant term {b[0]!r} is negligible")
        a = self.coeffs
        q = np.zeros_like(a)
        for k in range(len(a)):
            q[k] = (a[k] - np.dot(b[1 : k + 1], q[k - 1 :: -1][:k])) / b[0]
        return self._like(q)

    def __rtruediv__(self, other):
        return Jet.constant(other, self.center, self.order) / self

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "Jet":
        if self.order < 1:
            raise OrderExhausted("cannot differentiate a jet of order 0")
        k = np.arange(1, self.order + 1)
        return self._like(self.coeffs[1:] * k)

    def eval_at_center(self) -> complex:
        return complex(self.coeffs[0])

    def mul_by_monomial(self) -> "Jet":
        """Multiply by ``(s - center)``, keeping the order."""
        c = np.zeros_like(self.coeffs)
        c[1:] = self.coeffs[:-1]
        return self._like(c)

    def divide_by_monomial(self, scale: float | None = None) -> "Jet":
        """Divide by ``(s - center)``; the constant term must already vanish.

        ``scale`` is the magnitude against which the leftover constant term is
        judged (defaults to this jet's largest coefficient).
        """
        if self.order < 1:
            raise OrderExhausted("cannot divide a jet of order 0 by a monomial")
        ref = self.scale() if scale is None else scale
        if abs(self.coeffs[0]) > JET_CANCEL_RTOL * ref:
            raise CancellationFailure(
                f"constant term {abs(self.coeffs[0]):.3e} did not cancel (scale {ref:.3e})"
            )
        return self._like(self.coeffs[1:])


def jet_exp(j: Jet) -> Jet:
    a = j.coeffs
    e = np.zeros_like(a)
    e[0] = cmath.exp(a[0])
    for k in range(1, len(a)):
        m = np.arange(1, k + 1)
        e[k] = np.dot(m * a[1 : k + 1], e[k - 1 :: -1][:k]) / k
    return Jet(j.center, e)


def jet_log(j: Jet) -> Jet:
    """Principal-branch logarithm."""
    a = j.coeffs
    if abs(a[0]) <= JET_DIV_RTOL * j.scale():
        raise DivisionByNearZero("log of a jet with vanishing constant term")
    out = np.zeros_like(a)
    out[0] = cmath.log(a[0])
    for k in range(1, len(a)):
        m = np.arange(1, k)
        acc = np.dot(m * out[1:k], a[k - 1 : 0 : -1]) if k > 1 else 0.0
        out[k] = (a[k] - acc / k) / a[0]
    return Jet(j.center, out)


def jet_pow(j: Jet, gamma: float) -> Jet:
    """``j ** gamma`` on the principal branch, as ``exp(gamma * log j)``."""
    return jet_exp(jet_log(j) * gamma)
