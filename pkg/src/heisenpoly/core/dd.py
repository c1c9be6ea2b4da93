"""Double-double ("compensated") arithmetic built on error-free transformations.

A :class:`DD` carries an unevaluated sum ``hi + lo`` with ``|lo| <= ulp(hi)/2``,
giving roughly 32 significant digits. All operations are elementwise, so the
components may be Python floats or NumPy float64 arrays. This is what lets the
power series of entire functions be summed far past the point where plain
double precision loses everything to cancellation.
"""

from __future__ import annotations

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    err = b - (s - a)
    return s, err


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


class DD:
    """Real double-double number (or array of them)."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi, lo=0.0):
        self.hi = hi
        self.lo = lo

    @staticmethod
    def _coerce(x) -> "DD":
        return x if isinstance(x, DD) else DD(x, 0.0 * x)

    def __add__(self, other):
        o = DD._coerce(other)
        s, e = two_sum(self.hi, o.hi)
        t, f = two_sum(self.lo, o.lo)
        e = e + t
        s, e = quick_two_sum(s, e)
        e = e + f
        return DD(*quick_two_sum(s, e))

    __radd__ = __add__

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-DD._coerce(other))

    def __rsub__(self, other):
        return DD._coerce(other) + (-self)

    def __mul__(self, other):
        o = DD._coerce(other)
        p, e = two_prod(self.hi, o.hi)
        e = e + (self.hi * o.lo + self.lo * o.hi)
        return DD(*quick_two_sum(p, e))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = DD._coerce(other)
        q1 = self.hi / o.hi
        r = self - o * q1
        q2 = r.hi / o.hi
        r = r - o * q2
        q3 = r.hi / o.hi
        q = DD(*quick_two_sum(q1, q2))
        return q + q3

    def __rtruediv__(self, other):
        return DD._coerce(other) / self

    def __abs__(self):
        sign = np.where(self.hi < 0, -1.0, 1.0) if isinstance(self.hi, np.ndarray) else (
            -1.0 if self.hi < 0 else 1.0)
        return DD(sign * self.hi, sign * self.lo)

    def to_float(self):
        return self.hi + self.lo

    def __repr__(self) -> str:
        return f"DD({self.hi!r}, {self.lo!r})"


class CDD:
    """Complex double-double: a pair of :class:`DD` (real, imaginary)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = DD._coerce(re)
        self.im = DD._coerce(im if im is not None else 0.0 * self.re.hi)

    @staticmethod
    def from_complex(z) -> "CDD":
        z = np.asarray(z, dtype=complex) if isinstance(z, np.ndarray) else complex(z)
        return CDD(DD(z.real, 0.0 * z.real), DD(z.imag, 0.0 * z.imag))

    @staticmethod
    def _coerce(x) -> "CDD":
        if isinstance(x, CDD):
            return x
        if isinstance(x, DD):
            return CDD(x, DD(0.0 * x.hi, 0.0 * x.hi))
        if isinstance(x, np.ndarray) and np.iscomplexobj(x):
            return CDD.from_complex(x)
        if isinstance(x, complex):
            return CDD.from_complex(x)
        return CDD(DD(x, 0.0 * x), DD(0.0 * x, 0.0 * x))

    def __add__(self, other):
        o = CDD._coerce(other)
        return CDD(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return CDD(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-CDD._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (DD, float, int)) or (
            isinstance(other, np.ndarray) and not np.iscomplexobj(other)
        ):
            return CDD(self.re * other, self.im * other)
        o = CDD._coerce(other)
        return CDD(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (DD, float, int)) or (
            isinstance(other, np.ndarray) and not np.iscomplexobj(other)
        ):
            return CDD(self.re / other, self.im / other)
        o = CDD._coerce(other)
        den = o.re * o.re + o.im * o.im
        return CDD((self.re * o.re + self.im * o.im) / den, (self.im * o.re - self.re * o.im) / den)

    def mul_i(self) -> "CDD":
        return CDD(-self.im, self.re)

    def abs_hi(self):
        return np.hypot(self.re.hi, self.im.hi)

    def to_complex(self):
        return self.re.to_float() + 1j * self.im.to_float()

