"""Exact scalars: rationals and Gaussian rationals a + b*i.

Rationals are plain :class:`fractions.Fraction`.  Gaussian rationals are
stored over a common positive denominator, ``(re_num + im_num*i) / den``,
which keeps multiplication down to a handful of integer products and a
single gcd.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = ["Rational", "GaussianRational", "as_scalar", "ZERO", "ONE", "I"]


class GaussianRational:
    """Element of Q(i).  Immutable and hashable."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a, b, d):
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a, b, d):
        # d > 0 required; normalisation happens here.
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    # -- accessors -------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def denominator(self) -> int:
        return self._d

    def is_real(self) -> bool:
        return self._b == 0

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """|z|^2 as a rational."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._d == other._d:
            return GaussianRational._raw(self._a + other._a, self._b + other._b, self._d)
        d1, d2 = self._d, other._d
        return GaussianRational._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self._a, self._b, other._a, other._b
        if b == 0 and e == 0:
            return GaussianRational._raw(a * c, 0, self._d * other._d)
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        if not self:
            raise ZeroDivisionError("GaussianRational division by zero")
        # (a+bi)/d inverted = d(a-bi)/(a^2+b^2)
        n = self._a * self._a + self._b * self._b
        a, b = self._d * self._a, -self._d * self._b
        return GaussianRational._raw(a, b, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._a == other._a and self._b == other._b and self._d == other._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, _RationalABC)):
        x = Fraction(x)
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return NotImplemented


def as_scalar(x) -> GaussianRational:
    """Convert an int, Fraction or GaussianRational; floats are rejected."""
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")
    return y


def format_scalar(c: GaussianRational) -> str:
    """Text form accepted by the polynomial parser: ``3/2``, ``-1/2i``, ``(1+2i)``."""
    re, im = c.re, c.im
    if im == 0:
        return str(re)
    im_txt = _imag_text(im)
    if re == 0:
        return im_txt
    sign = "-" if im < 0 else "+"
    return f"({re}{sign}{_imag_text(abs(im))})"


def _imag_text(b: Fraction) -> str:
    if b == 1:
        return "i"
    if b == -1:
        return "-i"
    return f"{b}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
