"""Midpoint-radius arithmetic on top of mpmath binary floats.

A :class:`BigFloat` is a value together with an absolute error bound.  Every
arithmetic operation widens the bound by the propagated operand errors plus a
one-ulp rounding allowance at the working precision that is active when the
operation runs (``mpmath.mp.prec``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

__all__ = ["BigFloat", "pi_value"]


def _ulp(x: mpf) -> mpf:
    # one unit of rounding at the active precision, relative to |x|
    return abs(x) * mpf(2) ** (1 - mp.prec)


@dataclass(frozen=True)
class BigFloat:
    value: mpf
    err: mpf = mpf(0)

    @classmethod
    def exact(cls, x: int | Fraction | str) -> "BigFloat":
        """Round an exact rational into a ball that is guaranteed to contain it."""
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
            v = mpf(int(x))
            return cls(v, mpf(0) if v == int(x) else _ulp(v))
        v = mpf(x.numerator) / x.denominator
        return cls(v, _ulp(v))

    @classmethod
    def coerce(cls, x) -> "BigFloat":
        if isinstance(x, BigFloat):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.exact(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to BigFloat")

    def __add__(self, other):
        other = BigFloat.coerce(other)
        v = self.value + other.value
        return BigFloat(v, self.err + other.err + _ulp(v))

    __radd__ = __add__

    def __neg__(self):
        return BigFloat(-self.value, self.err)

    def __sub__(self, other):
        return self + (-BigFloat.coerce(other))

    def __rsub__(self, other):
        return BigFloat.coerce(other) - self

    def __mul__(self, other):
        other = BigFloat.coerce(other)
        v = self.value * other.value
        e = abs(self.value) * other.err + abs(other.value) * self.err + self.err * other.err
        return BigFloat(v, e + _ulp(v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = BigFloat.coerce(other)
        if abs(other.value) <= other.err:
            raise ZeroDivisionError("divisor ball contains zero")
        v = self.value / other.value
        e = (self.err + abs(v) * other.err) / (abs(other.value) - other.err)
        return BigFloat(v, e + _ulp(v))

    def __rtruediv__(self, other):
        return BigFloat.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = BigFloat(mpf(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __abs__(self):
        return BigFloat(abs(self.value), self.err)

    def contains(self, x) -> bool:
        other = BigFloat.coerce(x) if isinstance(x, (int, Fraction, BigFloat)) else BigFloat(mpf(x))
        return self.overlaps(other)

    def overlaps(self, other: "BigFloat") -> bool:
        return abs(self.value - other.value) <= self.err + other.err

    def correct_digits(self) -> float:
        """Roughly how many decimal digits of the value are certified."""
        if self.err == 0:
            return float("inf")
        scale = max(abs(self.value), mpf(1))
        return float(mpmath.log10(scale / self.err))

    def to_string(self, digits: int = 40) -> str:
        return f"{mpmath.nstr(self.value, digits, strip_zeros=False)} ± {mpmath.nstr(self.err, 3)}"

    def __str__(self):
        return self.to_string()


def pi_value() -> BigFloat:
    """pi at the active precision; mpmath rounds the constant correctly."""
    v = +mpmath.pi
    return BigFloat(v, _ulp(v))
