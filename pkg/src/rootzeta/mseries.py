"""Truncated multivariate power series over Q with exact division by linear forms.

Internally a homogeneous polynomial is a dict from a packed exponent key to a
gmpy2 ``mpq``; exponent i occupies bits [8i, 8i+8), so every exponent must
stay below 256.  The public :class:`MultiSeries` uses exponent tuples and
``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

__all__ = [
    "HolomorphyError",
    "LinearForm",
    "MultiSeries",
    "pack",
    "unpack",
    "poly_mul",
    "poly_mul_linear",
    "poly_div_linear",
]

_BITS = 8
_MASK = (1 << _BITS) - 1


class HolomorphyError(ArithmeticError):
    """A division that must be exact left a remainder."""


# number of HolomorphyError raises in this process; the test suite asserts it stays 0
remainder_events = 0


def pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= _MASK:
            raise OverflowError(f"exponent {e} out of packing range")
        key |= e << (_BITS * i)
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(nvars))


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _frac(x: mpq) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class LinearForm:
    """sum_i coefficients[i] * t_i, not identically zero."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not any(self.coefficients):
            raise ValueError("linear form is identically zero")

    def normalized(self) -> tuple[Fraction, "LinearForm"]:
        """Return (scale, primitive) with self = scale * primitive.

        The primitive form has coprime integer coefficients and a positive
        first nonzero entry, so proportional forms share one representative.
        """
        from math import gcd, lcm

        den = lcm(*(c.denominator for c in self.coefficients))
        ints = [int(c * den) for c in self.coefficients]
        g = 0
        for x in ints:
            g = gcd(g, x)
        lead = next(x for x in ints if x)
        if lead < 0:
            g = -g
        prim = LinearForm(tuple(Fraction(x // g) for x in ints))
        return Fraction(g, den), prim

    def pivot(self) -> int:
        unit = [i for i, c in enumerate(self.coefficients) if abs(c) == 1]
        if unit:
            return unit[-1]
        return max(i for i, c in enumerate(self.coefficients) if c)

    def as_terms(self) -> list[tuple[int, mpq]]:
        return [(1 << (_BITS * i), _q(c)) for i, c in enumerate(self.coefficients) if c]


def poly_mul(a: Mapping[int, mpq], b: Mapping[int, mpq]) -> dict[int, mpq]:
    out: dict[int, mpq] = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def poly_mul_linear(p: Mapping[int, mpq], form: LinearForm) -> dict[int, mpq]:
    return poly_mul(p, dict(form.as_terms()))


def poly_div_linear(p: Mapping[int, mpq], form: LinearForm) -> dict[int, mpq]:
    """Exact quotient p / form for a homogeneous polynomial p.

    Synthetic division in the pivot variable t_j: writing p = sum_e p_e t_j^e
    and form = a t_j + l, the quotient digits satisfy
    q_{e-1} = (p_e - l q_e) / a from the top exponent down, and p_0 - l q_0
    must vanish.
    """
    j = form.pivot()
    sh = _BITS * j
    unit = 1 << sh
    a = _q(form.coefficients[j])
    rest = [(s, c) for s, c in form.as_terms() if s != unit]
    buckets: dict[int, dict[int, mpq]] = {}
    for k, c in p.items():
        e = (k >> sh) & _MASK
        buckets.setdefault(e, {})[k - e * unit] = c
    if not buckets:
        return {}
    quotient: dict[int, mpq] = {}
    q_hi: dict[int, mpq] = {}
    for e in range(max(buckets), 0, -1):
        t = dict(buckets.get(e, {}))
        for k, c in q_hi.items():
            for s, b in rest:
                t[k + s] = t.get(k + s, 0) - b * c
        q_lo = {k: c / a for k, c in t.items() if c}
        for k, c in q_lo.items():
            quotient[k + (e - 1) * unit] = c
        q_hi = q_lo
    t = dict(buckets.get(0, {}))
    for k, c in q_hi.items():
        for s, b in rest:
            t[k + s] = t.get(k + s, 0) - b * c
    leftover = {k: c for k, c in t.items() if c}
    if leftover:
        global remainder_events
        remainder_events += 1
        raise HolomorphyError(f"division by {form.coefficients} left {len(leftover)} nonzero remainder terms")
    return quotient


class MultiSeries:
    """Truncated power series sum_k c_k t^k with total degree |k| <= max_total_degree."""

    def __init__(self, variables: Sequence[str], max_total_degree: int, coefficients: Mapping | None = None):
        self.variables = tuple(variables)
        self.max_total_degree = int(max_total_degree)
        self._c: dict[tuple[int, ...], Fraction] = {}
        for k, c in (coefficients or {}).items():
            k = tuple(k)
            if len(k) != len(self.variables):
                raise ValueError(f"exponent {k} has wrong length")
            if sum(k) <= self.max_total_degree and c:
                self._c[k] = self._c.get(k, Fraction(0)) + Fraction(c)
        self._c = {k: c for k, c in self._c.items() if c}

    @classmethod
    def from_homogeneous(cls, variables, max_total_degree, parts: Iterable[Mapping[int, mpq]]):
        n = len(variables)
        coeffs = {}
        for part in parts:
            for key, c in part.items():
                coeffs[unpack(key, n)] = _frac(c)
        return cls(variables, max_total_degree, coeffs)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def coefficients(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._c)

    def coefficient(self, k: Sequence[int]) -> Fraction:
        k = tuple(k)
        if sum(k) > self.max_total_degree:
            raise ValueError(f"exponent {k} beyond truncation degree {self.max_total_degree}")
        return self._c.get(k, Fraction(0))

    def _compatible(self, other: "MultiSeries") -> int:
        if self.variables != other.variables:
            raise ValueError("series over different variables")
        return min(self.max_total_degree, other.max_total_degree)

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        n = self._compatible(other)
        out = dict(self._c)
        for k, c in other._c.items():
            out[k] = out.get(k, Fraction(0)) + c
        return MultiSeries(self.variables, n, out)

    def __neg__(self):
        return MultiSeries(self.variables, self.max_total_degree, {k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q) -> "MultiSeries":
        q = Fraction(q)
        return MultiSeries(self.variables, self.max_total_degree, {k: c * q for k, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n = self._compatible(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for k1, c1 in self._c.items():
            d1 = sum(k1)
            for k2, c2 in other._c.items():
                if d1 + sum(k2) > n:
                    continue
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return MultiSeries(self.variables, n, out)

    __rmul__ = __mul__

    def div_linear(self, form: LinearForm) -> "MultiSeries":
        """Exact quotient by a linear form; the result is known one degree lower."""
        packed: dict[int, dict[int, mpq]] = {}
        for k, c in self._c.items():
            packed.setdefault(sum(k), {})[pack(k)] = _q(c)
        if 0 in packed:
            raise HolomorphyError("series with a constant term is not divisible by a linear form")
        parts = [poly_div_linear(packed[d], form) for d in sorted(packed)]
        return MultiSeries.from_homogeneous(self.variables, self.max_total_degree - 1, parts)

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.max_total_degree == other.max_total_degree
            and self._c == other._c
        )

    def dump(self) -> str:
        """One 'exponent-vector : p/q' line per nonzero coefficient, sorted by (degree, exponent)."""
        lines = []
        for k in sorted(self._c, key=lambda k: (sum(k), k)):
            c = self._c[k]
            lines.append(f"{','.join(map(str, k))} : {c.numerator}/{c.denominator}")
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def load(cls, text: str, variables: Sequence[str], max_total_degree: int) -> "MultiSeries":
        coeffs = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            k, c = line.split(":")
            coeffs[tuple(int(x) for x in k.split(","))] = Fraction(c.strip())
        return cls(variables, max_total_degree, coeffs)

    def __repr__(self):
        return f"MultiSeries({self.variables}, N={self.max_total_degree}, {len(self._c)} terms)"
