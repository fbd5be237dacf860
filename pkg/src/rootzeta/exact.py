"""Exact rationals, Bernoulli numbers and the ring of zeta-value expressions.

Closed forms are elements of the commutative ring generated over Q by pi and
a fixed set of zeta symbols (odd Riemann zeta values, double and triple
Euler-Zagier values, and their B-type "sharp" analogues).  Even Riemann zeta
values never appear as symbols: they are rewritten as rational multiples of
pi powers when constructed.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

from .bigfloat import BigFloat

__all__ = [
    "bernoulli",
    "bernoulli_poly",
    "ZetaGenerator",
    "ZetaMonomial",
    "ZetaExpression",
    "MissingValuationError",
    "odd_zeta",
    "ez2",
    "ez2s",
    "ez3",
    "ez3s",
    "zeta",
    "zeta_even",
    "phi_even",
    "pi_power",
    "expr_numeric",
]

_bern_cache: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from sum_{k<=n} C(n+1, k) B_k = 0."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if n < len(_bern_cache):
        return _bern_cache[n]
    with _bern_lock:
        for m in range(len(_bern_cache), n + 1):
            if m > 1 and m % 2 == 1:
                _bern_cache.append(Fraction(0))
                continue
            s = sum(comb(m + 1, k) * _bern_cache[k] for k in range(m))
            _bern_cache.append(-s / (m + 1))
    return _bern_cache[n]


def bernoulli_poly(n: int, x: Fraction) -> Fraction:
    """Bernoulli polynomial B_n(x) at a rational point."""
    x = Fraction(x)
    return sum((comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1)), Fraction(0))


# -- generators -------------------------------------------------------------

_TAGS = ("zeta", "ez2", "ez2s", "ez3", "ez3s")
_ARITY = (1, 2, 2, 3, 3)


@dataclass(frozen=True, order=True)
class ZetaGenerator:
    """A zeta symbol; ordering is lexicographic on (tag, args)."""

    tag: int
    args: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.tag < len(_TAGS):
            raise ValueError(f"unknown generator tag {self.tag}")
        if len(self.args) != _ARITY[self.tag]:
            raise ValueError(f"{_TAGS[self.tag]} takes {_ARITY[self.tag]} arguments")
        if any(not isinstance(a, int) or a < 1 for a in self.args):
            raise ValueError(f"arguments must be positive integers: {self.args}")
        if self.args[-1] < 2:
            raise ValueError(f"divergent symbol {self.name}: last argument must be >= 2")
        if self.tag == 0 and self.args[0] % 2 == 0:
            raise ValueError("even Riemann zeta values are pi powers, not generators")

    @property
    def kind(self) -> str:
        return _TAGS[self.tag]

    @property
    def depth(self) -> int:
        return len(self.args)

    @property
    def weight(self) -> int:
        return sum(self.args)

    @property
    def name(self) -> str:
        return f"{_TAGS[self.tag]}({','.join(map(str, self.args))})"

    def __repr__(self):
        return self.name


def odd_zeta(n: int) -> ZetaGenerator:
    return ZetaGenerator(0, (n,))


def _gen(tag: int, args: Iterable[int]) -> ZetaGenerator:
    return ZetaGenerator(tag, tuple(int(a) for a in args))


@dataclass(frozen=True, order=True)
class ZetaMonomial:
    pi_power: int
    factors: tuple[ZetaGenerator, ...] = ()

    def __post_init__(self):
        if self.pi_power < 0:
            raise ValueError("negative pi power")
        if list(self.factors) != sorted(self.factors):
            object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    def __mul__(self, other: "ZetaMonomial") -> "ZetaMonomial":
        return ZetaMonomial(self.pi_power + other.pi_power, tuple(sorted(self.factors + other.factors)))

    @property
    def weight(self) -> int:
        return self.pi_power + sum(g.weight for g in self.factors)

    def is_one(self) -> bool:
        return self.pi_power == 0 and not self.factors

    def to_text(self) -> str:
        parts = []
        if self.pi_power:
            parts.append(f"pi^{self.pi_power}")
        i = 0
        while i < len(self.factors):
            g = self.factors[i]
            j = i
            while j < len(self.factors) and self.factors[j] == g:
                j += 1
            parts.append(g.name if j - i == 1 else f"{g.name}^{j - i}")
            i = j
        return "*".join(parts)


_ONE = ZetaMonomial(0)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ZetaExpression:
    """A finite Q-linear combination of monomials; immutable and canonical."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ZetaMonomial, Fraction] | None = None):
        clean: dict[ZetaMonomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
        self._terms = {m: clean[m] for m in sorted(clean) if clean[m]}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c) -> "ZetaExpression":
        return cls({_ONE: Fraction(c)})

    @classmethod
    def monomial(cls, m: ZetaMonomial, c=1) -> "ZetaExpression":
        return cls({m: Fraction(c)})

    @classmethod
    def of(cls, g: ZetaGenerator, c=1) -> "ZetaExpression":
        return cls({ZetaMonomial(0, (g,)): Fraction(c)})

    @property
    def terms(self) -> Mapping[ZetaMonomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: ZetaMonomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def generators(self) -> set[ZetaGenerator]:
        return {g for m in self._terms for g in m.factors}

    def is_zero(self) -> bool:
        return not self._terms

    def as_pi_multiple(self) -> tuple[Fraction, int]:
        """Return (c, k) when the expression is c * pi^k, else raise ValueError."""
        if not self._terms:
            return Fraction(0), 0
        if len(self._terms) != 1:
            raise ValueError(f"not a single pi power: {self}")
        (m, c), = self._terms.items()
        if m.factors:
            raise ValueError(f"not a pure pi power: {self}")
        return c, m.pi_power

    # ring operations
    def __add__(self, other):
        other = _as_expr(other)
        if other is NotImplemented:
            return other
        t = dict(self._terms)
        for m, c in other._terms.items():
            t[m] = t.get(m, Fraction(0)) + c
        return ZetaExpression(t)

    __radd__ = __add__

    def __neg__(self):
        return ZetaExpression({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_expr(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_expr(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _as_expr(other)
        if other is NotImplemented:
            return other
        t: dict[ZetaMonomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                t[m] = t.get(m, Fraction(0)) + c1 * c2
        return ZetaExpression(t)

    __rmul__ = __mul__

    def scale(self, q) -> "ZetaExpression":
        q = Fraction(q)
        return ZetaExpression({m: c * q for m, c in self._terms.items()})

    def __truediv__(self, q):
        if not isinstance(q, (int, Fraction)):
            return NotImplemented
        return self.scale(1 / Fraction(q))

    def __pow__(self, n: int):
        out = ZetaExpression.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_expr(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # text form
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self._terms.items()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m.is_one():
                body = _fmt_q(a)
            elif a == 1:
                body = m.to_text()
            else:
                body = f"{_fmt_q(a)}*{m.to_text()}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    __str__ = to_text

    def __repr__(self):
        return f"ZetaExpression({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str) -> "ZetaExpression":
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        terms: dict[ZetaMonomial, Fraction] = {}
        for match in _TERM_RE.finditer(s):
            if match.start() != pos:
                raise ValueError(f"cannot parse {text!r} near offset {pos}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff = Fraction(sign)
            pi = 0
            gens: list[ZetaGenerator] = []
            for f in match.group(2).split("*"):
                fm = _FACTOR_RE.fullmatch(f)
                if fm is None:
                    raise ValueError(f"bad factor {f!r} in {text!r}")
                if fm.group("num") is not None:
                    coeff *= Fraction(fm.group("num"))
                elif fm.group("pi") is not None:
                    pi += int(fm.group("pi"))
                else:
                    name = fm.group("name")
                    if name not in _TAGS:
                        raise ValueError(f"unknown generator {name!r}")
                    g = _gen(_TAGS.index(name), fm.group("args").split(","))
                    gens.extend([g] * int(fm.group("exp") or 1))
            m = ZetaMonomial(pi, tuple(sorted(gens)))
            terms[m] = terms.get(m, Fraction(0)) + coeff
        if pos != len(s):
            raise ValueError(f"trailing garbage in {text!r}")
        return cls(terms)


_TERM_RE = re.compile(r"([+-])([^+-]+)")
_FACTOR_RE = re.compile(
    r"(?P<num>\d+(?:/\d+)?)|pi\^(?P<pi>\d+)|(?P<name>[a-z0-9]+?)\((?P<args>\d+(?:,\d+)*)\)(?:\^(?P<exp>\d+))?"
)


def _as_expr(x):
    if isinstance(x, ZetaExpression):
        return x
    if isinstance(x, (int, Fraction)):
        return ZetaExpression.const(x)
    if isinstance(x, ZetaGenerator):
        return ZetaExpression.of(x)
    return NotImplemented


# -- named values -----------------------------------------------------------

def pi_power(k: int, c=1) -> ZetaExpression:
    return ZetaExpression.monomial(ZetaMonomial(k), c)


def zeta_even(m: int) -> ZetaExpression:
    """zeta(m) for even m >= 0 as a rational multiple of pi^m; zeta(0) = -1/2."""
    if m < 0 or m % 2:
        raise ValueError(f"zeta_even needs an even non-negative argument, got {m}")
    if m == 0:
        return ZetaExpression.const(Fraction(-1, 2))
    # zeta(2k) = -B_{2k} (2 pi i)^{2k} / (2 (2k)!), i^{2k} = (-1)^k
    k = m // 2
    c = -bernoulli(m) * (-1) ** k * 2**m / (2 * factorial(m))
    return pi_power(m, c)


def phi_even(m: int) -> ZetaExpression:
    """Alternating zeta sum_{n>=1} (-1)^n n^{-m} = (2^{1-m} - 1) zeta(m), m even."""
    if m < 0 or m % 2:
        raise ValueError(f"phi_even needs an even non-negative argument, got {m}")
    return zeta_even(m).scale(Fraction(2) ** (1 - m) - 1)


def zeta(n: int) -> ZetaExpression:
    """Riemann zeta(n) for n = 0 or n >= 2 in canonical form."""
    if n == 1 or n < 0:
        raise ValueError(f"zeta({n}) is not available in closed form")
    if n % 2 == 0:
        return zeta_even(n)
    return ZetaExpression.of(odd_zeta(n))


def ez2(a: int, b: int) -> ZetaExpression:
    return ZetaExpression.of(_gen(1, (a, b)))


def ez2s(a: int, b: int) -> ZetaExpression:
    return ZetaExpression.of(_gen(2, (a, b)))


def ez3(a: int, b: int, c: int) -> ZetaExpression:
    return ZetaExpression.of(_gen(3, (a, b, c)))


def ez3s(a: int, b: int, c: int) -> ZetaExpression:
    return ZetaExpression.of(_gen(4, (a, b, c)))


# -- numerics ---------------------------------------------------------------

class MissingValuationError(KeyError):
    def __init__(self, generator: ZetaGenerator):
        super().__init__(f"no numeric value supplied for {generator.name}")
        self.generator = generator


def expr_numeric(
    e: ZetaExpression, valuation: Mapping[ZetaGenerator, BigFloat], pi_value: BigFloat
) -> BigFloat:
    """Evaluate e as a ball, given balls for pi and every generator it contains."""
    for g in e.generators():
        if g not in valuation:
            raise MissingValuationError(g)
    total = BigFloat.exact(0)
    pi_pows: dict[int, BigFloat] = {}
    for m, c in e.items():
        if m.pi_power not in pi_pows:
            pi_pows[m.pi_power] = pi_value ** m.pi_power
        term = pi_pows[m.pi_power]
        for g in m.factors:
            term = term * valuation[g]
        total = total + term * BigFloat.exact(c)
    return total
