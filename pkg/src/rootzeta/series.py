"""High-precision evaluation of zeta, multiple zeta and sharp values with error bounds.

Every value is a nested sum over an increasing chain n_1 < ... < n_r where
n_k runs through an arithmetic progression P_k with a common step h (1, or 2
for parity-restricted chains).  With T_k(x) = sum_{m in P_k, m < x} g_k(m),
g_k(m) = m^{-s_k} T_{k-1}(m), the partial sums are computed directly up to a
cutoff M.  Beyond M, T_k is replaced by an asymptotic expansion

    E_k(x) = C_k + G_k(x),   G_k(x) = sum c_{a,l} x^{-a} (log x)^l,

where G_k is the Euler-Maclaurin primitive of x^{-s_k} E_{k-1}(x) on the grid
of P_k (offset-aware, via Bernoulli polynomials) and C_k is matched to the
direct partial sum at the first grid point past M.  The value is C_r.

Error model: for grid points x >= M the level-k discrepancy |T_k - E_k| is
bounded by D_k * sqrt(x / M).  D_k collects the Euler-Maclaurin remainder,
the dropped high-order terms, a rounding allowance and the propagated D_{k-1}.
Arithmetic runs with 64 guard bits above ``precision_bits``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from .bigfloat import BigFloat, pi_value
from .exact import bernoulli, bernoulli_poly

__all__ = [
    "EvalConfig",
    "AccuracyError",
    "ReconstructionError",
    "riemann_zeta",
    "ez_mzv",
    "sharp_mzv",
    "phi2",
    "t_value",
    "rational_reconstruct",
    "pi_power_coefficient",
    "to_fraction",
]

GUARD_BITS = 64


class AccuracyError(ArithmeticError):
    """The certified error bound misses the requested accuracy."""

    def __init__(self, message: str, achieved: BigFloat | None = None):
        super().__init__(message)
        self.achieved = achieved


class ReconstructionError(ArithmeticError):
    """No unique rational with bounded denominator fits the interval."""


@dataclass(frozen=True)
class EvalConfig:
    precision_bits: int = 256
    cutoff: int = 2000
    em_order: int = 24
    target_digits: int | None = None

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")
        if self.cutoff < 16:
            raise ValueError("cutoff must be >= 16")
        if self.em_order < 2:
            raise ValueError("em_order must be >= 2")

    @classmethod
    def for_depth(cls, depth: int, **overrides) -> "EvalConfig":
        base = cls(cutoff=400, target_digits=20) if depth >= 4 else cls(target_digits=40)
        return replace(base, **overrides)

    def digits_for(self, depth: int) -> int:
        if self.target_digits is not None:
            return self.target_digits
        return 20 if depth >= 4 else 40

    def workprec(self):
        """Context manager putting mpmath at the working precision of this config."""
        return mpmath.workprec(self.precision_bits)


# ---------------------------------------------------------------- expansions
# An expansion is a dict {(a, l): c} meaning sum c * x^{-a} * log(x)^l.


def _add_into(dst: dict, key, c):
    v = dst.get(key, 0) + c
    if v:
        dst[key] = v
    else:
        dst.pop(key, None)


def _shift(e: dict, s: int) -> dict:
    return {(a + s, l): c for (a, l), c in e.items()}


def _deriv(e: dict) -> dict:
    out: dict = {}
    for (a, l), c in e.items():
        if a:
            _add_into(out, (a + 1, l), -a * c)
        if l:
            _add_into(out, (a + 1, l - 1), l * c)
    return out


def _integrate(e: dict) -> dict:
    out: dict = {}
    for (a, l), c in e.items():
        if a == 1:
            _add_into(out, (0, l + 1), c / (l + 1))
        elif a >= 2:
            # int x^{-a} L^l = -x^{1-a} sum_i l!/(l-i)! L^{l-i} / (a-1)^{i+1}
            fall = 1
            for i in range(l + 1):
                _add_into(out, (a - 1, l - i), -c * fall / mpf(a - 1) ** (i + 1))
                fall *= l - i
        else:
            raise ValueError("integrand does not decay")
    return out


def _evaluate(e: dict, x: mpf) -> mpf:
    lx = mpmath.log(x)
    inv = 1 / x
    return mpmath.fsum(c * inv**a * lx**l for (a, l), c in e.items())


def _sup(a: int, l: int, m: mpf) -> mpf:
    """sup over x >= m of x^{-a} log(x)^l (a >= 1, m > 1)."""
    lm = mpmath.log(m)
    if l == 0 or a * lm >= l:
        return m ** (-a) * lm**l
    return (mpf(l) / (a * mpmath.e)) ** l


def _tail_integral(a: int, l: int, m: mpf) -> mpf:
    """int_m^inf x^{-a} log(x)^l dx for a > 1."""
    lm = mpmath.log(m)
    total = mpf(0)
    fall = 1
    for i in range(l + 1):
        total += fall * lm ** (l - i) / mpf(a - 1) ** (i + 1)
        fall *= l - i
    return total * m ** (1 - a)


def _weight_sum(e: dict, m: mpf) -> mpf:
    return mpmath.fsum(abs(c) * _sup(a, l, m) for (a, l), c in e.items() if a >= 1)


@lru_cache(maxsize=None)
def _zeta_even_float(n: int, prec: int) -> mpf:
    with mpmath.workprec(prec):
        return +mpmath.zeta(n)


def _em_primitive(g: dict, h: int, theta: Fraction, p: int) -> dict:
    """Expansion of the offset Euler-Maclaurin primitive of g with step h and 2p correction terms."""
    out = {k: c / h for k, c in _integrate(g).items()}
    d = dict(g)
    for k in range(1, 2 * p + 1):
        b = bernoulli_poly(k, theta)
        if b:
            coef = mpf((-1) ** k * b.numerator) / (b.denominator * math.factorial(k)) * mpf(h) ** (k - 1)
            for key, c in d.items():
                _add_into(out, key, coef * c)
        d = _deriv(d)
    return out


@dataclass(frozen=True)
class _Level:
    s: int
    start: int  # first element of the progression, which is start + h*i (i >= 0)


def _nested_sum(levels: tuple[_Level, ...], h: int, cfg: EvalConfig) -> tuple[mpf, mpf]:
    """Value and error bound of sum over chains n_1 < ... < n_r with n_k in P_k of prod n_k^{-s_k}."""
    r = len(levels)
    M = cfg.cutoff
    p = cfg.em_order
    wp = mp.prec
    top = M + 2 * h + 1
    Mf = mpf(M)
    amax = int(math.ceil((cfg.precision_bits + 24) * math.log(2) / math.log(M))) + 2
    unit = mpf(2) ** (-wp)

    # direct cumulative partial sums T_k(n) for 1 <= n <= top
    prev = [mpf(1)] * (top + 1)  # T_0 == 1
    expansion: dict | None = None
    d_prev = mpf(0)
    value = mpf(0)
    err = mpf(0)
    for k, lev in enumerate(levels, start=1):
        cur = [mpf(0)] * (top + 1)
        acc = mpf(0)
        for n in range(1, top):
            cur[n] = acc
            if n >= lev.start and (n - lev.start) % h == 0:
                acc += prev[n] / mpf(n) ** lev.s
        cur[top] = acc
        L = lev.start + h * max(0, -((lev.start - M) // h))  # first point of P_k >= M
        if k < r:
            nxt = levels[k].start
            theta = Fraction((nxt - lev.start) % h, h) or Fraction(1)
        else:
            theta = Fraction(1)

        inner = {(0, 0): mpf(1)} if expansion is None else expansion
        g = _shift(inner, lev.s)
        G1 = _em_primitive(g, h, Fraction(1), p)
        Gt = G1 if theta == 1 else _em_primitive(g, h, theta, p)
        C = cur[L] - _evaluate(G1, mpf(L))

        kept = {key: c for key, c in Gt.items() if key[0] <= amax}
        dropped = {key: c for key, c in Gt.items() if key[0] > amax}
        trunc = _weight_sum(dropped, Mf)
        gd = g
        for _ in range(2 * p):
            gd = _deriv(gd)
        zeta2p = _zeta_even_float(2 * p, wp)
        rem = 2 * zeta2p / (2 * mpmath.pi) ** (2 * p) * mpf(h) ** (2 * p - 1) * mpmath.fsum(
            abs(c) * _tail_integral(a, l, Mf) for (a, l), c in gd.items()
        )
        scale = (1 + mpmath.log(top)) ** k
        rounding = unit * (8 * top * k * scale + 64 * (len(G1) + len(Gt) + 2) * (abs(C) + 1 + _weight_sum(G1, Mf)))
        if k == 1:
            carried = mpf(0)
        elif lev.s == 1:
            carried = d_prev * (2 / Mf + mpf(2) / h)
        else:
            carried = d_prev * (2 * Mf ** (-lev.s) + Mf ** (1 - lev.s) / (h * (lev.s - mpf(3) / 2)))
        d_cur = rem + trunc + rounding + carried

        expansion = dict(kept)
        _add_into(expansion, (0, 0), C)
        prev = cur
        d_prev = d_cur
        if k == r:
            if any(a == 0 and l > 0 for (a, l) in expansion):
                raise ValueError("divergent series")
            value = C
            err = d_cur
    return value, err


def _run(pieces, cfg: EvalConfig, depth: int, what: str) -> BigFloat:
    """Sum of sign * nested_sum over pieces; result rounded into the caller's precision."""
    with mpmath.workprec(cfg.precision_bits + GUARD_BITS):
        total = mpf(0)
        err = mpf(0)
        for sign, levels, h in pieces:
            v, e = _nested_sum(levels, h, cfg)
            total += sign * v
            err += e
    with mpmath.workprec(cfg.precision_bits):
        v = +total
        e = err + abs(v - total) + abs(v) * mpf(2) ** (1 - cfg.precision_bits)
        out = BigFloat(v, e)
        digits = cfg.digits_for(depth)
        if e > mpf(10) ** (-digits) * max(1, abs(v)):
            raise AccuracyError(f"{what}: certified bound {mpmath.nstr(e, 3)} misses {digits} digits", out)
        return out


def _check_index(s, max_depth: int, what: str) -> tuple[int, ...]:
    s = tuple(int(x) for x in s)
    if not 1 <= len(s) <= max_depth:
        raise ValueError(f"{what}: depth must be 1..{max_depth}, got {len(s)}")
    if any(x < 1 for x in s):
        raise ValueError(f"{what}: exponents must be >= 1")
    if s[-1] < 2:
        raise ValueError(f"{what}: last exponent must be >= 2 for convergence")
    return s


@lru_cache(maxsize=512)
def _riemann_cached(s: int, cfg: EvalConfig) -> BigFloat:
    return _run([(1, (_Level(s, 1),), 1)], cfg, 1, f"zeta({s})")


def riemann_zeta(s: int, cfg: EvalConfig | None = None) -> BigFloat:
    """zeta(s) for integer s >= 2 (memoized per config)."""
    if int(s) < 2:
        raise ValueError("riemann_zeta needs s >= 2")
    return _riemann_cached(int(s), cfg or EvalConfig())


@lru_cache(maxsize=2048)
def _ez_cached(s: tuple, cfg: EvalConfig) -> BigFloat:
    return _run([(1, tuple(_Level(x, 1) for x in s), 1)], cfg, len(s), f"zeta{s}")


def ez_mzv(s, cfg: EvalConfig | None = None) -> BigFloat:
    """zeta_r(s_1..s_r) = sum_{0<n_1<...<n_r} prod n_i^{-s_i}, depth <= 4."""
    s = _check_index(s, 4, "ez_mzv")
    return _ez_cached(s, cfg or EvalConfig.for_depth(len(s)))


@lru_cache(maxsize=2048)
def _sharp_cached(s: tuple, cfg: EvalConfig) -> BigFloat:
    pieces = [(1, tuple(_Level(x, start) for x in s), 2) for start in (1, 2)]
    return _run(pieces, cfg, len(s), f"zeta_sharp{s}")


def sharp_mzv(s, cfg: EvalConfig | None = None) -> BigFloat:
    """zeta_r^sharp(s): chains n_1 < ... < n_r whose consecutive gaps are even, depth <= 3."""
    s = _check_index(s, 3, "sharp_mzv")
    return _sharp_cached(s, cfg or EvalConfig.for_depth(len(s)))


def t_value(s: int, cfg: EvalConfig | None = None) -> BigFloat:
    """sum over odd n of n^{-s}."""
    if int(s) < 2:
        raise ValueError("t_value needs s >= 2")
    return _run([(1, (_Level(int(s), 1),), 2)], cfg or EvalConfig(), 1, f"t({s})")


def phi2(s1: int, s2: int, cfg: EvalConfig | None = None) -> BigFloat:
    """sum_{m,n>=1} (-1)^m n^{-s1} (m+n)^{-s2}, split by the parities of n and m+n."""
    s1, s2 = _check_index((s1, s2), 2, "phi2")
    pieces = []
    for inner in (1, 2):
        for outer in (1, 2):
            sign = 1 if inner == outer else -1
            pieces.append((sign, (_Level(s1, inner), _Level(s2, outer)), 2))
    return _run(pieces, cfg or EvalConfig(), 2, f"phi2({s1},{s2})")


# ------------------------------------------------------ rational reconstruction


def to_fraction(x: mpf) -> Fraction:
    """Exact rational value of a binary float."""
    x = mpmath.mpf(x)
    if not x:
        return Fraction(0)
    man, exp = x.man_exp
    man = int(man) * (-1 if x < 0 else 1) if man > 0 else int(man)
    return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2 ** (-exp))


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction with the smallest denominator in the closed interval [lo, hi]."""
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo, hi share integer part fl and both lie in (fl, fl+1)
    inner = _simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def _neighbours(a: Fraction, n: int) -> tuple[Fraction, Fraction]:
    """Left and right neighbours of a in the Farey sequence of order n (extended to all of Q)."""
    p, q = a.numerator, a.denominator
    if q == 1:
        return Fraction(p * n - 1, n), Fraction(p * n + 1, n)
    inv = pow(p, -1, q)
    # right: c q - p d = 1  ->  d = -inv mod q ; left: p d - c q = 1 -> d = inv mod q
    d_r = (-inv) % q
    d_r += ((n - d_r) // q) * q
    d_l = inv % q
    d_l += ((n - d_l) // q) * q
    return Fraction((p * d_l - 1) // q, d_l), Fraction((1 + p * d_r) // q, d_r)


def rational_reconstruct(x: BigFloat, q_max: int) -> Fraction:
    """The unique p/q with q <= q_max inside [x - err, x + err]."""
    c = to_fraction(x.value)
    e = to_fraction(x.err)
    lo, hi = c - e, c + e
    best = _simplest_between(lo, hi)
    if best.denominator > q_max:
        raise ReconstructionError(
            f"no fraction with denominator <= {q_max} within {mpmath.nstr(x.err, 3)} of {mpmath.nstr(x.value, 20)}"
        )
    left, right = _neighbours(best, q_max)
    if left >= lo or right <= hi:
        other = left if left >= lo else right
        raise ReconstructionError(
            f"ambiguous: {best} and {other} both fit; residual bound {mpmath.nstr(x.err, 3)} is too weak"
        )
    return best


def pi_power_coefficient(x: BigFloat, weight: int, q_max: int) -> Fraction:
    """Rational c with x = c * pi^weight."""
    with mpmath.workprec(max(mp.prec, 64)):
        y = x / (pi_value() ** int(weight))
    return rational_reconstruct(y, q_max)
