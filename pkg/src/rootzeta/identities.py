"""Closed-form theorems on double and triple zeta values and their sharp analogues.

Everything here returns exact :class:`ZetaExpression` values.  Relations that
are checked numerically return a :class:`RelationReport` whose residual is a
certified ball.  Throughout, zeta(0) = -1/2 inside theorem sums.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Mapping, Sequence

import mpmath

from .bigfloat import BigFloat, pi_value
from .exact import (
    ZetaExpression,
    ZetaGenerator,
    bernoulli,
    expr_numeric,
    ez2,
    ez2s,
    ez3,
    ez3s,
    phi_even,
    pi_power,
    zeta,
    zeta_even,
)
from .genfunc import p_coefficient
from .linalg import rref
from .roots import build_root_datum
from .series import EvalConfig, ez_mzv, riemann_zeta, sharp_mzv

__all__ = [
    "RelationReport",
    "ReductionError",
    "c_coefficient",
    "equal_arg_mzv",
    "volume_formula",
    "symmetric_sum",
    "compositions",
    "restricted_sum_terms",
    "restricted_sum",
    "shen_cai_rhs",
    "gkz_odd_sum",
    "double_parity_rhs",
    "double_relation",
    "reduce_double",
    "canonicalize_double",
    "euler_double_one",
    "even_weight_doubles",
    "triple_lhs",
    "triple_rhs",
    "triple_relation",
    "reduce_triple",
    "b2_parity_rhs",
    "b2_relation",
    "reduce_sharp_double",
    "b3_lhs",
    "b3_rhs",
    "b3_relation",
    "lemma_fold_exact",
    "lemma_fold",
    "evaluate",
    "numeric_valuation",
]

DEFAULT_RESIDUAL_DIGITS = 30


class ReductionError(ArithmeticError):
    """The available relations do not determine the requested value."""


@dataclass(frozen=True)
class RelationReport:
    label: str
    lhs: ZetaExpression
    rhs: ZetaExpression
    residual_numeric: BigFloat
    required_digits: int
    status: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_record(self) -> dict:
        return {
            "label": self.label,
            "lhs": self.lhs.to_text(),
            "rhs": self.rhs.to_text(),
            "residual": mpmath.nstr(self.residual_numeric.value, 5),
            "bound": mpmath.nstr(self.residual_numeric.err, 5),
            "required_digits": self.required_digits,
            "status": self.status,
        }


# ------------------------------------------------------------------ numerics


def numeric_valuation(gens, cfg: EvalConfig | None = None) -> dict[ZetaGenerator, BigFloat]:
    out = {}
    for g in sorted(gens):
        kind = g.kind
        if kind == "zeta":
            out[g] = riemann_zeta(g.args[0], cfg)
        elif kind in ("ez2", "ez3"):
            out[g] = ez_mzv(g.args, cfg)
        else:
            out[g] = sharp_mzv(g.args, cfg)
    return out


def evaluate(e: ZetaExpression, cfg: EvalConfig | None = None) -> BigFloat:
    """Numeric ball for an expression, evaluated at the config's precision."""
    cfg = cfg or EvalConfig()
    with mpmath.workprec(cfg.precision_bits):
        return expr_numeric(e, numeric_valuation(e.generators(), cfg), pi_value())


def _report(label: str, lhs: ZetaExpression, rhs: ZetaExpression, cfg: EvalConfig | None,
            digits: int) -> RelationReport:
    cfg = cfg or EvalConfig()
    with mpmath.workprec(cfg.precision_bits):
        res = evaluate(lhs, cfg) - evaluate(rhs, cfg)
        ok = abs(res.value) <= res.err and res.err <= mpmath.mpf(10) ** (-digits)
    return RelationReport(label, lhs, rhs, res, digits, "pass" if ok else "fail")


# ---------------------------------------------------------- volume formulas

_c_lock = threading.Lock()
_c_memo: dict[tuple[int, int], Fraction] = {}


def c_coefficient(n: int, k: int) -> Fraction:
    """C_n^{(k)}: C_0 = 1, C_n = (1/2n) sum_j (-1)^j binom(2nk, 2jk) B_{2jk} C_{n-j}."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if n == 0:
        return Fraction(1)
    with _c_lock:
        hit = _c_memo.get((n, k))
    if hit is not None:
        return hit
    total = sum(
        (-1) ** j * comb(2 * n * k, 2 * j * k) * bernoulli(2 * j * k) * c_coefficient(n - j, k) for j in range(1, n + 1)
    )
    val = Fraction(total) / (2 * n)
    with _c_lock:
        _c_memo.setdefault((n, k), val)
    return val


def _two_pi_i(w: int) -> Fraction:
    """Rational c with (2 pi i)^w = c pi^w, w even."""
    if w % 2:
        raise ValueError("odd power of 2 pi i is not real")
    return Fraction((-1) ** (w // 2) * 2**w)


def equal_arg_mzv(r: int, k: int) -> ZetaExpression:
    """zeta_r(2k, ..., 2k) through the C_r^{(k)} recursion."""
    if r < 1 or k < 1:
        raise ValueError("need r >= 1 and k >= 1")
    w = 2 * k * r
    return pi_power(w, c_coefficient(r, k) * _two_pi_i(w) / factorial(w))


def _datum(family: str, r: int):
    return _cached_datum(family.upper(), r)


@lru_cache(maxsize=None)
def _cached_datum(family: str, r: int):
    return build_root_datum(family, r)


def symmetric_sum(family: str, k: Sequence[int]) -> ZetaExpression:
    """sum over S_r of zeta_r (type C) or zeta_r^sharp (type B) at the permutations of k."""
    k = tuple(int(x) for x in k)
    if any(x < 2 or x % 2 for x in k):
        raise ValueError("symmetric_sum needs even entries >= 2")
    r = len(k)
    P = p_coefficient(_datum(family, r), None, k)
    c = Fraction((-1) ** r, 2**r) * P
    for kj in k:
        c *= _two_pi_i(kj) / factorial(kj)
    return pi_power(sum(k), c)


def volume_formula(family: str, r: int, k: int) -> ZetaExpression:
    """zeta_r(2k,...,2k) (type C) or zeta_r^sharp(2k,...,2k) (type B) from P."""
    return symmetric_sum(family, (2 * k,) * r).scale(Fraction(1, factorial(r)))


# ----------------------------------------------------------- restricted sums


def compositions(r: int):
    """All ordered tuples of positive integers summing to r."""
    if r == 0:
        yield ()
        return
    for first in range(1, r + 1):
        for rest in compositions(r - first):
            yield (first,) + rest


def _blocks(J: Sequence[int], N: int, lo: int = 1):
    # strictly increasing h_1 < ... < h_nu with sum j_mu h_mu = N
    if not J:
        if N == 0:
            yield ()
        return
    j, rest = J[0], J[1:]
    h = lo
    while j * h <= N:
        for tail in _blocks(rest, N - j * h, h + 1):
            yield (h,) + tail
        h += 1


def restricted_sum_terms(r: int, d: int, N: int):
    """(J, exponent tuple, weight 1/prod j!) for every J and element of A_r(d, N, J)."""
    out = []
    for J in compositions(r):
        weight = Fraction(1)
        for j in J:
            weight /= factorial(j)
        for hs in _blocks(J, N):
            tup = tuple(x for j, h in zip(J, hs) for x in [2 * d * h] * j)
            out.append((J, tup, weight))
    return out


def restricted_sum(family: str, r: int, d: int, N: int) -> ZetaExpression:
    """sum over a_1 + ... + a_r = N of zeta_r (or zeta_r^sharp) at (2d a_1, ..., 2d a_r)."""
    if N < r:
        raise ValueError("need N >= r")
    total = ZetaExpression()
    for _, tup, weight in restricted_sum_terms(r, d, N):
        total = total + symmetric_sum(family, tup).scale(weight)
    return total


def shen_cai_rhs(r: int, N: int) -> ZetaExpression:
    """Known closed forms of the d = 1 restricted sums for r = 2, 3, 4."""
    if r == 2:
        return zeta_even(2 * N).scale(Fraction(3, 4))
    if r == 3:
        return zeta_even(2 * N).scale(Fraction(5, 8)) - zeta_even(2) * zeta_even(2 * N - 2).scale(Fraction(1, 4))
    if r == 4:
        return zeta_even(2 * N).scale(Fraction(35, 64)) - zeta_even(2) * zeta_even(2 * N - 2).scale(Fraction(5, 16))
    raise ValueError("closed form only known for r = 2, 3, 4")


def gkz_odd_sum(N: int) -> ZetaExpression:
    """sum_{a+b=N} zeta_2(2a-1, 2b+1) = zeta(2N) - sum_{a+b=N} zeta_2(2a, 2b)."""
    if N < 2:
        raise ValueError("need N >= 2")
    return zeta_even(2 * N) - restricted_sum("C", 2, 1, N)


# --------------------------------------------------------- double relations


def _z(n: int) -> ZetaExpression:
    return zeta(n)


def double_parity_rhs(p: int, q: int) -> ZetaExpression:
    if p < 2 or q < 2:
        raise ValueError("need p, q >= 2")
    w = p + q
    out = ZetaExpression()
    for j in range(p // 2 + 1):
        out = out + (zeta_even(2 * j) * _z(w - 2 * j)).scale(2 * comb(w - 2 * j - 1, q - 1))
    for j in range(q // 2 + 1):
        out = out + (zeta_even(2 * j) * _z(w - 2 * j)).scale(2 * comb(w - 2 * j - 1, p - 1))
    return out - _z(w)


def _parity_lhs(sym: Callable[[int, int], ZetaExpression], p: int, q: int) -> ZetaExpression:
    return sym(p, q).scale(1 + (-1) ** p) + sym(q, p).scale(1 + (-1) ** q)


def double_relation(p: int, q: int, cfg: EvalConfig | None = None,
                    digits: int = DEFAULT_RESIDUAL_DIGITS) -> RelationReport:
    return _report(f"double({p},{q})", _parity_lhs(ez2, p, q), double_parity_rhs(p, q), cfg, digits)


def _harmonic2(p: int, q: int) -> ZetaExpression:
    """zeta(p) zeta(q) - zeta(p+q), which equals zeta_2(p,q) + zeta_2(q,p)."""
    return _z(p) * _z(q) - _z(p + q)


@lru_cache(maxsize=None)
def reduce_double(p: int, q: int) -> ZetaExpression:
    """zeta_2(p, q) for odd p + q in terms of zeta values."""
    if q < 2 or p < 1:
        raise ValueError("need p >= 1 and q >= 2")
    if (p + q) % 2 == 0:
        raise ValueError("no parity reduction for even weight")
    if p == 1:
        # sum formula: sum_{j=2}^{K-1} zeta_2(K-j, j) = zeta(K), K = q + 1
        K = q + 1
        out = _z(K)
        for j in range(2, K - 1):
            out = out - reduce_double(K - j, j)
        return out
    if p % 2 == 0:
        return double_parity_rhs(p, q).scale(Fraction(1, 2))
    # p odd, q even: the relation isolates zeta_2(q, p); the harmonic product gives the rest
    return _harmonic2(p, q) - double_parity_rhs(p, q).scale(Fraction(1, 2))


def canonicalize_double(e: ZetaExpression) -> ZetaExpression:
    """Rewrite double zeta symbols into a normal form inside the algebra X.

    Odd weight symbols are reduced to zeta values.  Even weight symbols are
    eliminated, as far as the relations allow, using the harmonic and
    shuffle products, the sum formula and Euler's zeta_2(1, q); see
    :func:`even_weight_doubles`.
    """
    out = ZetaExpression()
    for mono, c in e.items():
        term = pi_power(mono.pi_power, c)
        for g in mono.factors:
            term = term * _canon_gen(g)
        out = out + term
    return out


def euler_double_one(q: int) -> ZetaExpression:
    """zeta_2(1, q) = (q/2) zeta(q+1) - (1/2) sum_{k=1}^{q-2} zeta(k+1) zeta(q-k)."""
    if q < 2:
        raise ValueError("need q >= 2")
    out = _z(q + 1).scale(Fraction(q, 2))
    for k in range(1, q - 1):
        out = out - (_z(k + 1) * _z(q - k)).scale(Fraction(1, 2))
    return out


def _elimination_rank(pq: tuple[int, int]) -> tuple:
    # columns earlier in this order are eliminated first; zeta_2(p, q) with p < q tends to stay free
    p, q = pq
    if p == 1:
        return (0, p)
    if p == q:
        return (1, p)
    if p > q:
        return (2, -p)
    return (3, -p)


@lru_cache(maxsize=None)
def even_weight_doubles(w: int) -> dict[tuple[int, int], ZetaExpression]:
    """Normal form of every zeta_2(p, w - p), 1 <= p <= w - 2, for even w.

    Exact elimination over the harmonic and shuffle products, the sum
    formula and Euler's zeta_2(1, q); symbols left undetermined map to
    themselves.
    """
    if w % 2 or w < 4:
        raise ValueError("need an even weight >= 4")
    unknowns = sorted(((p, w - p) for p in range(1, w - 1)), key=_elimination_rank)
    col = {u: i for i, u in enumerate(unknowns)}
    rows, rhs = [], []

    def eq(coeffs: Mapping[tuple[int, int], Fraction], r: ZetaExpression):
        row = [Fraction(0)] * len(unknowns)
        for k, v in coeffs.items():
            row[col[k]] += v
        rows.append(row)
        rhs.append(r)

    eq({(1, w - 1): Fraction(1)}, euler_double_one(w - 1))
    eq({u: Fraction(1) for u in unknowns}, _z(w))
    for p in range(2, w // 2 + 1):
        q = w - p
        eq({(p, q): Fraction(1), (q, p): Fraction(1)}, _z(p) * _z(q) - _z(w))
        # shuffle product: zeta(p) zeta(q) = sum_j [C(j-1, p-1) + C(j-1, q-1)] zeta_2(w-j, j)
        eq({(w - j, j): Fraction(comb(j - 1, p - 1) + comb(j - 1, q - 1)) for j in range(2, w)}, _z(p) * _z(q))
    red, vals, piv = rref(rows, rhs)
    out = {}
    for u in unknowns:
        j = col[u]
        if j in piv:
            i = piv.index(j)
            expr = vals[i]
            for k, c in enumerate(red[i]):
                if k != j and c:
                    expr = expr - ez2(*unknowns[k]).scale(c)
            out[u] = expr
        else:
            out[u] = ez2(*u)
    return out


def _canon_gen(g: ZetaGenerator) -> ZetaExpression:
    if g.kind != "ez2":
        return ZetaExpression.of(g)
    p, q = g.args
    if (p + q) % 2:
        return reduce_double(p, q)
    return even_weight_doubles(p + q)[(p, q)]


# --------------------------------------------------------- triple relations


def _triple_lhs(sym3, a: int, b: int, c: int) -> ZetaExpression:
    return (
        sym3(a, b, c).scale(1 + (-1) ** a)
        + (sym3(b, a, c) + sym3(b, c, a)).scale(1 + (-1) ** b)
        + sym3(c, b, a).scale((-1) ** b * (1 + (-1) ** c))
    )


def _triple_core(a: int, b: int, c: int, weight: Callable[[int], Fraction], sym2) -> ZetaExpression:
    sb = (-1) ** b
    out = ZetaExpression()
    for xi in range(a // 2 + 1):
        z = zeta_even(2 * xi).scale(weight(xi))
        for om in range(a - 2 * xi + 1):
            k = comb(om + b - 1, om) * comb(a + c - 2 * xi - om - 1, c - 1)
            out = out + (z * sym2(b + om, a + c - 2 * xi - om)).scale(k)
    for xi in range(b // 2 + 1):
        z = zeta_even(2 * xi).scale(weight(xi))
        for om in range(a):
            k = comb(om + b - 2 * xi, om) * comb(a + c - om - 2, c - 1)
            out = out + (z * sym2(b - 2 * xi + om + 1, a + c - 1 - om)).scale(k)
    for xi in range(c // 2 + 1):
        z = zeta_even(2 * xi).scale(weight(xi) * sb)
        for om in range(c - 2 * xi + 1):
            k = comb(om + b - 1, om) * comb(a + c - 2 * xi - om - 1, a - 1)
            out = out + (z * sym2(b + om, a + c - 2 * xi - om)).scale(k)
    for xi in range(b // 2 + 1):
        z = zeta_even(2 * xi).scale(weight(xi) * sb)
        for om in range(c):
            k = comb(om + b - 2 * xi, om) * comb(a + c - om - 2, a - 1)
            out = out + (z * sym2(b - 2 * xi + om + 1, a + c - 1 - om)).scale(k)
    return out


def _check_triple(a, b, c):
    if min(a, b, c) < 2:
        raise ValueError("need a, b, c >= 2")


def triple_lhs(a: int, b: int, c: int) -> ZetaExpression:
    _check_triple(a, b, c)
    return _triple_lhs(ez3, a, b, c)


def triple_rhs(a: int, b: int, c: int) -> ZetaExpression:
    _check_triple(a, b, c)
    sb = (-1) ** b
    core = _triple_core(a, b, c, lambda xi: Fraction(2), ez2)
    return core - ez2(a + b, c) - ez2(b, a + c).scale(1 + sb) - ez2(b + c, a).scale(sb)


def triple_relation(a: int, b: int, c: int, cfg: EvalConfig | None = None,
                    digits: int = DEFAULT_RESIDUAL_DIGITS) -> RelationReport:
    return _report(f"triple({a},{b},{c})", triple_lhs(a, b, c), triple_rhs(a, b, c), cfg, digits)


def _harmonic3(a: int, b: int, c: int) -> ZetaExpression:
    """zeta(a) zeta_2(b,c) - zeta_2(b,c+a) - zeta_2(a+b,c) (sum of three triple values)."""
    return _z(a) * ez2(b, c) - ez2(b, c + a) - ez2(a + b, c)


def _triple_equations(target: tuple[int, int, int]):
    """Ordered candidate equations (coefficient map over triple symbols, right side)."""
    rev = target[::-1]
    perms = sorted(set(itertools.permutations(target)))
    order = [rev, target] + [p for p in perms if p not in (rev, target)]
    eqs = []
    seen = set()
    for x in order:
        for kind in ("thm", "harm"):
            if (kind, x) in seen:
                continue
            seen.add((kind, x))
            a, b, c = x
            if kind == "thm":
                lhs, rhs = triple_lhs(a, b, c), triple_rhs(a, b, c)
            else:
                lhs = ez3(a, b, c) + ez3(b, a, c) + ez3(b, c, a)
                rhs = _harmonic3(a, b, c)
            coeffs = {}
            for mono, co in lhs.items():
                (g,) = mono.factors
                coeffs[g.args] = coeffs.get(g.args, Fraction(0)) + co
            coeffs = {k: v for k, v in coeffs.items() if v}
            if coeffs:
                eqs.append((coeffs, rhs))
    return eqs


@lru_cache(maxsize=None)
def reduce_triple(a: int, b: int, c: int) -> ZetaExpression:
    """zeta_3(a, b, c) for even a + b + c in the algebra X, by exact elimination.

    Candidate equations are the theorem and the harmonic product at every
    permutation of (a, b, c), tried in a fixed order; the first (smallest)
    subset whose echelon form pins down the target is used.
    """
    _check_triple(a, b, c)
    if (a + b + c) % 2:
        raise ValueError("no parity reduction for odd weight")
    target = (a, b, c)
    unknowns = sorted(set(itertools.permutations(target)))
    col = {u: i for i, u in enumerate(unknowns)}
    t = col[target]
    eqs = _triple_equations(target)
    last_free = None
    for size in range(1, len(eqs) + 1):
        for subset in itertools.combinations(range(len(eqs)), size):
            rows = []
            rhs = []
            for i in subset:
                coeffs, r = eqs[i]
                row = [Fraction(0)] * len(unknowns)
                for k, v in coeffs.items():
                    row[col[k]] = v
                rows.append(row)
                rhs.append(r)
            red, b_, piv = rref(rows, rhs)
            if t not in piv:
                continue
            i = piv.index(t)
            free = [j for j in range(len(unknowns)) if j not in piv]
            if any(red[i][j] for j in free):
                last_free = [unknowns[j] for j in free]
                continue
            return b_[i]
    raise ReductionError(f"zeta_3{target} is not determined; undetermined symbols {last_free}")


# ------------------------------------------------------------ type B relations


def b2_parity_rhs(p: int, q: int) -> ZetaExpression:
    if p < 2 or q < 2:
        raise ValueError("need p, q >= 2")
    w = p + q
    out = ZetaExpression()
    for j in range(p // 2 + 1):
        k = Fraction(2 * comb(w - 1 - 2 * j, q - 1), 2 ** (w - 2 * j))
        out = out + (zeta_even(2 * j) * _z(w - 2 * j)).scale(k)
    for j in range(q // 2 + 1):
        k = Fraction(2 * comb(w - 1 - 2 * j, p - 1), 2 ** (w - 2 * j))
        out = out + (zeta_even(2 * j) * _z(w - 2 * j)).scale(k)
    return out - _z(w)


def b2_relation(p: int, q: int, cfg: EvalConfig | None = None,
                digits: int = DEFAULT_RESIDUAL_DIGITS) -> RelationReport:
    return _report(f"b2({p},{q})", _parity_lhs(ez2s, p, q), b2_parity_rhs(p, q), cfg, digits)


def _odd_part(s: int) -> ZetaExpression:
    """sum over odd n of n^{-s} = (1 - 2^{-s}) zeta(s)."""
    return _z(s).scale(1 - Fraction(1, 2**s))


@lru_cache(maxsize=None)
def reduce_sharp_double(p: int, q: int) -> ZetaExpression:
    """zeta_2^sharp(p, q) for odd p + q (p, q >= 2) in terms of zeta values."""
    if p < 2 or q < 2:
        raise ValueError("need p, q >= 2")
    if (p + q) % 2 == 0:
        raise ValueError("no parity reduction for even weight")
    if p % 2 == 0:
        return b2_parity_rhs(p, q).scale(Fraction(1, 2))
    # p odd: the theorem gives zeta^sharp(q, p); chains of equal parity give the sum of both orders
    both = _odd_part(p) * _odd_part(q) + (_z(p) * _z(q)).scale(Fraction(1, 2 ** (p + q))) - _z(p + q)
    return both - b2_parity_rhs(p, q).scale(Fraction(1, 2))


def b3_lhs(a: int, b: int, c: int) -> ZetaExpression:
    _check_triple(a, b, c)
    return _triple_lhs(ez3s, a, b, c)


def b3_rhs(a: int, b: int, c: int) -> ZetaExpression:
    _check_triple(a, b, c)
    sb = (-1) ** b
    # zeta(2 xi) carries 4^xi, as in the depth-2 type B weights 2^{2j-p-q}; 2^xi fails numerically
    core = _triple_core(a, b, c, lambda xi: Fraction(4**xi), ez2)
    core = core.scale(Fraction(2, 2 ** (a + b + c)))
    return core - ez2s(a + b, c) - ez2s(b, a + c).scale(1 + sb) - ez2s(b + c, a).scale(sb)


def b3_relation(a: int, b: int, c: int, cfg: EvalConfig | None = None,
                digits: int = DEFAULT_RESIDUAL_DIGITS) -> RelationReport:
    return _report(f"b3({a},{b},{c})", b3_lhs(a, b, c), b3_rhs(a, b, c), cfg, digits)


# ------------------------------------------------------------ folding lemma


def lemma_fold_exact(f: Sequence, d: int) -> tuple[tuple[ZetaExpression, ZetaExpression],
                                                   tuple[ZetaExpression, ZetaExpression]]:
    """Both sides of the folding lemma as (real, imaginary) pairs of pi-power expressions.

    f is indexed 0..d.  The left side is sum_k phi(d-k) eps_{d-k} sum_nu f(k-nu) (i pi)^nu / nu!,
    the right side -(i pi / 2) f(d-1) + sum_xi zeta(2 xi) f(d - 2 xi).
    """
    if d < 1:
        raise ValueError("need d >= 1")
    f = [Fraction(x) for x in f]
    if len(f) < d + 1:
        raise ValueError("f must have entries 0..d")
    re_l, im_l = ZetaExpression(), ZetaExpression()
    for k in range(d + 1):
        if (d - k) % 2:
            continue
        ph = phi_even(d - k)
        for nu in range(k + 1):
            # (i pi)^nu = i^nu pi^nu
            term = ph * pi_power(nu, f[k - nu] / factorial(nu))
            unit = nu % 4
            if unit == 0:
                re_l = re_l + term
            elif unit == 1:
                im_l = im_l + term
            elif unit == 2:
                re_l = re_l - term
            else:
                im_l = im_l - term
    re_r = ZetaExpression()
    for xi in range(d // 2 + 1):
        re_r = re_r + zeta_even(2 * xi).scale(f[d - 2 * xi])
    im_r = pi_power(1, -f[d - 1] / 2)
    return (re_l, im_l), (re_r, im_r)


def lemma_fold(f: Sequence, d: int, precision_bits: int = 256):
    """Numeric complex balls ((re, im) of the left side, (re, im) of the right side)."""
    (a, b), (c, e) = lemma_fold_exact(f, d)
    with mpmath.workprec(precision_bits):
        pv = pi_value()
        ev = [expr_numeric(x, {}, pv) for x in (a, b, c, e)]
    return (ev[0], ev[1]), (ev[2], ev[3])
