"""Exact Taylor expansion of the restricted generating function F_{Delta*}.

For each basis V kept by the A-filter the summand is

    sign_V * prod_{gamma in Delta* \\ V} t_gamma / L_{V,gamma}
           * (1/idx_V) sum_q prod_{beta in V cap Delta*} t_beta e^{t_beta x} / (e^{t_beta} - 1)

with L_{V,gamma} a linear form in the Delta* variables.  Every L is a
rational multiple of a primitive integer form; D is the product of the
distinct primitive forms (with the largest multiplicity seen in one term).
The degree-n part H_n of F satisfies

    D * H_n = sum_V cof_V * Bern_V^{(n)},

where cof_V is a fixed polynomial of degree deg D and Bern_V^{(n)} is the
degree-n part of the Bernoulli product.  H_n is recovered by exact division
by each factor of D; a nonzero remainder would contradict holomorphy and
raises :class:`HolomorphyError`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from gmpy2 import mpq

from .exact import bernoulli_poly
from .mseries import HolomorphyError, LinearForm, MultiSeries, pack, poly_div_linear, poly_mul, unpack
from .roots import RootDatum, build_root_datum, filter_bases_for_A, fractional_shift

__all__ = [
    "HolomorphyError",
    "GeneratingFunction",
    "generating_function_Fstar",
    "p_coefficient",
    "p_coefficient_numeric_fallback",
    "get_generating_function",
]


def _q(x: Fraction) -> mpq:
    return mpq(x.numerator, x.denominator)


def _frac(x: mpq) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class _Term:
    bern_slots: tuple[int, ...]
    shifts: tuple[tuple[Fraction, ...], ...]  # one tuple per coset rep, aligned with bern_slots
    cofactor: dict  # packed poly, degree = deg D


class GeneratingFunction:
    """F_{Delta*}(t, y) for one root datum, root set, y and direction phi.

    Homogeneous parts are computed on demand and memoized; the memo is
    guarded by a lock so one instance can be shared between threads.
    """

    def __init__(self, datum: RootDatum, kind: str | None = None, y=None, order: Sequence[int] | None = None, phi=None):
        self.datum = datum
        r = datum.rank
        self.delta_star = datum.delta_star(kind)
        self.y = tuple(Fraction(v) for v in (y if y is not None else [0] * r))
        if len(self.y) != r:
            raise ValueError("y has the wrong dimension")
        self.phi = tuple(Fraction(v) for v in phi) if phi is not None else datum.phi
        A = list(order) if order is not None else list(datum.complement(self.delta_star))
        if sorted(A) != sorted(datum.complement(self.delta_star)):
            raise ValueError("order must be a permutation of the complement of Delta*")
        self.order = tuple(A)
        self.bases = filter_bases_for_A(datum, datum.bases, A)
        self.variables = tuple(f"t{i + 1}" for i in range(r))
        self._slot = {root: i for i, root in enumerate(self.delta_star)}
        self._build_terms()
        self._cache: dict[int, dict] = {}
        self._lock = threading.Lock()

    def _build_terms(self):
        r = self.datum.rank
        raw = []
        maxmult: dict[LinearForm, int] = {}
        for V in self.bases:
            members = set(V.roots)
            S = [b for b in self.delta_star if b in members]
            G = [g for g in self.delta_star if g not in members]
            sign = Fraction((-1) ** sum(1 for a in self.order if a not in members), V.lattice_index)
            forms = []
            scale = Fraction(1)
            for g in G:
                gv = self.datum.positive_coroots[g]
                coeffs = [Fraction(0)] * r
                coeffs[self._slot[g]] += 1
                for b in S:
                    coeffs[self._slot[b]] -= V.pairing(gv, b)
                kappa, prim = LinearForm(tuple(coeffs)).normalized()
                scale *= kappa
                forms.append(prim)
            mult: dict[LinearForm, int] = {}
            for f in forms:
                mult[f] = mult.get(f, 0) + 1
            for f, m in mult.items():
                maxmult[f] = max(maxmult.get(f, 0), m)
            shifts = tuple(
                tuple(fractional_shift(self.datum, V, b, self.y, q, self.phi) for b in S) for q in V.coset_reps_q
            )
            mono = pack([1 if i in {self._slot[g] for g in G} else 0 for i in range(r)])
            raw.append((tuple(self._slot[b] for b in S), shifts, sign / scale, mono, mult))
        self.denominator = tuple(f for f in sorted(maxmult, key=lambda f: f.coefficients) for _ in range(maxmult[f]))
        terms = []
        for slots, shifts, coef, mono, mult in raw:
            poly = {mono: _q(coef)}
            for f in sorted(maxmult, key=lambda f: f.coefficients):
                for _ in range(maxmult[f] - mult.get(f, 0)):
                    poly = poly_mul(poly, dict(f.as_terms()))
            terms.append(_Term(slots, shifts, poly))
        self.terms = tuple(terms)

    def _bernoulli_part(self, term: _Term, n: int) -> dict:
        k = len(term.bern_slots)
        if k == 0:
            return {0: mpq(len(term.shifts))} if n == 0 else {}
        # per (coset rep, position) the list B_m(x)/m! for m <= n
        tables = [
            [[_q(bernoulli_poly(m, x) / factorial(m)) for m in range(n + 1)] for x in shifts] for shifts in term.shifts
        ]
        out = {}
        for comp in _compositions(n, k):
            total = mpq(0)
            for tab in tables:
                prod = mpq(1)
                for pos, m in enumerate(comp):
                    prod *= tab[pos][m]
                    if not prod:
                        break
                total += prod
            if total:
                exps = [0] * self.datum.rank
                for pos, m in enumerate(comp):
                    exps[term.bern_slots[pos]] = m
                out[pack(exps)] = total
        return out

    def homogeneous(self, n: int) -> dict:
        """Degree-n part of F_{Delta*} as a packed polynomial with mpq coefficients."""
        with self._lock:
            hit = self._cache.get(n)
        if hit is not None:
            return hit
        num: dict = {}
        for term in self.terms:
            bern = self._bernoulli_part(term, n)
            if not bern:
                continue
            for k, c in poly_mul(bern, term.cofactor).items():
                num[k] = num.get(k, 0) + c
        num = {k: c for k, c in num.items() if c}
        for f in self.denominator:
            num = poly_div_linear(num, f)
        with self._lock:
            self._cache.setdefault(n, num)
        return num

    def series(self, N: int) -> MultiSeries:
        return MultiSeries.from_homogeneous(self.variables, N, [self.homogeneous(n) for n in range(N + 1)])

    def coefficient(self, k: Sequence[int]) -> Fraction:
        """Series coefficient of t^k (not yet multiplied by the factorials)."""
        part = self.homogeneous(sum(k))
        return _frac(part.get(pack(k), mpq(0)))

    def p_value(self, k: Sequence[int]) -> Fraction:
        c = self.coefficient(k)
        for ki in k:
            c *= factorial(ki)
        return c


def _norm_y(y, r):
    return tuple(Fraction(v) for v in y) if y is not None else tuple([Fraction(0)] * r)


@lru_cache(maxsize=64)
def _cached_gf(family: str, rank: int, kind: str | None, y: tuple, order, phi) -> GeneratingFunction:
    return GeneratingFunction(_cached_datum(family, rank), kind, y, order, phi)


@lru_cache(maxsize=None)
def _cached_datum(family: str, rank: int) -> RootDatum:
    return build_root_datum(family, rank)


_factory_lock = threading.Lock()


def get_generating_function(datum_or_family, rank: int | None = None, kind: str | None = None, y=None,
                            order=None, phi=None) -> GeneratingFunction:
    """Shared (memoized) generating function, keyed by datum, root set, y, order and phi."""
    if isinstance(datum_or_family, RootDatum):
        family, rank = datum_or_family.family, datum_or_family.rank
    else:
        family = str(datum_or_family).upper()
    y = _norm_y(y, rank)
    order = tuple(order) if order is not None else None
    phi = tuple(Fraction(v) for v in phi) if phi is not None else None
    with _factory_lock:
        return _cached_gf(family, rank, kind, y, order, phi)


def generating_function_Fstar(datum: RootDatum, delta_star: str | None = None, y=None, N: int = 8,
                              phi=None, order=None) -> MultiSeries:
    """Taylor expansion of F_{Delta*}(t, y) through total degree N.

    Variable t_{i+1} belongs to the Delta* root proportional to e_{r-i}.
    """
    return get_generating_function(datum, kind=delta_star, y=y, order=order, phi=phi).series(N)


def p_coefficient(datum: RootDatum, delta_star: str | None, k: Sequence[int], y=None, phi=None) -> Fraction:
    """P_{Delta*}(k, y) = (prod k_i!) * [t^k] F_{Delta*}."""
    if len(k) != datum.rank or any(x < 0 for x in k):
        raise ValueError(f"bad exponent vector {k}")
    return get_generating_function(datum, kind=delta_star, y=y, phi=phi).p_value(tuple(k))


def p_coefficient_numeric_fallback(datum: RootDatum, delta_star: str | None, k: Sequence[int], cfg=None,
                                   q_max: int | None = None) -> Fraction:
    """Recover P from the symmetrized numeric zeta sum (independent oracle, y = 0).

    Uses sum_sigma Z(sigma k) = (-1)^r / 2^r * P * prod (2 pi i)^{k_j} / k_j!,
    where Z is the Euler-Zagier value for the long roots of C_r and the
    sharp value for the short roots of B_r.
    """
    import itertools

    from .series import AccuracyError, EvalConfig, ez_mzv, rational_reconstruct, sharp_mzv
    from .bigfloat import pi_value

    from mpmath import workprec

    r = datum.rank
    k = tuple(int(x) for x in k)
    if any(x < 2 or x % 2 for x in k):
        raise ValueError("the numeric oracle needs even exponents >= 2")
    kind = delta_star or ("long" if datum.family == "C" else "short")
    if (datum.family, kind) == ("C", "long"):
        fn = ez_mzv
    elif (datum.family, kind) == ("B", "short"):
        fn = sharp_mzv
    else:
        raise ValueError(f"no numeric oracle for {kind} roots of {datum.family}_{r}")
    cfg = cfg or EvalConfig.for_depth(r)
    # slot i <-> e_{r-i} is the innermost-first argument order, so k maps straight onto the index
    with workprec(cfg.precision_bits):
        total = 0
        for perm in sorted(set(itertools.permutations(k))):
            total = fn(perm, cfg) + total
        # multiplicity of repeated entries: the sum over S_r counts each distinct arrangement |Stab| times
        stab = 1
        for v in set(k):
            stab *= factorial(k.count(v))
        total = total * stab
        w = sum(k)
        sign_i = (-1) ** (w // 2)  # (2 pi i)^w = (-1)^{w/2} (2 pi)^w
        factor = Fraction((-1) ** r * sign_i * 2**w, 2**r)
        for kj in k:
            factor /= factorial(kj)
        x = total / (pi_value() ** w) / factor
        if q_max is None:
            q_max = 10 ** max(6, int(x.correct_digits()) // 2 - 2)
        try:
            return rational_reconstruct(x, q_max)
        except AccuracyError:
            raise
