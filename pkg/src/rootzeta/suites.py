"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a list of :class:`Check` records in a fixed order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

import mpmath

from .bigfloat import BigFloat, pi_value
from .exact import ZetaExpression, bernoulli, bernoulli_poly, ez2, ez2s, pi_power, zeta, zeta_even
from .genfunc import GeneratingFunction, p_coefficient, p_coefficient_numeric_fallback
from .identities import (
    b2_parity_rhs,
    b2_relation,
    b3_relation,
    double_parity_rhs,
    double_relation,
    equal_arg_mzv,
    evaluate,
    gkz_odd_sum,
    reduce_double,
    reduce_sharp_double,
    reduce_triple,
    restricted_sum,
    restricted_sum_terms,
    shen_cai_rhs,
    symmetric_sum,
    triple_relation,
    triple_rhs,
    volume_formula,
)
from .mseries import LinearForm, MultiSeries
from .roots import build_root_datum
from .series import EvalConfig, ez_mzv, phi2, pi_power_coefficient, riemann_zeta, sharp_mzv

SUITES = ("paper-values", "relations", "oracles")


@dataclass
class Check:
    label: str
    status: str
    value: str | None = None
    expected: str | None = None
    numeric: str | None = None
    bound: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_record(self) -> dict:
        rec = {"label": self.label, "status": self.status}
        for key in ("value", "expected", "numeric", "bound"):
            v = getattr(self, key)
            if v is not None:
                rec[key] = v
        rec.update(self.extra)
        return rec


def _st(ok: bool) -> str:
    return "pass" if ok else "fail"


def exact_check(label: str, got, expected) -> Check:
    text = (lambda x: x.to_text() if isinstance(x, ZetaExpression) else str(x))
    return Check(label, _st(got == expected), text(got), text(expected))


def ball_check(label: str, ball: BigFloat, digits: int | None = None) -> Check:
    """Pass iff the ball contains zero (and, if asked, its radius is below 10^-digits)."""
    ok = abs(ball.value) <= ball.err
    if digits is not None:
        ok = ok and ball.err <= mpmath.mpf(10) ** (-digits)
    return Check(label, _st(ok), numeric=mpmath.nstr(ball.value, 8), bound=mpmath.nstr(ball.err, 4))


def _guard(label: str, fn: Callable[[], Check]) -> Check:
    try:
        return fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        return Check(label, "fail", extra={"error": f"{type(exc).__name__}: {exc}"})


def c2_closed_form(N: int) -> MultiSeries:
    """The hand-written C_2 expansion at y = 0 (long-root variables t1, t2), through degree N."""
    V = ("t1", "t2")
    M = N + 2

    def bern(x, slot):
        return MultiSeries(V, M, {
            tuple(n if i == slot else 0 for i in range(2)): bernoulli_poly(n, Fraction(x)) / factorial(n)
            for n in range(M + 1)
        })

    t1 = MultiSeries(V, M, {(1, 0): 1})
    t2 = MultiSeries(V, M, {(0, 1): 1})
    b1, b2, b1e = bern(0, 0), bern(0, 1), bern(1, 0)
    one = Fraction(1)
    out = MultiSeries(V, M, {(0, 0): 1})
    out = out + (t2 * b1 - t1 * b2).div_linear(LinearForm((one, -one)))
    out = out + b1e * b2
    out = out - (t2 * b1e + t1 * b2).div_linear(LinearForm((one, one)))
    return MultiSeries(V, N, out.coefficients)


# the branch vector under which our slot order reproduces the printed C_2 expansion term by term
C2_PRINTED_PHI = (1, -2)


# ------------------------------------------------------------------ published values


def _pi_multiple(e: ZetaExpression) -> Fraction:
    return e.as_pi_multiple()[0]


def published_values(cfg: EvalConfig | None = None) -> list[Check]:
    cfg = cfg or EvalConfig()
    C1, C2, B2, B3 = (build_root_datum(f, r) for f, r in (("C", 1), ("C", 2), ("B", 2), ("B", 3)))
    out: list[Check] = []
    add = out.append

    def g(label, fn):
        add(_guard(label, fn))

    g("euler zeta(2) = pi^2/6", lambda: exact_check("euler zeta(2) = pi^2/6", equal_arg_mzv(1, 1), pi_power(2, Fraction(1, 6))))
    g("C1 coefficients are Bernoulli numbers", lambda: exact_check(
        "C1 coefficients are Bernoulli numbers",
        [p_coefficient(C1, None, (k,)) for k in range(13)], [bernoulli(k) for k in range(13)]))
    g("B2 short coroots (0,1),(2,1)", lambda: exact_check(
        "B2 short coroots (0,1),(2,1)",
        sorted(tuple(int(x) for x in B2.simple_coords(B2.positive_coroots[i])) for i in B2.delta_star()),
        [(0, 1), (2, 1)]))
    g("C2 filtered bases = 6 summands", lambda: exact_check(
        "C2 filtered bases = 6 summands", len(GeneratingFunction(C2).bases), 6))
    g("C2 closed form through degree 8", lambda: exact_check(
        "C2 closed form through degree 8",
        GeneratingFunction(C2, phi=C2_PRINTED_PHI).series(8).dump(), c2_closed_form(8).dump()))
    g("P_C2(4,4) = 1/6300 (generating function)", lambda: exact_check(
        "P_C2(4,4) = 1/6300 (generating function)", p_coefficient(C2, None, (4, 4)), Fraction(1, 6300)))

    def p44_from_recursion():
        # invert the volume relation on the C-recursion value of zeta_2(4,4)
        z = _pi_multiple(equal_arg_mzv(2, 2))
        p = z * 2**2 * 2 * factorial(4) ** 2 / (2**8 * (-1) ** 4)
        return exact_check("P_C2(4,4) = 1/6300 (C-recursion)", p, Fraction(1, 6300))

    g("P_C2(4,4) = 1/6300 (C-recursion)", p44_from_recursion)
    g("P_B3(2,2,2) consistent with pi^6/40320", lambda: exact_check(
        "P_B3(2,2,2) consistent with pi^6/40320",
        pi_power(6, Fraction(-1, 2**3 * 6) * p_coefficient(B3, None, (2, 2, 2)) * Fraction((-4) ** 3, 2**3)),
        pi_power(6, Fraction(1, 40320))))

    vols = [
        ("zeta_2(4,4)", "C", 2, 2, Fraction(1, 113400), 8),
        ("zeta#_2(2,2)", "B", 2, 1, Fraction(1, 320), 4),
        ("zeta#_2(4,4)", "B", 2, 2, Fraction(23, 14515200), 8),
        ("zeta#_2(6,6)", "B", 2, 3, Fraction(1369, 871782912000), 12),
        ("zeta#_3(2,2,2)", "B", 3, 1, Fraction(1, 40320), 6),
        ("zeta#_3(4,4,4)", "B", 3, 2, Fraction(23, 697426329600), 12),
        ("zeta#_3(6,6,6)", "B", 3, 3, Fraction(1997, 17030314057236480000), 18),
    ]
    for name, fam, r, k, q, w in vols:
        g(f"volume {name}", lambda fam=fam, r=r, k=k, q=q, w=w, name=name: exact_check(
            f"volume {name}", volume_formula(fam, r, k), pi_power(w, q)))
    g("recursion zeta_2(4,4) = volume", lambda: exact_check(
        "recursion zeta_2(4,4) = volume", equal_arg_mzv(2, 2), volume_formula("C", 2, 2)))
    g("symmetric sum C (2,4) = pi^6/1260", lambda: exact_check(
        "symmetric sum C (2,4) = pi^6/1260", symmetric_sum("C", (2, 4)), pi_power(6, Fraction(1, 1260))))

    for N in range(2, 9):
        g(f"restricted sum C2 N={N}", lambda N=N: exact_check(
            f"restricted sum C2 N={N}", restricted_sum("C", 2, 1, N), zeta_even(2 * N).scale(Fraction(3, 4))))
        g(f"gkz odd sum N={N}", lambda N=N: exact_check(
            f"gkz odd sum N={N}", gkz_odd_sum(N), zeta_even(2 * N).scale(Fraction(1, 4))))
    for N in range(3, 7):
        want = zeta_even(2 * N).scale(Fraction(5, 8)) - (zeta_even(2) * zeta_even(2 * N - 2)).scale(Fraction(1, 4))
        g(f"restricted sum C3 N={N}", lambda N=N, want=want: exact_check(
            f"restricted sum C3 N={N}", restricted_sum("C", 3, 1, N), want))
    for N in (4, 5):
        g(f"restricted sum C4 N={N} (numeric)", lambda N=N: shen_cai_numeric(4, N))

    g("double parity rhs (2,3)", lambda: exact_check(
        "double parity rhs (2,3)", double_parity_rhs(2, 3), (zeta(2) * zeta(3)).scale(6) - zeta(5).scale(11)))
    g("double parity rhs (4,4) = 4 zeta_2(4,4)", lambda: exact_check(
        "double parity rhs (4,4) = 4 zeta_2(4,4)", double_parity_rhs(4, 4), pi_power(8, Fraction(4, 113400))))
    g("reduce zeta_2(2,3)", lambda: exact_check(
        "reduce zeta_2(2,3)", reduce_double(2, 3), (zeta(2) * zeta(3)).scale(3) - zeta(5).scale(Fraction(11, 2))))
    g("reduce zeta_2(3,2)", lambda: exact_check(
        "reduce zeta_2(3,2)", reduce_double(3, 2), (zeta(2) * zeta(3)).scale(-2) + zeta(5).scale(Fraction(9, 2))))
    g("triple rhs (2,2,4)", lambda: exact_check("triple rhs (2,2,4)", triple_rhs(2, 2, 4), PRINTED_TRIPLE_RHS_224()))
    g("reduce zeta_3(4,2,2)", lambda: exact_check("reduce zeta_3(4,2,2)", reduce_triple(4, 2, 2), PRINTED_REDUCE_422()))
    g("reduce zeta#_2(2,3)", lambda: exact_check(
        "reduce zeta#_2(2,3)", reduce_sharp_double(2, 3),
        zeta(5).scale(Fraction(-21, 32)) + (zeta(2) * zeta(3)).scale(Fraction(3, 8))))
    g("b2 parity rhs (2,2) = pi^4/80", lambda: exact_check(
        "b2 parity rhs (2,2) = pi^4/80", b2_parity_rhs(2, 2), pi_power(4, Fraction(1, 80))))

    # numeric agreement with the closed forms
    ncfg = EvalConfig(precision_bits=max(cfg.precision_bits, 256), cutoff=cfg.cutoff, em_order=cfg.em_order)
    g("numeric zeta_2(2,3) = reduction", lambda: _numeric_eq(
        "numeric zeta_2(2,3) = reduction", ez_mzv((2, 3), ncfg), evaluate(reduce_double(2, 3), ncfg), ncfg, 40))
    numeric_vals = [
        ("numeric zeta_2(4,4)", lambda: ez_mzv((4, 4), ncfg), pi_power(8, Fraction(1, 113400))),
        ("numeric zeta#_2(2,2)", lambda: sharp_mzv((2, 2), ncfg), pi_power(4, Fraction(1, 320))),
        ("numeric zeta#_2(6,6)", lambda: sharp_mzv((6, 6), ncfg), pi_power(12, Fraction(1369, 871782912000))),
        ("numeric zeta#_3(2,2,2)", lambda: sharp_mzv((2, 2, 2), ncfg), pi_power(6, Fraction(1, 40320))),
    ]
    for label, fn, want in numeric_vals:
        g(label, lambda label=label, fn=fn, want=want: _numeric_eq(label, fn(), evaluate(want, ncfg), ncfg, 40))
    for s in ((2, 3), (2, 2)):
        g(f"sharp splitting {s}", lambda s=s: _splitting(s, ncfg))
    out.extend(reconstruction_checks(ncfg, only=RECONSTRUCTION_SPEC_EXAMPLES))
    return out


def PRINTED_TRIPLE_RHS_224() -> ZetaExpression:
    return (
        (zeta(4) * ez2(2, 2)).scale(2)
        + zeta(2) * (ez2(4, 2).scale(8) + ez2(3, 3).scale(12) + ez2(2, 4).scale(16) + ez2(1, 5).scale(16))
        - ez2(6, 2).scale(16) - ez2(5, 3).scale(20) - ez2(4, 4).scale(25) - ez2(3, 5).scale(24) - ez2(2, 6).scale(17)
    )


def PRINTED_REDUCE_422() -> ZetaExpression:
    h = Fraction(1, 2)
    return (
        zeta(4) * ez2(2, 2)
        + zeta(2) * (ez2(4, 2).scale(4) + ez2(3, 3).scale(6) + ez2(2, 4).scale(7) + ez2(1, 5).scale(8))
        - ez2(6, 2).scale(8) - ez2(5, 3).scale(10) - ez2(4, 4).scale(23 * h) - ez2(3, 5).scale(12)
        - ez2(2, 6).scale(15 * h)
    )


def _numeric_eq(label: str, a: BigFloat, b: BigFloat, cfg: EvalConfig, digits: int) -> Check:
    with cfg.workprec():
        return ball_check(label, a - b, digits)


def _splitting(s, cfg: EvalConfig, digits: int = 30) -> Check:
    with cfg.workprec():
        d = sharp_mzv(s, cfg) - (ez_mzv(s, cfg) + phi2(s[0], s[1], cfg)) * BigFloat.exact(Fraction(1, 2))
    return ball_check(f"sharp splitting {s}", d, digits)


def shen_cai_numeric(r: int, N: int, digits: int = 18) -> Check:
    """Sum of zeta_r over even tuples of weight 2N against the closed form, numerically."""
    cfg = EvalConfig.for_depth(r)
    with cfg.workprec():
        total = BigFloat.exact(0)
        for tup in itertools.product(range(1, N + 1), repeat=r):
            if sum(tup) == N:
                total = total + ez_mzv(tuple(2 * a for a in tup), cfg)
        d = total - evaluate(shen_cai_rhs(r, N), cfg)
    return ball_check(f"restricted sum C{r} N={N} (numeric)", d, digits)


RECONSTRUCTION_SPEC_EXAMPLES = ("zeta_2(4,4)/pi^8", "zeta#_2(2,2)/pi^4", "(zeta_2(2,4)+zeta_2(4,2))/pi^6")


def reconstruction_checks(cfg: EvalConfig, q_max: int = 10**12, only=None) -> list[Check]:
    """Recover printed rationals from 40-digit numerics, and refuse ambiguous input."""
    c40 = EvalConfig(precision_bits=160, cutoff=cfg.cutoff, em_order=cfg.em_order, target_digits=40)
    items = [
        ("zeta_2(4,4)/pi^8", lambda: ez_mzv((4, 4), c40), 8, Fraction(1, 113400)),
        ("zeta#_2(2,2)/pi^4", lambda: sharp_mzv((2, 2), c40), 4, Fraction(1, 320)),
        ("zeta#_2(4,4)/pi^8", lambda: sharp_mzv((4, 4), c40), 8, Fraction(23, 14515200)),
        ("zeta#_2(6,6)/pi^12", lambda: sharp_mzv((6, 6), c40), 12, Fraction(1369, 871782912000)),
        ("zeta#_3(2,2,2)/pi^6", lambda: sharp_mzv((2, 2, 2), c40), 6, Fraction(1, 40320)),
        ("zeta#_3(4,4,4)/pi^12", lambda: sharp_mzv((4, 4, 4), c40), 12, Fraction(23, 697426329600)),
        ("zeta#_3(6,6,6)/pi^18", lambda: sharp_mzv((6, 6, 6), c40), 18, Fraction(1997, 17030314057236480000)),
        ("zeta_3(2,2,2)/pi^6", lambda: ez_mzv((2, 2, 2), c40), 6, Fraction(1, 5040)),
        ("(zeta_2(2,4)+zeta_2(4,2))/pi^6", lambda: ez_mzv((2, 4), c40) + ez_mzv((4, 2), c40), 6, Fraction(1, 1260)),
        ("zeta(2)/pi^2", lambda: riemann_zeta(2, c40), 2, Fraction(1, 6)),
    ]
    if only is not None:
        items = [it for it in items if it[0] in only]
    out = []
    for label, fn, w, want in items:
        def one(label=label, fn=fn, w=w, want=want):
            with c40.workprec():
                x = fn()
                # clip the ball to 40 digits: that is all the criterion grants
                x = BigFloat(x.value, max(x.err, abs(x.value) * mpmath.mpf(10) ** -40))
                got = pi_power_coefficient(x, w, q_max)
            return exact_check(f"reconstruct {label}", got, want)
        out.append(_guard(f"reconstruct {label}", one))

    def ambiguous():
        from .series import AccuracyError, ReconstructionError, rational_reconstruct
        with mpmath.workprec(128):
            x = BigFloat(mpmath.mpf("0.333"), mpmath.mpf("1e-3"))
            try:
                got = rational_reconstruct(x, 10**6)
            except (AccuracyError, ReconstructionError):
                return Check("reconstruct refuses ambiguous input", "pass")
        return Check("reconstruct refuses ambiguous input", "fail", value=str(got))

    out.append(_guard("reconstruct refuses ambiguous input", ambiguous))
    return out


# ------------------------------------------------------------------ relations


def relations(cfg: EvalConfig | None = None, digits: int = 30) -> list[Check]:
    cfg = cfg or EvalConfig()
    out = []
    for a, b, c in itertools.product((2, 3, 4), repeat=3):
        for fn in (triple_relation, b3_relation):
            out.append(_guard(f"{fn.__name__}{(a, b, c)}", lambda fn=fn, a=a, b=b, c=c: _rel(fn(a, b, c, cfg, digits))))
    for p, q in itertools.product(range(2, 7), repeat=2):
        for fn in (double_relation, b2_relation):
            out.append(_guard(f"{fn.__name__}{(p, q)}", lambda fn=fn, p=p, q=q: _rel(fn(p, q, cfg, digits))))
    for w in range(5, 12, 2):
        for p in range(2, w - 1):
            q = w - p
            out.append(_guard(f"reduce_double{(p, q)} numeric", lambda p=p, q=q: _numeric_eq(
                f"reduce_double{(p, q)} numeric", ez_mzv((p, q), cfg), evaluate(reduce_double(p, q), cfg), cfg, 35)))
            out.append(_guard(f"reduce_sharp_double{(p, q)} numeric", lambda p=p, q=q: _numeric_eq(
                f"reduce_sharp_double{(p, q)} numeric", sharp_mzv((p, q), cfg),
                evaluate(reduce_sharp_double(p, q), cfg), cfg, 35)))
    return out


def _rel(rep) -> Check:
    rec = rep.as_record()
    return Check(rep.label, rep.status, numeric=rec["residual"], bound=rec["bound"])


# ------------------------------------------------------------------ oracles


def even_tuples(r: int, max_weight: int):
    for tup in itertools.product(range(2, max_weight + 1, 2), repeat=r):
        if sum(tup) <= max_weight:
            yield tup


def oracles(cfg: EvalConfig | None = None, max_weight: int = 12) -> list[Check]:
    out = []
    for fam, r in (("C", 2), ("C", 3), ("B", 2), ("B", 3)):
        datum = build_root_datum(fam, r)
        for k in even_tuples(r, max_weight):
            label = f"P_{fam}{r}{k} exact = numeric"
            out.append(_guard(label, lambda datum=datum, k=k, label=label: exact_check(
                label, p_coefficient(datum, None, k), p_coefficient_numeric_fallback(datum, None, k))))
    C2 = build_root_datum("C", 2)
    out.append(_guard("C2 closed form through degree 10", lambda: exact_check(
        "C2 closed form through degree 10",
        GeneratingFunction(C2, phi=C2_PRINTED_PHI).series(10).dump(), c2_closed_form(10).dump())))
    out.extend(series_invariants(cfg))
    return out


def series_invariants(cfg: EvalConfig | None = None) -> list[Check]:
    cfg = cfg or EvalConfig()
    out = []

    def stuffle(s, t):
        with cfg.workprec():
            d = riemann_zeta(s, cfg) * riemann_zeta(t, cfg) - ez_mzv((s, t), cfg) - ez_mzv((t, s), cfg) \
                - riemann_zeta(s + t, cfg)
        return ball_check(f"stuffle ({s},{t})", d)

    def sum_formula(K):
        with cfg.workprec():
            total = BigFloat.exact(0)
            for j in range(2, K):
                total = total + ez_mzv((K - j, j), cfg)
            d = total - riemann_zeta(K, cfg)
        return ball_check(f"sum formula K={K}", d)

    for s in range(2, 9):
        for t in range(s, 9):
            out.append(_guard(f"stuffle ({s},{t})", lambda s=s, t=t: stuffle(s, t)))
    for K in range(3, 11):
        out.append(_guard(f"sum formula K={K}", lambda K=K: sum_formula(K)))
    for s1 in range(2, 7):
        for s2 in range(2, 7):
            out.append(_guard(f"sharp splitting {(s1, s2)}", lambda s=(s1, s2): _splitting(s, cfg, digits=None)))
    return out


def run_suite(name: str, cfg: EvalConfig | None = None) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, cfg)]
    if name == "paper-values":
        return published_values(cfg)
    if name == "relations":
        return relations(cfg)
    if name == "oracles":
        return oracles(cfg)
    raise ValueError(f"unknown suite {name!r}")
