import itertools
from fractions import Fraction
from math import factorial

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from rootzeta.exact import ez2, ez2s, pi_power, zeta, zeta_even
from rootzeta.identities import (
    ReductionError,
    b2_parity_rhs,
    b3_relation,
    c_coefficient,
    canonicalize_double,
    double_parity_rhs,
    double_relation,
    equal_arg_mzv,
    evaluate,
    gkz_odd_sum,
    lemma_fold,
    lemma_fold_exact,
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
from rootzeta.series import EvalConfig, ez_mzv, sharp_mzv
from rootzeta.suites import PRINTED_REDUCE_422, PRINTED_TRIPLE_RHS_224

H = Fraction(1, 2)


def test_c_recursion_start():
    assert c_coefficient(0, 1) == 1
    assert c_coefficient(1, 1) == Fraction(-1, 12)


def test_equal_args():
    assert equal_arg_mzv(1, 1) == pi_power(2, Fraction(1, 6))
    assert equal_arg_mzv(2, 2) == pi_power(8, Fraction(1, 113400))
    assert equal_arg_mzv(3, 1) == pi_power(6, Fraction(1, 5040))


@pytest.mark.parametrize("r,k", list(itertools.product((1, 2, 3), (1, 2, 3))))
def test_routes_agree(r, k):
    assert equal_arg_mzv(r, k) == volume_formula("C", r, k)


def test_volume_b():
    assert volume_formula("B", 2, 1) == pi_power(4, Fraction(1, 320))
    assert volume_formula("B", 3, 3) == pi_power(18, Fraction(1997, 17030314057236480000))


def test_symmetric_sums():
    assert symmetric_sum("C", (4, 4)) == pi_power(8, Fraction(1, 56700))
    assert symmetric_sum("C", (2, 4)) == pi_power(6, Fraction(1, 1260))
    assert symmetric_sum("B", (2, 2)) == pi_power(4, Fraction(1, 160))


@pytest.mark.parametrize("N", range(2, 9))
def test_restricted_sum_depth2(N):
    assert restricted_sum("C", 2, 1, N) == zeta_even(2 * N).scale(Fraction(3, 4))
    assert restricted_sum("C", 2, 1, N) + gkz_odd_sum(N) == zeta_even(2 * N)


@pytest.mark.parametrize("N", range(3, 7))
def test_restricted_sum_depth3(N):
    assert restricted_sum("C", 3, 1, N) == shen_cai_rhs(3, N)


def test_gkz_numeric_n2():
    cfg = EvalConfig()
    with cfg.workprec():
        assert (ez_mzv((1, 3), cfg) - evaluate(gkz_odd_sum(2), cfg)).contains(0)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_stabilizer_orbit_sizes(r):
    for J, tup, weight in restricted_sum_terms(r, 1, r + 3):
        assert len(set(itertools.permutations(tup))) == factorial(r) * weight


def test_restricted_terms_cover_all_tuples():
    for r, N in ((2, 5), (3, 6), (4, 7)):
        direct = {tuple(sorted(2 * a for a in t)) for t in itertools.product(range(1, N + 1), repeat=r)
                  if sum(t) == N}
        assert {tuple(sorted(t)) for _, t, _ in restricted_sum_terms(r, 1, N)} == direct


def test_double_parity_rhs():
    assert double_parity_rhs(2, 3) == (zeta(2) * zeta(3)).scale(6) - zeta(5).scale(11)
    assert double_parity_rhs(2, 2) == pi_power(4, Fraction(1, 30))
    assert double_parity_rhs(4, 4) == pi_power(8, Fraction(1, 28350))


def test_reduce_double():
    assert reduce_double(2, 3) == (zeta(2) * zeta(3)).scale(3) - zeta(5).scale(11 * H)
    assert reduce_double(3, 2) == (zeta(2) * zeta(3)).scale(-2) + zeta(5).scale(9 * H)
    with pytest.raises(ValueError):
        reduce_double(2, 4)


def test_reduce_sharp_double():
    assert reduce_sharp_double(2, 3) == zeta(5).scale(Fraction(-21, 32)) + (zeta(2) * zeta(3)).scale(Fraction(3, 8))
    assert b2_parity_rhs(2, 2) == pi_power(4, Fraction(1, 80))
    with pytest.raises(ValueError):
        reduce_sharp_double(2, 2)


@pytest.mark.parametrize("p,q", [(2, 5), (5, 2), (1, 4), (3, 4), (4, 5), (6, 3)])
def test_reductions_numeric(p, q):
    cfg = EvalConfig()
    with cfg.workprec():
        d = ez_mzv((p, q), cfg) - evaluate(reduce_double(p, q), cfg)
        assert d.contains(0) and d.err < mpmath.mpf(10) ** -35
        if p >= 2:
            d = sharp_mzv((p, q), cfg) - evaluate(reduce_sharp_double(p, q), cfg)
            assert d.contains(0) and d.err < mpmath.mpf(10) ** -35


def test_triple_rhs_printed_instance():
    assert triple_rhs(2, 2, 4) == PRINTED_TRIPLE_RHS_224()


def test_reduce_triple_printed_instance():
    assert reduce_triple(4, 2, 2) == PRINTED_REDUCE_422()


def test_reduce_triple_222():
    assert canonicalize_double(reduce_triple(2, 2, 2)) == pi_power(6, Fraction(1, 5040))


def test_reduce_triple_rejects_odd_weight():
    with pytest.raises(ValueError):
        reduce_triple(2, 2, 3)


@pytest.mark.parametrize("abc", [(2, 2, 2), (3, 2, 2), (2, 3, 2), (2, 2, 4)])
def test_triple_relation(abc):
    assert triple_relation(*abc).passed


@pytest.mark.parametrize("abc", [(2, 2, 2), (2, 2, 4), (2, 3, 2)])
def test_b3_relation(abc):
    assert b3_relation(*abc).passed


def test_relation_detects_error():
    rep = double_relation(2, 3)
    assert rep.passed
    from rootzeta.identities import _report
    bad = _report("bad", ez2(2, 3), reduce_double(2, 3) + zeta(5).scale(Fraction(1, 10**20)), None, 30)
    assert not bad.passed


def test_lemma_fold_zero():
    (a, b), (c, d) = lemma_fold_exact([0] * 4, 3)
    assert a.is_zero() and b.is_zero() and c.is_zero() and d.is_zero()


@settings(max_examples=200)
@given(st.integers(1, 10).flatmap(lambda d: st.tuples(
    st.just(d), st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=1000), min_size=d + 1,
                         max_size=d + 1))))
def test_lemma_fold_property(df):
    d, f = df
    (lr, li), (rr, ri) = lemma_fold(f, d)
    tol = mpmath.mpf(10) ** -40
    with mpmath.workprec(256):
        assert abs(lr.value - rr.value) <= tol and abs(li.value - ri.value) <= tol


@pytest.mark.parametrize("w", [4, 6, 8, 10])
def test_even_weight_normal_forms_numeric(w):
    from rootzeta.identities import even_weight_doubles
    for pq, expr in even_weight_doubles(w).items():
        d = evaluate(ez2(*pq) - expr)
        assert d.contains(0) and d.err < mpmath.mpf(10) ** -60


def test_weight6_fully_reduced():
    from rootzeta.identities import even_weight_doubles
    assert all("ez2" not in v.to_text() for v in even_weight_doubles(6).values())
