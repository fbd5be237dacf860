from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from rootzeta.bigfloat import BigFloat, pi_value
from rootzeta.exact import (
    MissingValuationError,
    ZetaExpression,
    bernoulli,
    bernoulli_poly,
    expr_numeric,
    ez2,
    ez2s,
    ez3,
    pi_power,
    zeta,
    zeta_even,
)


def test_bernoulli_table():
    assert [bernoulli(n) for n in range(9)] == [
        1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42), 0, Fraction(-1, 30)]
    assert bernoulli(12) == Fraction(-691, 2730)


@given(st.integers(min_value=1, max_value=60))
def test_odd_bernoulli_vanish(k):
    assert bernoulli(2 * k + 1) == 0


@given(st.integers(min_value=0, max_value=20), st.fractions(min_value=-3, max_value=3, max_denominator=20))
def test_bernoulli_poly_difference(n, x):
    # B_n(x+1) - B_n(x) = n x^(n-1)
    lhs = bernoulli_poly(n, x + 1) - bernoulli_poly(n, x)
    assert lhs == (n * x ** (n - 1) if n else 0)


def test_even_zeta_is_pi_power():
    assert zeta_even(2) == pi_power(2, Fraction(1, 6))
    assert zeta(4) == pi_power(4, Fraction(1, 90))
    assert zeta_even(0) == ZetaExpression.const(Fraction(-1, 2))


def test_generator_validation():
    with pytest.raises(ValueError):
        zeta(1)
    with pytest.raises(ValueError):
        ez2(2, 1)
    (g,) = ez2(1, 3).generators()
    assert g.kind == "ez2" and g.args == (1, 3) and g.weight == 4


_gens = st.sampled_from([zeta(3), zeta(5), ez2(2, 3), ez2(1, 5), ez2s(2, 4), ez3(2, 2, 4), pi_power(2)])
_coef = st.fractions(min_value=-5, max_value=5, max_denominator=12)


@st.composite
def expressions(draw):
    e = ZetaExpression.const(draw(_coef))
    for _ in range(draw(st.integers(0, 3))):
        term = ZetaExpression.const(draw(_coef))
        for g in draw(st.lists(_gens, max_size=2)):
            term = term * g
        e = e + term
    return e


@given(expressions(), expressions(), expressions())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZetaExpression()


@given(expressions())
def test_parse_round_trip(e):
    assert ZetaExpression.parse(e.to_text()) == e


def test_to_text_sample():
    e = (zeta(2) * zeta(3)).scale(3) - zeta(5).scale(Fraction(11, 2))
    assert e.to_text() == "-11/2*zeta(5) + 1/2*pi^2*zeta(3)"


def _valuation():
    mpmath.mp.prec = 200
    vals = {}
    for e in (zeta(3), zeta(5), ez2(2, 3), ez2(1, 5), ez2s(2, 4), ez3(2, 2, 4)):
        (g,) = e.generators()
        vals[g] = BigFloat(mpmath.mpf(g.weight) / 7 + mpmath.mpf(1) / (3 + len(g.args)), mpmath.mpf(2) ** -190)
    return vals


@given(expressions(), expressions())
def test_numeric_homomorphism(a, b):
    with mpmath.workprec(200):
        v, pv = _valuation(), pi_value()
        s = expr_numeric(a + b, v, pv) - expr_numeric(a, v, pv) - expr_numeric(b, v, pv)
        p = expr_numeric(a * b, v, pv) - expr_numeric(a, v, pv) * expr_numeric(b, v, pv)
        assert s.contains(0) and p.contains(0)


def test_missing_valuation():
    with pytest.raises(MissingValuationError):
        expr_numeric(zeta(3), {}, pi_value())
