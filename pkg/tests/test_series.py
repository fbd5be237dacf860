from fractions import Fraction

import mpmath
import pytest

from rootzeta.bigfloat import BigFloat, pi_value
from rootzeta.series import (
    AccuracyError,
    EvalConfig,
    ReconstructionError,
    ez_mzv,
    phi2,
    pi_power_coefficient,
    rational_reconstruct,
    riemann_zeta,
    sharp_mzv,
    to_fraction,
)

CFG = EvalConfig()


def close(ball: BigFloat, ref, digits=40):
    with mpmath.workprec(300):
        return abs(ball.value - ref) <= ball.err + mpmath.mpf(10) ** -70 and ball.err < mpmath.mpf(10) ** -digits


def test_riemann_values():
    with mpmath.workprec(300):
        assert close(riemann_zeta(2, CFG), mpmath.pi**2 / 6)
        assert close(riemann_zeta(3, CFG), mpmath.zeta(3))


def test_depth_reductions():
    with mpmath.workprec(300):
        z3, z4, z5 = (mpmath.zeta(s) for s in (3, 4, 5))
        assert close(ez_mzv((1, 2), CFG), z3)
        assert close(ez_mzv((1, 1, 2), CFG), z4)
        assert close(ez_mzv((1, 1, 1, 2), EvalConfig.for_depth(4)), z5, digits=20)
        assert close(ez_mzv((2, 3), CFG), 3 * mpmath.zeta(2) * z3 - mpmath.mpf(11) / 2 * z5)


@pytest.mark.parametrize("s,c,w", [((4, 4), Fraction(1, 113400), 8), ((2, 2, 2), Fraction(1, 5040), 6)])
def test_ez_pi_values(s, c, w):
    with mpmath.workprec(300):
        assert close(ez_mzv(s, CFG), mpmath.mpf(c.numerator) / c.denominator * mpmath.pi**w)


@pytest.mark.parametrize("s,c,w", [((2, 2), Fraction(1, 320), 4), ((6, 6), Fraction(1369, 871782912000), 12),
                                   ((2, 2, 2), Fraction(1, 40320), 6)])
def test_sharp_pi_values(s, c, w):
    with mpmath.workprec(300):
        assert close(sharp_mzv(s, CFG), mpmath.mpf(c.numerator) / c.denominator * mpmath.pi**w)


def test_phi2_brute_force_digits():
    # averaged partial sums of the alternating outer series, six digits are plenty as a sanity check
    v = phi2(1, 2, CFG).value
    assert abs(v - mpmath.mpf("-0.2430703516700615")) < 1e-15


def test_sharp_splitting():
    with mpmath.workprec(256):
        for s in ((2, 3), (2, 2), (3, 4)):
            d = sharp_mzv(s, CFG) - (ez_mzv(s, CFG) + phi2(*s, CFG)) * BigFloat.exact(Fraction(1, 2))
            assert d.contains(0)


def test_stuffle_sample():
    with mpmath.workprec(256):
        for s, t in ((2, 3), (3, 5), (4, 4)):
            d = riemann_zeta(s, CFG) * riemann_zeta(t, CFG) - ez_mzv((s, t), CFG) - ez_mzv((t, s), CFG) \
                - riemann_zeta(s + t, CFG)
            assert d.contains(0)


def test_monotone_refinement():
    ref = ez_mzv((2, 3), EvalConfig(precision_bits=512, cutoff=4000, target_digits=40))
    lo = ez_mzv((2, 3), EvalConfig(precision_bits=128, cutoff=500, em_order=8, target_digits=20))
    mid = ez_mzv((2, 3), EvalConfig(precision_bits=256, cutoff=1000, em_order=8, target_digits=20))
    with mpmath.workprec(512):
        assert abs(mid.value - ref.value) <= abs(lo.value - ref.value)


def test_bound_not_met_raises():
    with pytest.raises(AccuracyError):
        ez_mzv((2, 3), EvalConfig(precision_bits=256, cutoff=16, em_order=2, target_digits=60))


def test_index_validation():
    with pytest.raises(ValueError):
        ez_mzv((2, 1), CFG)
    with pytest.raises(ValueError):
        ez_mzv((2, 2, 2, 2, 2), CFG)


def test_to_fraction_sign():
    assert to_fraction(mpmath.mpf(-2.5)) == Fraction(-5, 2)


def test_reconstruction():
    with mpmath.workprec(128):
        assert rational_reconstruct(BigFloat(mpmath.mpf("0.75"), mpmath.mpf(2) ** -100), 10**6) == Fraction(3, 4)
        assert rational_reconstruct(BigFloat(mpmath.mpf(0), mpmath.mpf(2) ** -100), 10**6) == 0
        with pytest.raises(ReconstructionError):
            rational_reconstruct(BigFloat(mpmath.mpf("0.333"), mpmath.mpf("1e-3")), 10**6)
        x = ez_mzv((4, 4), CFG)
    with mpmath.workprec(256):
        assert pi_power_coefficient(x, 8, 10**12) == Fraction(1, 113400)
