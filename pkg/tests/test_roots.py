from fractions import Fraction

import pytest

from rootzeta.genfunc import GeneratingFunction
from rootzeta.roots import build_root_datum, enumerate_bases, filter_bases_for_A, fractional_shift


def test_c2_coroots():
    d = build_root_datum("C", 2)
    got = {tuple(int(x) for x in v) for v in d.positive_coroots}
    assert got == {(1, -1), (1, 1), (1, 0), (0, 1)}
    assert {tuple(int(x) for x in d.positive_coroots[i]) for i in d.delta_star()} == {(1, 0), (0, 1)}


def test_c1():
    d = build_root_datum("C", 1)
    assert len(d.positive_coroots) == 1 and d.weyl_order == 2
    assert len(enumerate_bases(d)) == 1


def test_b2_short_coroots_in_simple_basis():
    d = build_root_datum("B", 2)
    coords = sorted(tuple(int(x) for x in d.simple_coords(d.positive_coroots[i])) for i in d.delta_star())
    assert coords == [(0, 1), (2, 1)]


def test_c2_bases_and_index():
    d = build_root_datum("C", 2)
    assert len(d.bases) == 6
    idx = {frozenset(tuple(int(x) for x in d.positive_coroots[i]) for i in V.roots): V.lattice_index for V in d.bases}
    assert idx[frozenset({(1, -1), (1, 1)})] == 2


@pytest.mark.parametrize("fam,r,n", [("C", 3, 9), ("B", 3, 9)])
def test_positive_root_count(fam, r, n):
    assert len(build_root_datum(fam, r).positive_coroots) == n


def test_unsupported_family():
    with pytest.raises(ValueError):
        build_root_datum("G", 2)


def test_empty_filter_keeps_everything():
    d = build_root_datum("C", 2)
    assert list(filter_bases_for_A(d, d.bases, [])) == list(d.bases)


def test_c2_filter_keeps_six_summands():
    d = build_root_datum("C", 2)
    A = d.complement(d.delta_star())
    kept = filter_bases_for_A(d, d.bases, list(A))
    assert len(kept) == 6
    short = set(A)
    for V in d.bases:
        if not short & set(V.roots):
            assert V in kept


@pytest.mark.parametrize("fam", ["C", "B"])
def test_generating_function_independent_of_filter_order(fam):
    d = build_root_datum(fam, 3)
    A = list(d.complement(d.delta_star()))
    ref = GeneratingFunction(d, order=A).series(6)
    for order in (A[::-1], A[1:] + A[:1], A[2:] + A[:2]):
        assert GeneratingFunction(d, order=order).series(6) == ref


def test_filter_set_equal_for_some_orders():
    # the retained set itself may change with the order at rank 3; its size does not
    d = build_root_datum("C", 3)
    A = list(d.complement(d.delta_star()))
    sizes = {len(filter_bases_for_A(d, d.bases, o)) for o in (A, A[::-1])}
    assert len(sizes) == 1


def test_fractional_shift_at_zero():
    d = build_root_datum("C", 2)
    for V in d.bases:
        for b in V.roots:
            assert fractional_shift(d, V, b, (0, 0), V.coset_reps_q[0]) in (Fraction(0), Fraction(1))
