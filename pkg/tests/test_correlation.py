import io
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from holeyhex.closed_form import macmahon
from holeyhex.correlation import (CorrelationPoint, centroid, correlation_sequence, fit_exponent, fit_json,
                                  hole_separation, kenyon_ratio, pair_scan, translate, write_csv)
from holeyhex.errors import DegenerateFit, ParityViolation
from holeyhex.lattice import HexDims, Orient, TriTriple, build_region
from holeyhex.oracle import oracle_count

RHOMBUS = [TriTriple(0, -2, 0, Orient.LEFT), TriTriple(2, 0, 0, Orient.RIGHT)]


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_translate_is_a_rigid_shift(up, right):
    for t in RHOMBUS:
        s = translate(t, up=up, right=right)
        assert s.orient is t.orient
        shifted = sorted((X + 2 * right, y + up) for X, y in t.vertices())
        assert sorted(s.vertices()) == shifted


def test_centroid_of_rhombus_is_shared_edge_midpoint():
    shared = set(RHOMBUS[0].vertices()) & set(RHOMBUS[1].vertices())
    mx = sum(float(X) for X, _ in shared) / 2 * math.sqrt(3) / 2
    my = sum(float(y) for _, y in shared) / 2
    assert centroid(RHOMBUS) == pytest.approx((mx, my))


def test_separation():
    holes = RHOMBUS + [translate(t, up=4) for t in RHOMBUS]
    assert hole_separation(build_region(5, 5, 5, holes)) == pytest.approx(4.0)
    assert hole_separation(build_region(5, 5, 5, RHOMBUS)) == 0.0


def test_empty_ratio_is_one():
    pts = correlation_sequence(HexDims(1, 1, 1), [], 6)
    assert [p.ratio for p in pts] == [1] * 6


def test_rhombus_sequence_against_oracle():
    pts = correlation_sequence(HexDims(1, 1, 1), RHOMBUS, 3)
    assert [p.ratio for p in pts] == [Fraction(1, 2), Fraction(3, 10), Fraction(13, 35)]
    for p in pts:
        dims = HexDims(1, 1, 1).scaled(p.n)
        assert p.ratio == Fraction(oracle_count(build_region(*dims, RHOMBUS)), macmahon(*dims))


def test_incompatible_sizes_are_skipped():
    # a triangle with odd labels only exists when b+c and a+b are odd
    t = TriTriple(1, -1, 2, Orient.LEFT)
    hole = [t, TriTriple(3, -1, 0, Orient.RIGHT)]
    pts = correlation_sequence(HexDims(1, 2, 1), hole, 4)
    assert [p.n for p in pts] == [1, 3]
    with pytest.raises(ParityViolation):
        correlation_sequence(HexDims(2, 2, 2), hole, 3)


def test_pair_scan_normalised_near_one():
    pts = pair_scan(HexDims(1, 1, 1), 12, RHOMBUS, [4, 8])
    assert [p.separation for p in pts] == pytest.approx([4.0, 8.0])
    for p in pts:
        assert 0.9 < p.ratio < 1.1
    assert abs(1 - pts[1].ratio) < abs(1 - pts[0].ratio)


def test_pair_scan_matches_direct_ratio():
    dims = HexDims(4, 4, 4)
    p = pair_scan(HexDims(1, 1, 1), 4, RHOMBUS, [2])[0]
    lower = [translate(t, up=-1) for t in RHOMBUS]
    upper = [translate(t, up=1) for t in RHOMBUS]
    m = Fraction(macmahon(*dims))
    both = oracle_count(build_region(*dims, lower + upper)) / m
    single = oracle_count(build_region(*dims, lower)) / m * oracle_count(build_region(*dims, upper)) / m
    assert p.ratio == both / single


def test_fit_recovers_a_power_law():
    pts = [CorrelationPoint(1, Fraction(1, d * d), float(d)) for d in (2, 4, 8, 16)]
    fit = fit_exponent(pts)
    assert fit.slope == pytest.approx(-2.0)
    assert fit.intercept == pytest.approx(0.0, abs=1e-12)
    assert fit.residual == pytest.approx(0.0, abs=1e-12)
    assert json.loads(fit_json(fit))["slope"] == pytest.approx(-2.0)


@pytest.mark.parametrize("seps", [[4.0, 8.0], [4.0, 4.0, 8.0], [0.0, 4.0, 8.0]])
def test_degenerate_fit(seps):
    with pytest.raises(DegenerateFit):
        fit_exponent([CorrelationPoint(1, Fraction(1), s) for s in seps])


def test_kenyon_ratio_zero_hole():
    assert kenyon_ratio(HexDims(3, 3, 3), []) == 1


def test_csv_output():
    buf = io.StringIO()
    write_csv([CorrelationPoint(2, Fraction(3, 10), 0.0)], buf)
    assert buf.getvalue() == "n,separation,ratio_numerator,ratio_denominator\n2,0,3,10\n"


def test_fit_linear_power_law():
    pts = [CorrelationPoint(1, Fraction(d), float(d)) for d in (3, 5, 7)]
    assert fit_exponent(pts).slope == pytest.approx(1.0)


def test_two_holes_at_n_40():
    pts = pair_scan(HexDims(1, 1, 1), 40, RHOMBUS, [4, 8])
    assert all(p.ratio > 0 for p in pts)
