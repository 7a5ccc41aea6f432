import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcsupport import (Interval, Point2, TWO_PI, ZeroVector, angle_of,
                        canon_angle, ccw_gap, interval_sub, orient)

angles = st.floats(min_value=-50.0, max_value=50.0,
                   allow_nan=False, allow_infinity=False)
coords = st.floats(min_value=-100.0, max_value=100.0,
                   allow_nan=False, allow_infinity=False)


def test_orient_fixed_cases():
    assert orient(Point2(0, 0), Point2(1, 0), Point2(0, 1)) == 1
    assert orient(Point2(0, 0), Point2(1, 0), Point2(2, 0)) == 0
    assert orient(Point2(0, 0), Point2(0, 1), Point2(1, 0)) == -1


@given(coords, coords, coords, coords, coords, coords)
def test_orient_antisymmetric(px, py, qx, qy, rx, ry):
    p, q, r = Point2(px, py), Point2(qx, qy), Point2(rx, ry)
    a = orient(p, q, r)
    b = orient(p, r, q)
    if a != 0 and b != 0:
        assert a == -b


def test_angle_of_fixed_cases():
    assert angle_of(Point2(1, 0)) == 0.0
    assert angle_of(Point2(0, 1)) == pytest.approx(math.pi / 2)
    assert angle_of(Point2(-1, -1)) == pytest.approx(5 * math.pi / 4)


def test_angle_of_zero_vector():
    with pytest.raises(ZeroVector):
        angle_of(Point2(0.0, 0.0))


def test_ccw_gap_fixed_cases():
    assert ccw_gap(0.0, math.pi / 2) == pytest.approx(math.pi / 2)
    assert ccw_gap(3 * math.pi / 2, math.pi / 4) == pytest.approx(3 * math.pi / 4)
    assert ccw_gap(math.pi, math.pi) == 0.0


@given(angles, angles)
def test_ccw_gap_round_trip(a, b):
    total = ccw_gap(a, b) + ccw_gap(b, a)
    assert (abs(total) < 1e-9 or abs(total - TWO_PI) < 1e-9)


@given(angles)
def test_canon_angle_range(theta):
    c = canon_angle(theta)
    assert 0.0 <= c < TWO_PI


def test_interval_sub_fixed_cases():
    assert interval_sub(Interval(5, 7), Interval(1, 2)) == Interval(3, 6)
    assert interval_sub(Interval(3, 3), Interval(1, 1)) == Interval(2, 2)
    assert interval_sub(Interval(0, 1), Interval(0, 1)) == Interval(-1, 1)


bounds = st.tuples(coords, coords).map(sorted)


@given(bounds, bounds, st.floats(0, 1), st.floats(0, 1))
def test_interval_sub_membership(ij, kl, t, u):
    i = Interval(*ij)
    j = Interval(*kl)
    d = interval_sub(i, j)
    assert d.lo <= d.hi
    a = i.lo + t * (i.hi - i.lo)
    b = j.lo + u * (j.hi - j.lo)
    assert d.lo - 1e-9 <= a - b <= d.hi + 1e-9


def test_interval_rejects_inverted():
    with pytest.raises(ValueError):
        Interval(2.0, 1.0)
