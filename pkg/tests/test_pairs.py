import math
import random

import pytest

from arcsupport import (MOUNTAIN, VALLEY, InvalidDelta, Tolerances, ccw_gap,
                        circ_dist, corollary_check, enumerate_triples,
                        find_pair_mountain, find_pair_valley,
                        jump_to_jump_gaps, safe_delta_range, scan_ledger,
                        verify_triple)

PI = math.pi
ATAN_HALF = math.atan(0.5)
VERIFY_TOL = Tolerances(eps_touch=1e-7)


def test_mountain_e1_pi(e1, e1_profile):
    pair = find_pair_mountain(e1_profile, e1, PI)
    assert pair.theta_single == pytest.approx(PI / 4, abs=1e-9)
    assert pair.theta_double == pytest.approx(5 * PI / 4, abs=1e-9)
    assert pair.triple == pytest.approx((0.0, 1.0, 2.0), abs=1e-9)
    assert pair.strict and pair.guaranteed
    assert pair.realized_gap == pytest.approx(PI, abs=1e-9)


def test_mountain_e1_boundary_width(e1, e1_profile):
    # requested difference equal to the apex step width: the maximum-
    # parameter corner ends up on both lines
    pair = find_pair_mountain(e1_profile, e1, 3 * PI / 4)
    assert pair.theta_single == pytest.approx(PI / 2, abs=1e-9)
    assert pair.theta_double == pytest.approx(5 * PI / 4, abs=1e-9)
    assert pair.triple == pytest.approx((0.0, 1.0, 2.0), abs=1e-9)
    assert pair.strict
    assert pair.s3 == pytest.approx(2.0)  # gamma(2) on the double line
    # ... and it is on the single line too: the single angle is a jump
    from arcsupport import touch_params
    assert 2.0 in touch_params(e1_profile, pair.theta_single)


def test_mountain_e2_pi(e2, e2_profile):
    pair = find_pair_mountain(e2_profile, e2, PI)
    assert pair.theta_single == pytest.approx(ATAN_HALF, abs=1e-9)
    assert pair.theta_double == pytest.approx(PI + ATAN_HALF, abs=1e-9)
    assert pair.triple == pytest.approx((0.0, 3.0, 5.0), abs=1e-9)
    assert pair.strict


def test_valley_e1_pi_matches_mountain(e1, e1_profile):
    v = find_pair_valley(e1_profile, e1, PI)
    m = find_pair_mountain(e1_profile, e1, PI)
    assert circ_dist(v.theta_single, m.theta_single) < 1e-9
    assert circ_dist(v.theta_double, m.theta_double) < 1e-9
    assert v.triple == pytest.approx(m.triple)


def test_valley_e2_pi(e2, e2_profile):
    pair = find_pair_valley(e2_profile, e2, PI)
    assert pair.theta_single == pytest.approx(ATAN_HALF, abs=1e-9)
    assert pair.theta_double == pytest.approx(PI + ATAN_HALF, abs=1e-9)
    assert pair.triple == pytest.approx((0.0, 3.0, 5.0), abs=1e-9)
    assert pair.realized_gap == pytest.approx(PI, abs=1e-9)


def test_valley_e1_degenerate(e1, e1_profile):
    pair = find_pair_valley(e1_profile, e1, 3 * PI / 2)
    assert not pair.strict
    assert pair.realized_gap == pytest.approx(PI / 2, abs=1e-9)
    # no strict triple exists at the complementary gap either
    assert enumerate_triples(e1_profile, e1, PI / 2) == []


def test_mountain_e1_beyond_strict_regime(e1, e1_profile):
    pair = find_pair_mountain(e1_profile, e1, 11 * PI / 8)
    assert not pair.strict
    assert pair.guaranteed  # within the stated difference range, yet degenerate
    assert enumerate_triples(e1_profile, e1, 11 * PI / 8) == []
    report = verify_triple(e1, pair)
    assert report.ordering  # degenerate outcomes are still well formed


def test_invalid_delta(e1, e1_profile):
    for bad in (0.0, -1.0, 2 * PI, 7.0):
        with pytest.raises(InvalidDelta):
            find_pair_mountain(e1_profile, e1, bad)
        with pytest.raises(InvalidDelta):
            find_pair_valley(e1_profile, e1, bad)


def test_below_guarantee_flagged(e2, e2_profile):
    pair = find_pair_valley(e2_profile, e2, 2.0)  # below the min step width
    assert not pair.guaranteed
    assert not pair.strict


def test_corollary_identical_at_pi(e1, e1_profile, e2, e2_profile):
    assert corollary_check(e1_profile, e1, PI).identical
    assert corollary_check(e2_profile, e2, PI).identical


def test_corollary_differs_off_pi(e2, e2_profile):
    res = corollary_check(e2_profile, e2, 2.0)
    assert res.mountain.strict
    assert not res.identical


def test_scans_differ_off_pi_strict(e1, e1_profile):
    # 3.0 is in the strict range of both scans for E1 and is not pi
    m = find_pair_mountain(e1_profile, e1, 3.0)
    v = find_pair_valley(e1_profile, e1, 3.0)
    assert m.strict and v.strict
    assert circ_dist(m.theta_single, v.theta_single) > 1e-6
    assert not corollary_check(e1_profile, e1, 3.0).identical


def test_enumerate_fixtures(e1, e1_profile, e2, e2_profile):
    assert len(enumerate_triples(e1_profile, e1, PI)) == 1
    assert enumerate_triples(e1_profile, e1, PI / 2) == []
    assert len(enumerate_triples(e2_profile, e2, PI)) == 1


def test_enumerate_classifies_both_kinds(e1, e1_profile):
    configs = enumerate_triples(e1_profile, e1, 3.0)
    assert len(configs) == 2
    assert sum(1 for c in configs if c.covers_apex) == 1
    assert sum(1 for c in configs if c.covers_min) == 1
    for c in configs:
        assert verify_triple(e1, c).passed


def test_enumerate_contains_scan_results(fuzz_pool):
    rng = random.Random(17)
    for arc, profile in fuzz_pool[:150]:
        for mode, finder in ((MOUNTAIN, find_pair_mountain),
                             (VALLEY, find_pair_valley)):
            lo, hi = safe_delta_range(profile, mode)
            delta = rng.uniform(lo + 1e-3, hi - 1e-3)
            pair = finder(profile, arc, delta)
            assert pair.strict
            configs = enumerate_triples(profile, arc, delta)
            hit = [c for c in configs
                   if circ_dist(c.theta_double, pair.theta_double) < 1e-9
                   and circ_dist(c.theta_single, pair.theta_single) < 1e-9]
            assert hit, (mode, delta)
            tie = any(abs(delta - g) <= 1e-6
                      for g in jump_to_jump_gaps(profile))
            if not tie:
                typed = [c for c in configs
                         if (c.covers_apex if mode == MOUNTAIN else c.covers_min)]
                assert len(typed) == 1


def test_every_scan_output_verifies(fuzz_pool):
    rng = random.Random(31)
    for arc, profile in fuzz_pool[:150]:
        for mode, finder in ((MOUNTAIN, find_pair_mountain),
                             (VALLEY, find_pair_valley)):
            lo, hi = safe_delta_range(profile, mode)
            delta = rng.uniform(lo + 1e-3, hi - 1e-3)
            pair = finder(profile, arc, delta)
            assert verify_triple(arc, pair, VERIFY_TOL).passed


def test_ledger_monotone(fuzz_pool):
    for _, profile in fuzz_pool[:200]:
        for mode in (MOUNTAIN, VALLEY):
            ledger = scan_ledger(profile, mode)
            gaps = [s.gap_interval for s in ledger]
            for a, b in zip(gaps, gaps[1:]):
                if mode == MOUNTAIN:
                    # ascending level: widths shrink, adjacent rungs share
                    assert b.hi <= a.hi + 1e-12 and b.lo <= a.lo + 1e-12
                    assert abs(a.lo - b.hi) < 1e-9
                else:
                    # ascending level: widths grow
                    assert b.hi >= a.hi - 1e-12 and b.lo >= a.lo - 1e-12
                    assert abs(a.hi - b.lo) < 1e-9


def test_verify_rejects_doctored_pairs(e1, e1_profile):
    good = find_pair_mountain(e1_profile, e1, PI)
    from dataclasses import replace
    off_line = replace(good, s2=1.5)
    assert not verify_triple(e1, off_line).single_touches
    wrong_angle = replace(good, theta_double=PI / 4)
    report = verify_triple(e1, wrong_angle)
    assert not (report.double_touches and report.left_side)
    unordered = replace(good, s1=1.8, strict=True)
    assert not verify_triple(e1, unordered).ordering


def test_realized_gap_conventions(e2, e2_profile):
    m = find_pair_mountain(e2_profile, e2, 2.0)
    assert m.realized_gap == pytest.approx(2.0, abs=1e-9)
    v = find_pair_valley(e2_profile, e2, 4.0)
    assert v.strict
    assert v.realized_gap == pytest.approx(2 * PI - 4.0, abs=1e-9)
    assert ccw_gap(v.theta_single, v.theta_double) == pytest.approx(
        2 * PI - 4.0, abs=1e-9)


def test_safe_range_covers_pi(fuzz_pool):
    for _, profile in fuzz_pool[:300]:
        for mode in (MOUNTAIN, VALLEY):
            lo, hi = safe_delta_range(profile, mode)
            assert lo < PI < hi
