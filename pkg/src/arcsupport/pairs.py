"""Level scans for support-line pairs with triple touch points.

Both scans unroll the circle into a window of width one turn and read
the profile as a staircase.  The mountain scan anchors the window at
the minimum step, where the staircase rises to the apex and falls back;
the width of the staircase at level s, measured from the rising branch
to the falling branch, decreases from a full turn down to the apex
width as s climbs.  Finding the level whose width interval contains the
requested angle difference recovers the two support angles, and the
touch sets at those angles yield the triple: the line carrying two
parameters is a jump line, the other contributes the middle parameter.

The valley scan is the same machinery run upside down: anchor at the
apex step, scan the widths of the valley between two consecutive peaks
upward from the bottom.  A valley pair found at requested difference
delta spans delta across the minimum step, so the gap between its two
angles read the other way around the circle is 2*pi - delta; that
complementary gap is what the scan reports as realized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .arc import PolygonalArc, point_at
from .geometry import (DEFAULT_TOL, TWO_PI, Interval, Point2, Tolerances,
                       canon_angle, ccw_gap, circ_dist, interval_sub)
from .profile import (SupportProfile, filled_interval, touch_params)

MOUNTAIN = "mountain"
VALLEY = "valley"


class InvalidDelta(ValueError):
    """Requested angle difference outside (0, 2*pi)."""


@dataclass(frozen=True)
class TriplePair:
    """Result of a scan or an enumeration.

    theta_double carries gamma(s1) and gamma(s3); theta_single carries
    gamma(s2).  realized_gap is the counterclockwise gap between the two
    angles that matches the claimed difference of the respective scan.
    covers_apex / covers_min record which extreme step the gap side of
    the pair spans (used to classify enumerated configurations).
    """

    mode: str
    theta_double: float
    theta_single: float
    s1: float
    s2: float
    s3: float
    strict: bool
    requested_delta: float
    realized_gap: float
    guaranteed: bool = True
    near_tie: bool = False
    covers_apex: bool = False
    covers_min: bool = False

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.s1, self.s2, self.s3)


@dataclass(frozen=True)
class ScanStep:
    """One rung of the level-scan ledger: the parameter levels it spans
    and the interval of realizable angular widths there."""

    level_interval: Interval
    gap_interval: Interval
    band: bool  # True for the filled-in pieces between corner levels


@dataclass(frozen=True)
class TripleReport:
    """Outcome of verify_triple, one flag per check."""

    double_touches: bool
    single_touches: bool
    left_side: bool
    ordering: bool

    @property
    def passed(self) -> bool:
        return (self.double_touches and self.single_touches
                and self.left_side and self.ordering)


@dataclass(frozen=True)
class CorollaryResult:
    identical: bool
    mountain: TriplePair
    valley: TriplePair


# ---------------------------------------------------------------------------
# window construction and the width ledger

@dataclass(frozen=True)
class _Piece:
    level_lo: float
    level_hi: float
    gap: Interval
    left: Interval   # window positions on the rising side
    right: Interval  # window positions on the falling side
    band: bool


@dataclass(frozen=True)
class _Window:
    anchor: float                 # angle at window coordinate 0
    x_lo: tuple[float, ...]
    x_hi: tuple[float, ...]
    levels: tuple[float, ...]     # build levels (negated for the valley)
    total: float
    pieces: tuple[_Piece, ...]    # ascending by build level


def _build_window(profile: SupportProfile, mode: str) -> _Window:
    m = len(profile.steps)
    start = 0 if mode == MOUNTAIN else profile.apex_index
    order = [(start + i) % m for i in range(m)]
    widths = [profile.steps[i].width for i in order]
    x_lo, x_hi = [], []
    x = 0.0
    for w in widths:
        x_lo.append(x)
        x += w
        x_hi.append(x)
    total = x
    sign = 1.0 if mode == MOUNTAIN else -1.0
    levels = [sign * profile.steps[i].level for i in order]
    pieces = _build_pieces(x_lo, x_hi, levels, total)
    return _Window(profile.steps[start].start, tuple(x_lo), tuple(x_hi),
                   tuple(levels), total, tuple(pieces))


def _build_pieces(x_lo, x_hi, levels, total) -> list[_Piece]:
    """Ledger of width intervals for a rise-then-fall staircase.

    levels[0] must be the minimum.  Between two adjacent corner levels
    the rising and falling branches both sit at a jump, so the width is
    a single value; at a corner level one branch sweeps the corner's
    whole step, widening the piece to an interval.  Consecutive pieces
    share an endpoint, so the ledger tiles its full width range.
    """
    m = len(levels)
    k = max(range(m), key=lambda i: levels[i])

    def rise_pos(y: float) -> float:
        for i in range(1, k + 1):
            if levels[i - 1] < y < levels[i]:
                return x_lo[i]
        raise AssertionError(f"level {y} not on the rising branch")

    def fall_pos(y: float) -> float:
        for j in range(k, m):
            nxt = levels[j + 1] if j + 1 < m else levels[0]
            if nxt < y < levels[j]:
                return x_hi[j]
        raise AssertionError(f"level {y} not on the falling branch")

    pieces: list[_Piece] = []
    asc = sorted(range(m), key=lambda i: levels[i])
    for pos, i in enumerate(asc):
        lam = levels[i]
        if i == k:
            left = right = Interval(x_lo[k], x_hi[k])
        elif i == 0:
            left = Interval(x_lo[0], x_hi[0])
            right = Interval(total, total)
        elif i < k:
            left = Interval(x_lo[i], x_hi[i])
            fp = fall_pos(lam)
            right = Interval(fp, fp)
        else:
            rp = rise_pos(lam)
            left = Interval(rp, rp)
            right = Interval(x_lo[i], x_hi[i])
        pieces.append(_Piece(lam, lam, interval_sub(right, left),
                             left, right, band=False))
        if pos + 1 < m:
            nxt = levels[asc[pos + 1]]
            mid = 0.5 * (lam + nxt)
            rp, fp = rise_pos(mid), fall_pos(mid)
            pieces.append(_Piece(lam, nxt, Interval(fp - rp, fp - rp),
                                 Interval(rp, rp), Interval(fp, fp), band=True))
    return pieces


def scan_ledger(profile: SupportProfile, mode: str,
                tol: Tolerances = DEFAULT_TOL) -> list[ScanStep]:
    """Public view of the width ledger, ascending by true level."""
    win = _build_window(profile, mode)
    steps = []
    for p in win.pieces:
        if mode == MOUNTAIN:
            steps.append(ScanStep(Interval(p.level_lo, p.level_hi), p.gap, p.band))
        else:
            steps.append(ScanStep(Interval(-p.level_hi, -p.level_lo), p.gap, p.band))
    if mode == VALLEY:
        steps.reverse()
    return steps


def _scan(profile: SupportProfile, mode: str, delta: float,
          tol: Tolerances):
    """Find window positions x_left < x_right with x_right - x_left ==
    delta and a shared level certificate.  Walks the ledger from the
    shared-step end (apex for the mountain, bottom for the valley)
    toward wider pieces and takes the first piece containing delta."""
    win = _build_window(profile, mode)
    hit = None
    for piece in reversed(win.pieces):
        if piece.gap.contains(delta):
            hit = piece
            break
    if hit is None:  # requested gap beyond the ledger by rounding: clamp
        hit = win.pieces[0]

    if hit.right.degenerate:
        x_r = hit.right.lo
        x_l = min(max(x_r - delta, hit.left.lo), hit.left.hi)
    elif hit.left.degenerate:
        x_l = hit.left.lo
        x_r = min(max(x_l + delta, hit.right.lo), hit.right.hi)
    else:
        x_l = hit.left.lo
        x_r = x_l + delta
        if x_r > hit.right.hi:
            x_r = hit.right.hi
            x_l = max(x_r - delta, hit.left.lo)

    sign = 1.0 if mode == MOUNTAIN else -1.0
    level = sign * 0.5 * (hit.level_lo + hit.level_hi)
    near_tie = any(
        p.band and abs(delta - p.gap.lo) <= tol.eps_angle
        for p in win.pieces)
    theta_left = canon_angle(win.anchor + x_l)
    theta_right = canon_angle(win.anchor + x_r)
    return theta_left, theta_right, level, near_tie


def _assign_roles(profile: SupportProfile, theta_left: float,
                  theta_right: float, certificate: float,
                  tol: Tolerances):
    """Split the two angles into double and single lines.

    The double line must carry two parameters, so its touch set is a
    jump span; the single line contributes whichever of its touch
    parameters lands inside that span.  Strict assignments win; the
    remaining ties break toward the widest double span and smallest s2.
    """
    slack = profile.param_slack(tol)
    cands = []
    for theta_d, theta_s in ((theta_left, theta_right),
                             (theta_right, theta_left)):
        td = touch_params(profile, theta_d, tol)
        if len(td) < 2 or td[-1] - td[0] <= slack:
            continue
        s1, s3 = td[0], td[-1]
        for s2 in touch_params(profile, theta_s, tol):
            if s1 - slack <= s2 <= s3 + slack:
                strict = (s1 + slack < s2 < s3 - slack)
                s2c = min(max(s2, s1), s3)
                cands.append((strict, s3 - s1, theta_d, theta_s, s1, s2c, s3))
    if cands:
        cands.sort(key=lambda c: (not c[0], -c[1], c[5]))
        strict, _, theta_d, theta_s, s1, s2, s3 = cands[0]
        return theta_d, theta_s, s1, s2, s3, strict
    # both touch sets degenerate: report the certificate level flatly
    wide = max((theta_left, theta_right),
               key=lambda t: filled_interval(profile, t, tol).width)
    other = theta_right if wide == theta_left else theta_left
    iv = filled_interval(profile, wide, tol)
    s2 = min(max(certificate, iv.lo), iv.hi)
    return wide, other, iv.lo, s2, iv.hi, False


def _gap_side_covers(start: float, gap: float, step_start: float,
                     step_width: float, tol: Tolerances) -> bool:
    """Does the ccw arc of length gap starting at start contain the
    whole step [step_start, step_start + step_width]?"""
    off = ccw_gap(start, step_start)
    if off > TWO_PI - tol.eps_angle:
        off = 0.0
    return off + step_width <= gap + tol.eps_angle


def _find_pair(profile: SupportProfile, arc: PolygonalArc, delta: float,
               mode: str, tol: Tolerances) -> TriplePair:
    if not (0.0 < delta < TWO_PI):
        raise InvalidDelta(f"angle difference {delta} outside (0, 2*pi)")
    threshold = (profile.apex_step_width if mode == MOUNTAIN
                 else profile.min_step_width)
    guaranteed = delta >= threshold - tol.eps_angle

    theta_left, theta_right, level, near_tie = _scan(profile, mode, delta, tol)
    theta_d, theta_s, s1, s2, s3, strict = _assign_roles(
        profile, theta_left, theta_right, level, tol)

    if mode == MOUNTAIN:
        realized = ccw_gap(theta_left, theta_right)
    else:
        realized = ccw_gap(theta_right, theta_left)

    if not strict:
        # the scan landed degenerate; accept a strict configuration of the
        # same shape if the exhaustive search knows one at this gap
        rescue = [c for c in enumerate_triples(profile, arc, delta, tol)
                  if (c.covers_apex if mode == MOUNTAIN else c.covers_min)]
        if rescue:
            c = rescue[0]
            return TriplePair(mode, c.theta_double, c.theta_single,
                              c.s1, c.s2, c.s3, strict=True,
                              requested_delta=delta,
                              realized_gap=realized,
                              guaranteed=guaranteed, near_tie=near_tie,
                              covers_apex=c.covers_apex,
                              covers_min=c.covers_min)

    return TriplePair(mode, theta_d, theta_s, s1, s2, s3, strict,
                      requested_delta=delta, realized_gap=realized,
                      guaranteed=guaranteed, near_tie=near_tie,
                      covers_apex=(mode == MOUNTAIN),
                      covers_min=(mode == VALLEY))


def find_pair_mountain(profile: SupportProfile, arc: PolygonalArc,
                       delta: float,
                       tol: Tolerances = DEFAULT_TOL) -> TriplePair:
    """Pair of support lines whose angle difference, measured across the
    apex of the profile, is delta.

    Guaranteed strict for delta at least the apex step width; below
    that the result is flagged guaranteed=False and may be degenerate.
    """
    return _find_pair(profile, arc, delta, MOUNTAIN, tol)


def find_pair_valley(profile: SupportProfile, arc: PolygonalArc,
                     delta: float,
                     tol: Tolerances = DEFAULT_TOL) -> TriplePair:
    """Pair of support lines whose angle difference measured across the
    minimum step is delta; the complementary gap 2*pi - delta between
    the two angles is reported as realized_gap.

    Guaranteed strict for delta at least the minimum step width.
    """
    return _find_pair(profile, arc, delta, VALLEY, tol)


def safe_delta_range(profile: SupportProfile, mode: str) -> tuple[float, float]:
    """Open interval of differences for which the scan yields a strict
    triple on every arc."""
    if mode == MOUNTAIN:
        return (profile.apex_step_width, TWO_PI - profile.min_step_width)
    return (profile.min_step_width, TWO_PI - profile.apex_step_width)


def corollary_check(profile: SupportProfile, arc: PolygonalArc, delta: float,
                    tol: Tolerances = DEFAULT_TOL) -> CorollaryResult:
    """Run both scans at the same difference and compare the pairs as
    unordered angle sets with matching triples."""
    m = find_pair_mountain(profile, arc, delta, tol)
    v = find_pair_valley(profile, arc, delta, tol)
    slack = profile.param_slack(tol)

    def angles_match(a1, a2, b1, b2):
        return ((circ_dist(a1, b1) <= tol.eps_angle
                 and circ_dist(a2, b2) <= tol.eps_angle)
                or (circ_dist(a1, b2) <= tol.eps_angle
                    and circ_dist(a2, b1) <= tol.eps_angle))

    identical = (
        angles_match(m.theta_double, m.theta_single,
                     v.theta_double, v.theta_single)
        and all(abs(a - b) <= slack for a, b in zip(m.triple, v.triple))
        and m.strict == v.strict)
    return CorollaryResult(identical, m, v)


def enumerate_triples(profile: SupportProfile, arc: PolygonalArc, gap: float,
                      tol: Tolerances = DEFAULT_TOL) -> list[TriplePair]:
    """Every strict triple configuration whose two support angles are a
    counterclockwise gap apart (in either reading of the pair).

    The double line touches two parameters, so it must be a jump line;
    candidates are the jump angles paired with the angle gap away on
    either side.  Each surviving configuration records whether its gap
    side spans the apex step or the minimum step.
    """
    if not (0.0 < gap < TWO_PI):
        raise InvalidDelta(f"gap {gap} outside (0, 2*pi)")
    slack = profile.param_slack(tol)
    apex = profile.apex_step
    mins = profile.min_step
    found: dict[tuple, TriplePair] = {}
    for jump in profile.jumps:
        lo, hi = jump.low_param, jump.high_param
        if hi - lo <= slack:
            continue
        for sign in (+1.0, -1.0):
            psi = canon_angle(jump.angle + sign * gap)
            side_start = jump.angle if sign > 0 else psi
            for s2 in touch_params(profile, psi, tol):
                if not (lo + slack < s2 < hi - slack):
                    continue
                covers_apex = _gap_side_covers(side_start, gap,
                                               apex.start, apex.width, tol)
                covers_min = _gap_side_covers(side_start, gap,
                                              mins.start, mins.width, tol)
                key = (round(jump.angle, 9), round(psi, 9), round(s2, 9))
                prev = found.get(key)
                if prev is not None:
                    covers_apex = covers_apex or prev.covers_apex
                    covers_min = covers_min or prev.covers_min
                found[key] = TriplePair(
                    "enumerated", jump.angle, psi, lo, s2, hi, strict=True,
                    requested_delta=gap, realized_gap=gap,
                    covers_apex=covers_apex, covers_min=covers_min)
    anchor = profile.min_step.start
    return sorted(found.values(),
                  key=lambda c: (ccw_gap(anchor, c.theta_double),
                                 ccw_gap(anchor, c.theta_single), c.s2))


def jump_to_jump_gaps(profile: SupportProfile) -> list[float]:
    """All pairwise ccw gaps between jump angles; differences within
    tolerance of one of these are tie-prone and skipped by uniqueness
    campaigns."""
    angles = [j.angle for j in profile.jumps]
    out = []
    for a in angles:
        for b in angles:
            if a != b:
                out.append(ccw_gap(a, b))
    return sorted(out)


def _extreme_anchor(arc: PolygonalArc, theta: float) -> Point2:
    # vertex with the largest projection on the outward normal; an
    # independent reconstruction of the support line's position
    nx, ny = math.sin(theta), -math.cos(theta)
    return max(arc.vertices, key=lambda v: v.x * nx + v.y * ny)


def _line_distance(theta: float, anchor: Point2, p: Point2) -> float:
    dx, dy = math.cos(theta), math.sin(theta)
    return abs(dx * (p.y - anchor.y) - dy * (p.x - anchor.x))


def _all_left(theta: float, anchor: Point2, points: Iterable[Point2],
              slack: float) -> bool:
    dx, dy = math.cos(theta), math.sin(theta)
    return all(dx * (v.y - anchor.y) - dy * (v.x - anchor.x) >= -slack
               for v in points)


def verify_triple(arc: PolygonalArc, pair: TriplePair,
                  tol: Tolerances = DEFAULT_TOL) -> TripleReport:
    """Check a pair against the defining property, without the profile.

    (a) gamma(s1) and gamma(s3) lie on the support line at theta_double,
    (b) gamma(s2) lies on the support line at theta_single, both with
    the line position re-derived from the raw vertex projections;
    (c) every vertex is on the closed left of the lines through the
    claimed touch points; (d) the parameters are ordered, strictly so
    when the pair says strict.
    """
    dist_slack = tol.eps_touch * arc.diagonal
    param_slack = tol.eps_touch * max(arc.length, 1.0)

    d_anchor = _extreme_anchor(arc, pair.theta_double)
    s_anchor = _extreme_anchor(arc, pair.theta_single)
    p1 = point_at(arc, min(max(pair.s1, 0.0), arc.length))
    p2 = point_at(arc, min(max(pair.s2, 0.0), arc.length))
    p3 = point_at(arc, min(max(pair.s3, 0.0), arc.length))

    double_ok = (_line_distance(pair.theta_double, d_anchor, p1) <= dist_slack
                 and _line_distance(pair.theta_double, d_anchor, p3) <= dist_slack)
    single_ok = _line_distance(pair.theta_single, s_anchor, p2) <= dist_slack
    left_ok = (_all_left(pair.theta_double, p1, arc.vertices, dist_slack)
               and _all_left(pair.theta_single, p2, arc.vertices, dist_slack))
    if pair.strict:
        order_ok = (pair.s1 + param_slack < pair.s2 < pair.s3 - param_slack)
    else:
        order_ok = (pair.s1 <= pair.s2 + param_slack
                    and pair.s2 <= pair.s3 + param_slack)
    return TripleReport(double_ok, single_ok, left_ok, order_ok)
