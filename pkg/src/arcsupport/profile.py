"""Step-function profile of the support touch parameters.

For each support angle theta, the support line (arc on its closed left
side) touches the arc at one or two parameters.  Swept over a full
turn this is a step function: one step per hull corner, whose width is
the corner's exterior angle, plus a two-valued jump wherever a hull
edge lies on the line.  The profile stores this combinatorial object
symbolically, so every downstream scan is exact up to atan2 rounding.

Reading the steps counterclockwise from the minimum-parameter corner,
levels rise strictly to the maximum-parameter corner and then fall
strictly back; the package relies on that unimodal shape and verifies
it at construction time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arc import PolygonalArc, point_at
from .geometry import (DEFAULT_TOL, TWO_PI, Interval, Point2, Tolerances,
                       canon_angle, ccw_gap, circ_dist)
from .hull import Hull, corner_steps


class MalformedFunction(ValueError):
    """Breakpoint input is not strictly unimodal as required."""


@dataclass(frozen=True)
class ProfileStep:
    """Maximal angular interval on which the touch set is one constant
    parameter (the corner's level)."""

    start: float
    end: float
    width: float
    level: float
    corner_point: Point2


@dataclass(frozen=True)
class Jump:
    """Angle where a hull edge lies on the support line.

    prev_level / next_level are the levels of the steps before and
    after the jump in counterclockwise order; span is the same pair as
    a [min, max] interval.
    """

    angle: float
    span: Interval
    low_param: float
    high_param: float
    prev_level: float
    next_level: float


@dataclass(frozen=True)
class SupportProfile:
    """Full step representation over one period.

    steps are in counterclockwise order starting at the minimum-level
    step; jumps[i] sits at steps[i].start (so jumps[0] is the wrap jump
    into the minimum step).
    """

    steps: tuple[ProfileStep, ...]
    jumps: tuple[Jump, ...]
    min_step_width: float    # exterior angle at the minimum-parameter corner
    apex_step_width: float   # exterior angle at the maximum-parameter corner
    apex_index: int

    @property
    def min_step(self) -> ProfileStep:
        return self.steps[0]

    @property
    def apex_step(self) -> ProfileStep:
        return self.steps[self.apex_index]

    @property
    def levels(self) -> tuple[float, ...]:
        return tuple(s.level for s in self.steps)

    @property
    def max_level(self) -> float:
        return self.apex_step.level

    def param_slack(self, tol: Tolerances = DEFAULT_TOL) -> float:
        return tol.eps_touch * max(self.max_level, 1.0)


@dataclass(frozen=True)
class DirectedLine:
    """Support line: direction angle plus one touch point, with every
    arc vertex on the closed left side."""

    theta: float
    anchor: Point2


def build_profile(hull: Hull, tol: Tolerances = DEFAULT_TOL) -> SupportProfile:
    """Assemble the step/jump profile from a hull.

    Fills corner steps if the hull does not carry them yet, rotates the
    cycle so the minimum-level step comes first, and checks the
    rise-then-fall shape of the level sequence.
    """
    if hull.corners and hull.corners[0].step_start is None:
        hull = corner_steps(hull, tol)

    corners = hull.corners
    m = len(corners)
    start = min(range(m), key=lambda i: corners[i].param)
    ordered = corners[start:] + corners[:start]

    steps = tuple(
        ProfileStep(c.step_start, c.step_end, c.exterior_angle, c.param, c.point)
        for c in ordered)
    jumps = []
    for i, step in enumerate(steps):
        prev = steps[i - 1]
        lo, hi = sorted((prev.level, step.level))
        jumps.append(Jump(step.start, Interval(lo, hi), lo, hi,
                          prev.level, step.level))

    levels = [s.level for s in steps]
    apex = max(range(m), key=lambda i: levels[i])
    rising = levels[:apex + 1]
    falling = levels[apex:] + [levels[0]]
    if (any(a >= b for a, b in zip(rising, rising[1:]))
            or any(a <= b for a, b in zip(falling, falling[1:]))):
        raise ValueError(f"level sequence {levels} is not rise-then-fall")

    return SupportProfile(steps, tuple(jumps),
                          min_step_width=steps[0].width,
                          apex_step_width=steps[apex].width,
                          apex_index=apex)


def touch_params(profile: SupportProfile, theta: float,
                 tol: Tolerances = DEFAULT_TOL) -> tuple[float, ...]:
    """Touch parameters of the support line at angle theta.

    One value strictly inside a step, two at a jump.  Queries within
    eps_angle of a jump angle resolve to the jump (the constructions
    select jump angles, so the boundary belongs to them).
    """
    theta = canon_angle(theta)
    for jump in profile.jumps:
        if circ_dist(theta, jump.angle) <= tol.eps_angle:
            return (jump.low_param, jump.high_param)
    for step in profile.steps:
        if ccw_gap(step.start, theta) < step.width:
            return (step.level,)
    # numerically between two steps; snap to the nearest jump
    nearest = min(profile.jumps, key=lambda j: circ_dist(theta, j.angle))
    return (nearest.low_param, nearest.high_param)


def filled_interval(profile: SupportProfile, theta: float,
                    tol: Tolerances = DEFAULT_TOL) -> Interval:
    """[min, max] of the touch set: the jump span at a jump angle,
    degenerate inside a step."""
    t = touch_params(profile, theta, tol)
    return Interval(t[0], t[-1])


def cross_section(profile: SupportProfile, s: float,
                  tol: Tolerances = DEFAULT_TOL) -> tuple[float, float] | None:
    """Closure of the set of angles whose support line touches parameter s.

    For a corner level this is the corner's step (a circular interval
    of width < pi, returned as a (start, end) pair); for any other
    parameter it is empty (None).
    """
    slack = profile.param_slack(tol)
    for step in profile.steps:
        if abs(step.level - s) <= slack:
            return (step.start, step.end)
    return None


def support_line(profile: SupportProfile, arc: PolygonalArc, theta: float,
                 tol: Tolerances = DEFAULT_TOL) -> DirectedLine:
    """Support line of angle theta, anchored at the touch point with the
    smallest parameter."""
    theta = canon_angle(theta)
    anchor = point_at(arc, min(touch_params(profile, theta, tol)))
    dx, dy = math.cos(theta), math.sin(theta)
    slack = tol.eps_touch * arc.diagonal
    for v in arc.vertices:
        side = dx * (v.y - anchor.y) - dy * (v.x - anchor.x)
        if side < -slack:
            raise ValueError(
                f"vertex {v} falls on the right of the support line at {theta}")
    return DirectedLine(theta, anchor)


def unique_crossing(breakpoints: Sequence[tuple[float, float]], delta: float,
                    y_tol: float = 1e-15) -> float:
    """Unique x with f(x) == f(x + delta) for a strictly unimodal
    piecewise-linear f on [0, 2*pi] with f(0) = f(2*pi) = 0 and peak 1.

    Solves by bisection on the level y: the spread between the falling
    and rising branch inverses decreases continuously from 2*pi to 0, so
    it crosses delta exactly once.
    """
    if not (0.0 < delta < TWO_PI):
        raise MalformedFunction(f"delta {delta} outside (0, 2*pi)")
    xs = [float(x) for x, _ in breakpoints]
    ys = [float(y) for _, y in breakpoints]
    if len(xs) < 3:
        raise MalformedFunction("need at least 3 breakpoints")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise MalformedFunction("breakpoint abscissae must strictly increase")
    if abs(xs[0]) > 1e-12 or abs(xs[-1] - TWO_PI) > 1e-12:
        raise MalformedFunction("domain must be [0, 2*pi]")
    if abs(ys[0]) > 1e-12 or abs(ys[-1]) > 1e-12:
        raise MalformedFunction("endpoints must sit at level 0")
    peak = max(range(len(ys)), key=lambda i: ys[i])
    if peak in (0, len(ys) - 1) or abs(ys[peak] - 1.0) > 1e-12:
        raise MalformedFunction("peak must be 1 at an interior breakpoint")
    rising = ys[:peak + 1]
    falling = ys[peak:]
    if any(b <= a for a, b in zip(rising, rising[1:])):
        raise MalformedFunction("not strictly increasing before the peak")
    if any(b >= a for a, b in zip(falling, falling[1:])):
        raise MalformedFunction("not strictly decreasing after the peak")

    def inv(branch_x: list[float], branch_y: list[float], y: float) -> float:
        # branch_y strictly monotone; linear interpolation of the inverse
        if branch_y[0] <= branch_y[-1]:
            pairs = list(zip(branch_y, branch_x))
        else:
            pairs = list(zip(reversed(branch_y), reversed(branch_x)))
        for (y0, x0), (y1, x1) in zip(pairs, pairs[1:]):
            if y0 <= y <= y1:
                if y1 == y0:
                    return x0
                return x0 + (y - y0) * (x1 - x0) / (y1 - y0)
        return pairs[-1][1]

    rise_x, rise_y = xs[:peak + 1], ys[:peak + 1]
    fall_x, fall_y = xs[peak:], ys[peak:]

    def spread(y: float) -> float:
        return inv(fall_x, fall_y, y) - inv(rise_x, rise_y, y)

    lo, hi = 0.0, 1.0  # spread(0) = 2*pi, spread(1) = 0
    while hi - lo > y_tol:
        mid = 0.5 * (lo + hi)
        if spread(mid) > delta:
            lo = mid
        else:
            hi = mid
    y = 0.5 * (lo + hi)
    return inv(rise_x, rise_y, y)
