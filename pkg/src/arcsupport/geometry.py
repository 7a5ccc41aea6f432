"""Plane primitives: points, canonical angles, intervals, tolerances.

All angle values in the package are plain radians canonicalized to
[0, 2*pi).  Wrap-around reasoning goes through :func:`ccw_gap` so there
is exactly one place the circle gets unrolled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


class ZeroVector(ValueError):
    """A direction was requested for the zero vector."""


@dataclass(frozen=True)
class Point2:
    """Point (or free vector) in the plane."""

    x: float
    y: float

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def dist(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; degenerate (lo == hi) allowed."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (self.lo <= self.hi):
            raise ValueError(f"interval with lo > hi: [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack


@dataclass(frozen=True)
class Tolerances:
    """Scale-relative tolerance policy.

    eps_orient applies to cross products scaled by the squared span of
    the inputs, eps_angle to radians, eps_touch to distances relative to
    a bounding-box diagonal (and to arc parameters relative to length).
    """

    eps_orient: float = 1e-12
    eps_angle: float = 1e-9
    eps_touch: float = 1e-9

    def __post_init__(self) -> None:
        if min(self.eps_orient, self.eps_angle, self.eps_touch) <= 0.0:
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerances()


def canon_angle(theta: float) -> float:
    """Map any radian value into [0, 2*pi)."""
    r = math.fmod(theta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:  # fmod can round up to 2*pi for tiny negatives
        r -= TWO_PI
    return r


def angle_of(v: Point2) -> float:
    """Canonical direction angle of a nonzero vector."""
    if v.x == 0.0 and v.y == 0.0:
        raise ZeroVector("cannot take the angle of the zero vector")
    return canon_angle(math.atan2(v.y, v.x))


def ccw_gap(a: float, b: float) -> float:
    """Counterclockwise angular distance from a to b, in [0, 2*pi)."""
    return canon_angle(b - a)


def circ_dist(a: float, b: float) -> float:
    """Shorter angular distance between a and b (undirected)."""
    g = ccw_gap(a, b)
    return min(g, TWO_PI - g)


def orient(p: Point2, q: Point2, r: Point2, tol: Tolerances = DEFAULT_TOL) -> int:
    """Orientation of r relative to the directed line p -> q.

    Returns +1 if r is strictly to the left, -1 strictly to the right,
    0 if collinear within eps_orient scaled by the squared span of the
    three points.
    """
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    dx = max(p.x, q.x, r.x) - min(p.x, q.x, r.x)
    dy = max(p.y, q.y, r.y) - min(p.y, q.y, r.y)
    thr = tol.eps_orient * (dx * dx + dy * dy)
    if abs(cross) <= thr:
        return 0
    return 1 if cross > 0.0 else -1


def interval_sub(i: Interval, j: Interval) -> Interval:
    """Pointwise difference {a - b | a in i, b in j}."""
    return Interval(i.lo - j.hi, i.hi - j.lo)
