"""Convex hull of a polygonal arc with per-corner arc parameters.

Melkman's online deque algorithm runs in linear time on a simple
polyline.  Hull vertices that are interior to a hull edge (collinear
within tolerance) are merged away, so every remaining corner makes a
strict turn and carries a positive angular step.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, replace

from .arc import PolygonalArc
from .geometry import DEFAULT_TOL, Point2, Tolerances, angle_of, ccw_gap, orient


class StraightArc(ValueError):
    """All vertices collinear within tolerance: the hull has no corners."""


@dataclass(frozen=True)
class HullCorner:
    """Hull corner with its arc parameter and angular support step.

    The step [step_start, step_end] (counterclockwise, on the circle) is
    the closure of the set of support angles at which the support line
    touches exactly this corner.  exterior_angle is its width.
    """

    point: Point2
    param: float
    step_start: float | None = None
    step_end: float | None = None
    exterior_angle: float | None = None


@dataclass(frozen=True)
class Hull:
    """Corners in counterclockwise boundary order, starting at the
    corner with the smallest arc parameter."""

    corners: tuple[HullCorner, ...]

    def __len__(self) -> int:
        return len(self.corners)


def _strict_left(a: Point2, b: Point2, c: Point2, tol: Tolerances) -> bool:
    return orient(a, b, c, tol) > 0


def melkman_hull(arc: PolygonalArc, tol: Tolerances = DEFAULT_TOL) -> Hull:
    """Convex hull of the arc's vertex chain via Melkman's algorithm.

    Returns corners in counterclockwise order with their arc parameters.
    Raises StraightArc when every vertex is collinear within tolerance.
    """
    items = list(enumerate(arc.vertices))

    # collapse a collinear prefix so the deque starts from a strict turn
    first = items[0]
    last = items[1]
    rest_start = 2
    turn = None
    for k in range(2, len(items)):
        o = orient(first[1], last[1], items[k][1], tol)
        if o == 0:
            last = items[k]
            rest_start = k + 1
        else:
            turn = items[k]
            rest_start = k + 1
            break
    if turn is None:
        raise StraightArc("all vertices collinear within tolerance")

    if orient(first[1], last[1], turn[1], tol) > 0:
        hull = deque([turn, first, last, turn])
    else:
        hull = deque([turn, last, first, turn])

    for item in items[rest_start:]:
        p = item[1]
        if (_strict_left(hull[-2][1], hull[-1][1], p, tol)
                and _strict_left(p, hull[0][1], hull[1][1], tol)):
            continue  # interior point
        while len(hull) > 2 and not _strict_left(hull[-2][1], hull[-1][1], p, tol):
            hull.pop()
        hull.append(item)
        while len(hull) > 2 and not _strict_left(item[1], hull[0][1], hull[1][1], tol):
            hull.popleft()
        hull.appendleft(item)

    cycle = list(hull)[:-1]  # drop the duplicated seam entry

    # sweep out any collinear corners the deque seam may have left behind
    changed = True
    while changed and len(cycle) > 2:
        changed = False
        for i in range(len(cycle)):
            a = cycle[i - 1][1]
            b = cycle[i][1]
            c = cycle[(i + 1) % len(cycle)][1]
            if orient(a, b, c, tol) <= 0:
                del cycle[i]
                changed = True
                break
    if len(cycle) < 3:
        raise StraightArc("hull degenerates to a segment within tolerance")

    area2 = 0.0
    for i in range(len(cycle)):
        p, q = cycle[i][1], cycle[(i + 1) % len(cycle)][1]
        area2 += p.x * q.y - p.y * q.x
    if area2 < 0.0:
        cycle.reverse()

    start = min(range(len(cycle)), key=lambda i: arc.params[cycle[i][0]])
    cycle = cycle[start:] + cycle[:start]
    corners = tuple(HullCorner(pt, arc.params[idx]) for idx, pt in cycle)
    return Hull(corners)


def corner_steps(hull: Hull, tol: Tolerances = DEFAULT_TOL) -> Hull:
    """Fill each corner's angular step interval and exterior angle.

    For corner B with counterclockwise neighbours A (incoming) and C
    (outgoing), the step runs from the direction of A->B to the
    direction of B->C; the support line for angles strictly inside the
    step touches exactly B.
    """
    m = len(hull.corners)
    if m < 3:
        raise StraightArc("need at least 3 corners for angular steps")
    out = []
    for i, corner in enumerate(hull.corners):
        a = hull.corners[(i - 1) % m].point
        b = corner.point
        c = hull.corners[(i + 1) % m].point
        start = angle_of(b - a)
        end = angle_of(c - b)
        ext = ccw_gap(start, end)
        if not (tol.eps_angle < ext < math.pi):
            raise StraightArc(
                f"degenerate exterior angle {ext} at corner {b}")
        out.append(replace(corner, step_start=start, step_end=end,
                           exterior_angle=ext))
    return Hull(tuple(out))
