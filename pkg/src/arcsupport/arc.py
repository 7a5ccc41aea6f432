"""Simple polygonal arcs with cumulative arc-length parameters.

An arc is an injective piecewise-linear curve given by its vertex chain.
Construction validates simpleness; after that the object is immutable
and safe to share.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import DEFAULT_TOL, Point2, Tolerances, orient


class ArcError(ValueError):
    """Base class for arc validation failures."""


class TooFewVertices(ArcError):
    pass


class DuplicateVertex(ArcError):
    pass


class SelfIntersecting(ArcError):
    pass


class ParamOutOfRange(ArcError):
    pass


@dataclass(frozen=True)
class PolygonalArc:
    """Validated simple polygonal arc.

    params[i] is the cumulative Euclidean length up to vertices[i];
    params[0] == 0 and params[-1] == length.
    """

    vertices: tuple[Point2, ...]
    params: tuple[float, ...]
    length: float
    diagonal: float  # bounding-box diagonal, the distance scale for tolerances

    def __len__(self) -> int:
        return len(self.vertices)


def _as_points(vertices: Iterable) -> list[Point2]:
    pts = []
    for v in vertices:
        p = v if isinstance(v, Point2) else Point2(float(v[0]), float(v[1]))
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise ArcError(f"non-finite vertex {p}")
        pts.append(p)
    return pts


def _bbox_diagonal(pts: Sequence[Point2]) -> float:
    dx = max(p.x for p in pts) - min(p.x for p in pts)
    dy = max(p.y for p in pts) - min(p.y for p in pts)
    return math.hypot(dx, dy)


def _segments_intersect(a1: Point2, a2: Point2, b1: Point2, b2: Point2,
                        tol: Tolerances) -> bool:
    """Closed-segment intersection test (touching counts)."""
    o1 = orient(a1, a2, b1, tol)
    o2 = orient(a1, a2, b2, tol)
    o3 = orient(b1, b2, a1, tol)
    o4 = orient(b1, b2, a2, tol)
    if o1 != o2 and o3 != o4:
        return True

    def on_segment(p: Point2, q: Point2, r: Point2) -> bool:
        # r collinear with pq; is it inside the box?
        return (min(p.x, q.x) <= r.x <= max(p.x, q.x)
                and min(p.y, q.y) <= r.y <= max(p.y, q.y))

    if o1 == 0 and on_segment(a1, a2, b1):
        return True
    if o2 == 0 and on_segment(a1, a2, b2):
        return True
    if o3 == 0 and on_segment(b1, b2, a1):
        return True
    if o4 == 0 and on_segment(b1, b2, a2):
        return True
    return False


def build_arc(vertices: Iterable, tol: Tolerances = DEFAULT_TOL) -> PolygonalArc:
    """Validate a vertex chain and attach cumulative length parameters.

    Raises TooFewVertices, DuplicateVertex or SelfIntersecting on bad
    input.  Consecutive collinear vertices are accepted (they merely
    subdivide a segment); exact back-tracking is rejected as non-simple.
    """
    pts = _as_points(vertices)
    if len(pts) < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {len(pts)}")
    diag = _bbox_diagonal(pts)
    if diag == 0.0:
        raise TooFewVertices("all vertices coincide")
    min_sep = tol.eps_touch * diag

    params = [0.0]
    for a, b in zip(pts, pts[1:]):
        step = a.dist(b)
        if step <= min_sep:
            raise DuplicateVertex(f"consecutive vertices coincide near {a}")
        params.append(params[-1] + step)

    # adjacent segments may share only the common vertex: no back-tracking
    for i in range(len(pts) - 2):
        a, b, c = pts[i], pts[i + 1], pts[i + 2]
        if orient(a, b, c, tol) == 0:
            u = b - a
            w = c - b
            if u.x * w.x + u.y * w.y < 0.0:
                raise SelfIntersecting(f"back-tracking at vertex {b}")

    # O(n^2) pairwise test over non-adjacent segments
    nseg = len(pts) - 1
    for i in range(nseg):
        for j in range(i + 2, nseg):
            if _segments_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1], tol):
                raise SelfIntersecting(
                    f"segments {i} and {j} intersect")

    return PolygonalArc(tuple(pts), tuple(params), params[-1], diag)


def point_at(arc: PolygonalArc, s: float) -> Point2:
    """Point at arc-length parameter s, by linear interpolation."""
    slack = 1e-12 * max(arc.length, 1.0)
    if s < -slack or s > arc.length + slack:
        raise ParamOutOfRange(f"parameter {s} outside [0, {arc.length}]")
    s = min(max(s, 0.0), arc.length)
    i = bisect_right(arc.params, s) - 1
    i = min(i, len(arc.vertices) - 2)
    a, b = arc.vertices[i], arc.vertices[i + 1]
    span = arc.params[i + 1] - arc.params[i]
    t = (s - arc.params[i]) / span
    return Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def scale_to_unit(arc: PolygonalArc) -> PolygonalArc:
    """Similarity-scale the arc (about the origin) to total length 1."""
    f = 1.0 / arc.length
    verts = tuple(Point2(p.x * f, p.y * f) for p in arc.vertices)
    params = tuple(t * f for t in arc.params)
    return PolygonalArc(verts, params, params[-1], arc.diagonal * f)
