"""Independent brute-force oracles and seeded random arc generation.

Everything here deliberately avoids the hull and profile machinery so
that agreement between the two routes is meaningful evidence.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .arc import ArcError, PolygonalArc, build_arc
from .geometry import DEFAULT_TOL, TWO_PI, Point2, Tolerances, canon_angle, orient
from .hull import StraightArc


class GenerationExhausted(RuntimeError):
    """Rejection sampling hit its retry cap without an acceptable arc."""


@dataclass(frozen=True)
class FuzzConfig:
    """Deterministic fuzz campaign settings.

    Trials are independent: the per-trial generator is seeded from
    (seed, trial index), so any subset can run in any order or in
    parallel with identical results.
    """

    trials: int = 100
    seed: int = 42
    vertex_range: tuple[int, int] = (4, 12)
    coordinate_box: float = 10.0
    delta_policy: str = "safe_range"  # safe_range | full_range | fixed
    fixed_delta: float | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.vertex_range[0] < 3 or self.vertex_range[0] > self.vertex_range[1]:
            raise ValueError(f"bad vertex_range {self.vertex_range}")
        if self.delta_policy not in ("safe_range", "full_range", "fixed"):
            raise ValueError(f"unknown delta policy {self.delta_policy}")
        if self.delta_policy == "fixed" and self.fixed_delta is None:
            raise ValueError("fixed delta policy needs fixed_delta")


def oracle_touch_params(arc: PolygonalArc, theta: float,
                        tol: Tolerances = DEFAULT_TOL,
                        slack_scale: float = 1.0) -> tuple[float, ...]:
    """Touch parameters at angle theta by direct vertex projection.

    Projects every vertex on the outward normal (theta - pi/2), keeps
    the vertices within slack of the extreme and returns the smallest
    and largest of their parameters.  No hull, no profile.
    """
    theta = canon_angle(theta)
    nx, ny = math.sin(theta), -math.cos(theta)
    proj = [v.x * nx + v.y * ny for v in arc.vertices]
    cut = max(proj) - tol.eps_touch * arc.diagonal * slack_scale
    cand = [arc.params[i] for i, p in enumerate(proj) if p >= cut]
    lo, hi = min(cand), max(cand)
    return (lo,) if lo == hi else (lo, hi)


def grid_scan_pairs(arc: PolygonalArc, gap: float,
                    resolution: float = TWO_PI / 100_000,
                    tol: Tolerances = DEFAULT_TOL) -> list[tuple[float, float]]:
    """Dense sweep locating strict triple configurations at a given gap.

    For every grid angle theta the projection touch sets at theta and
    theta + gap are formed; a hit is a grid angle where one set spans
    two parameters with a member of the other strictly inside.
    Consecutive hits cluster into one candidate pair (theta, theta+gap).

    The touch slack is widened to resolution scale: a jump is only
    visible from a grid point when the runner-up corner still projects
    within the slack, which needs roughly diagonal * resolution.  The
    eps-scale slack used elsewhere would miss every jump.
    """
    if resolution <= 0.0:
        raise ValueError("resolution must be positive")
    k = max(8, int(round(TWO_PI / resolution)))
    thetas = np.arange(k) * (TWO_PI / k)
    xs = np.array([v.x for v in arc.vertices])
    ys = np.array([v.y for v in arc.vertices])
    prm = np.array(arc.params)
    slack = arc.diagonal * max(10.0 * tol.eps_touch, 0.75 * (TWO_PI / k))

    def touch_bounds(angles: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        nx, ny = np.sin(angles), -np.cos(angles)
        proj = xs[:, None] * nx[None, :] + ys[:, None] * ny[None, :]
        mask = proj >= proj.max(axis=0) - slack
        lo = np.where(mask, prm[:, None], np.inf).min(axis=0)
        hi = np.where(mask, prm[:, None], -np.inf).max(axis=0)
        return lo, hi

    lo1, hi1 = touch_bounds(thetas)
    lo2, hi2 = touch_bounds(thetas + gap)
    margin = tol.eps_touch * max(arc.length, 1.0)

    def strict_inside(v, lo, hi):
        return (lo + margin < v) & (v < hi - margin)

    hits = (((hi1 - lo1 > margin)
             & (strict_inside(lo2, lo1, hi1) | strict_inside(hi2, lo1, hi1)))
            | ((hi2 - lo2 > margin)
               & (strict_inside(lo1, lo2, hi2) | strict_inside(hi1, lo2, hi2))))

    idx = np.flatnonzero(hits)
    if idx.size == 0:
        return []
    clusters = []
    run = [idx[0]]
    for i in idx[1:]:
        if i == run[-1] + 1:
            run.append(i)
        else:
            clusters.append(run)
            run = [i]
    clusters.append(run)
    # wrap-around: join a cluster ending at k-1 with one starting at 0
    if len(clusters) > 1 and clusters[0][0] == 0 and clusters[-1][-1] == k - 1:
        clusters[0] = clusters.pop() + clusters[0]

    res = TWO_PI / k
    pairs = []
    for run in clusters:
        mid = float(thetas[run[len(run) // 2]])
        pairs.append((canon_angle(mid), canon_angle(mid + gap)))
    # at gap pi the same unordered pair is seen from both of its angles
    deduped: list[tuple[float, float]] = []
    for a, b in pairs:
        dup = any(
            (min(abs(a - c), TWO_PI - abs(a - c)) <= 2 * res
             and min(abs(b - d), TWO_PI - abs(b - d)) <= 2 * res)
            or (min(abs(a - d), TWO_PI - abs(a - d)) <= 2 * res
                and min(abs(b - c), TWO_PI - abs(b - c)) <= 2 * res)
            for c, d in deduped)
        if not dup:
            deduped.append((a, b))
    return deduped


def monotone_chain_hull(points: list[Point2],
                        tol: Tolerances = DEFAULT_TOL) -> list[int]:
    """Andrew's monotone-chain hull: counterclockwise corner indices.

    Strict corners only; collinear points are dropped.  This is the
    reference against which the online hull is checked.
    """
    n = len(points)
    if n < 3:
        raise StraightArc("need at least 3 points")
    order = sorted(range(n), key=lambda i: (points[i].x, points[i].y))

    def half(idxs):
        chain: list[int] = []
        for i in idxs:
            while (len(chain) >= 2
                   and orient(points[chain[-2]], points[chain[-1]],
                              points[i], tol) <= 0):
                chain.pop()
            chain.append(i)
        return chain

    lower = half(order)
    upper = half(reversed(order))
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:
        raise StraightArc("all points collinear within tolerance")
    return cycle


def random_simple_arc(config: FuzzConfig, trial_index: int,
                      tol: Tolerances = DEFAULT_TOL,
                      max_rejections: int = 10_000) -> PolygonalArc:
    """Deterministic rejection-sampled simple, non-straight arc.

    Vertices are drawn uniformly in the coordinate box; candidates that
    fail validation or are straight are redrawn.  The same (seed,
    trial_index) always yields the same arc.
    """
    rng = random.Random(f"{config.seed}:{trial_index}")
    lo_n, hi_n = config.vertex_range
    box = config.coordinate_box
    for _ in range(max_rejections):
        n = rng.randint(lo_n, hi_n)
        pts = [Point2(rng.uniform(0.0, box), rng.uniform(0.0, box))
               for _ in range(n)]
        try:
            arc = build_arc(pts, tol)
        except ArcError:
            continue
        try:
            monotone_chain_hull(list(arc.vertices), tol)
        except StraightArc:
            continue
        return arc
    raise GenerationExhausted(
        f"no simple arc after {max_rejections} draws (trial {trial_index})")


def draw_delta(config: FuzzConfig, trial_index: int, mode: str,
               safe_range: tuple[float, float],
               margin: float = 1e-3) -> float:
    """Per-trial difference draw under the configured policy."""
    if config.delta_policy == "fixed":
        return float(config.fixed_delta)
    rng = random.Random(f"{config.seed}:{trial_index}:delta:{mode}")
    if config.delta_policy == "safe_range":
        lo, hi = safe_range[0] + margin, safe_range[1] - margin
        if hi <= lo:  # extremely wide corner steps; fall back to the middle
            return 0.5 * (safe_range[0] + safe_range[1])
        return rng.uniform(lo, hi)
    return rng.uniform(1e-6, TWO_PI - 1e-6)
