"""Support-line structure of simple polygonal arcs.

Builds the angular step profile of where support lines touch an arc,
scans it for pairs of support lines with a prescribed angle difference
carrying triple touch points, and ships brute-force oracles to check
every claim at desk scale.
"""

from .arc import (ArcError, DuplicateVertex, ParamOutOfRange, PolygonalArc,
                  SelfIntersecting, TooFewVertices, build_arc, point_at,
                  scale_to_unit)
from .geometry import (DEFAULT_TOL, TWO_PI, Interval, Point2, Tolerances,
                       ZeroVector, angle_of, canon_angle, ccw_gap, circ_dist,
                       interval_sub, orient)
from .hull import Hull, HullCorner, StraightArc, corner_steps, melkman_hull
from .oracle import (FuzzConfig, GenerationExhausted, grid_scan_pairs,
                     monotone_chain_hull, oracle_touch_params,
                     random_simple_arc)
from .pairs import (MOUNTAIN, VALLEY, CorollaryResult, InvalidDelta, ScanStep,
                    TriplePair, TripleReport, corollary_check,
                    enumerate_triples, find_pair_mountain, find_pair_valley,
                    jump_to_jump_gaps, safe_delta_range, scan_ledger,
                    verify_triple)
from .profile import (DirectedLine, Jump, MalformedFunction, ProfileStep,
                      SupportProfile, build_profile, cross_section,
                      filled_interval, support_line, touch_params,
                      unique_crossing)
from .render import RenderSpec, render_pair_svg

__version__ = "0.1.0"

__all__ = [
    "ArcError", "CorollaryResult", "DEFAULT_TOL", "DirectedLine",
    "DuplicateVertex", "FuzzConfig", "GenerationExhausted", "Hull",
    "HullCorner", "Interval", "InvalidDelta", "Jump", "MOUNTAIN",
    "MalformedFunction", "ParamOutOfRange", "Point2", "PolygonalArc",
    "ProfileStep", "RenderSpec", "ScanStep", "SelfIntersecting",
    "StraightArc", "SupportProfile", "TWO_PI", "Tolerances", "TooFewVertices",
    "TriplePair", "TripleReport", "VALLEY", "ZeroVector", "angle_of",
    "build_arc", "build_profile", "canon_angle", "ccw_gap", "circ_dist",
    "corner_steps", "corollary_check", "cross_section", "enumerate_triples",
    "filled_interval", "find_pair_mountain", "find_pair_valley",
    "grid_scan_pairs", "interval_sub", "jump_to_jump_gaps", "melkman_hull",
    "monotone_chain_hull", "oracle_touch_params", "orient", "point_at",
    "random_simple_arc", "render_pair_svg", "safe_delta_range", "scale_to_unit",
    "scan_ledger", "support_line", "touch_params", "unique_crossing",
    "verify_triple",
]
