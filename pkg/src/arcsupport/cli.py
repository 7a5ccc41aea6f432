"""Command-line front end.

Exit codes: 0 ok, 2 arc validation failure, 3 bad angle difference,
4 I/O failure, 5 generation failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .arc import ArcError, build_arc
from .geometry import DEFAULT_TOL
from .hull import StraightArc, melkman_hull
from .oracle import (FuzzConfig, GenerationExhausted, draw_delta,
                     random_simple_arc)
from .pairs import (MOUNTAIN, VALLEY, InvalidDelta, TriplePair,
                    corollary_check, enumerate_triples, find_pair_mountain,
                    find_pair_valley, jump_to_jump_gaps, safe_delta_range,
                    verify_triple)
from .profile import build_profile
from .render import RenderSpec, render_pair_svg

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DELTA = 3
EXIT_IO = 4
EXIT_GENERATION = 5


def _load_arc(path: str, tol):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)
    except json.JSONDecodeError as exc:
        print(f"bad JSON in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)
    try:
        return build_arc(payload["vertices"], tol)
    except (KeyError, TypeError) as exc:
        print(f"expected {{\"vertices\": [[x, y], ...]}}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)
    except ArcError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _profile_of(arc, tol):
    try:
        return build_profile(melkman_hull(arc, tol), tol)
    except StraightArc as exc:
        print(f"StraightArc: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def _maybe_degrees(value: float, to_degrees: bool) -> float:
    return math.degrees(value) if to_degrees else value


def cmd_analyze(args) -> int:
    tol = DEFAULT_TOL
    arc = _load_arc(args.input, tol)
    profile = _profile_of(arc, tol)
    if args.json:
        doc = {
            "length": arc.length,
            "corners": [
                {"point": [s.corner_point.x, s.corner_point.y],
                 "param": s.level,
                 "step": [s.start, s.end],
                 "exterior_angle": s.width}
                for s in profile.steps],
            "jumps": [{"angle": j.angle, "span": [j.low_param, j.high_param]}
                      for j in profile.jumps],
            "min_step_width": profile.min_step_width,
            "apex_step_width": profile.apex_step_width,
            "levels": list(profile.levels),
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK

    print(f"arc: {len(arc)} vertices, length {arc.length:.12g}")
    print(f"{'corner':>22}  {'param':>12}  {'step interval':>28}  {'exterior':>12}")
    for s in profile.steps:
        pt = f"({s.corner_point.x:.6g}, {s.corner_point.y:.6g})"
        print(f"{pt:>22}  {s.level:>12.9g}  "
              f"[{s.start:>12.9f}, {s.end:>12.9f}]  {s.width:>12.9f}")
    print(f"min step width  : {profile.min_step_width:.12g}")
    print(f"apex step width : {profile.apex_step_width:.12g}")
    print("level sequence  : " + " ".join(f"{v:.9g}" for v in profile.levels))
    print("jumps           : " + "; ".join(
        f"{j.angle:.9f} -> [{j.low_param:.9g}, {j.high_param:.9g}]"
        for j in profile.jumps))
    return EXIT_OK


def _pair_doc(pair: TriplePair, unique_count: int, report,
              to_degrees: bool) -> dict:
    return {
        "mode": pair.mode,
        "theta_single": _maybe_degrees(pair.theta_single, to_degrees),
        "theta_double": _maybe_degrees(pair.theta_double, to_degrees),
        "s": [pair.s1, pair.s2, pair.s3],
        "strict": pair.strict,
        "realized_gap": _maybe_degrees(pair.realized_gap, to_degrees),
        "requested_delta": _maybe_degrees(pair.requested_delta, to_degrees),
        "guaranteed": pair.guaranteed,
        "near_tie": pair.near_tie,
        "unique_count": unique_count,
        "verified": report.passed,
    }


def _run_mode(profile, arc, delta, mode, tol) -> dict:
    if mode == MOUNTAIN:
        pair = find_pair_mountain(profile, arc, delta, tol)
    else:
        pair = find_pair_valley(profile, arc, delta, tol)
    configs = enumerate_triples(profile, arc, delta, tol)
    typed = sum(1 for c in configs
                if (c.covers_apex if mode == MOUNTAIN else c.covers_min))
    return {"pair": pair, "unique_count": typed,
            "report": verify_triple(arc, pair, tol)}


def cmd_find_pair(args) -> int:
    tol = DEFAULT_TOL
    arc = _load_arc(args.input, tol)
    profile = _profile_of(arc, tol)
    delta = math.radians(args.delta) if args.degrees else args.delta
    try:
        if args.mode == "both":
            res = corollary_check(profile, arc, delta, tol)
            m = _run_mode(profile, arc, delta, MOUNTAIN, tol)
            v = _run_mode(profile, arc, delta, VALLEY, tol)
            doc = {
                "mode": "both",
                "mountain": _pair_doc(res.mountain, m["unique_count"],
                                      m["report"], args.degrees),
                "valley": _pair_doc(res.valley, v["unique_count"],
                                    v["report"], args.degrees),
                "identical": res.identical,
            }
        else:
            r = _run_mode(profile, arc, delta, args.mode, tol)
            doc = _pair_doc(r["pair"], r["unique_count"], r["report"],
                            args.degrees)
    except InvalidDelta as exc:
        print(f"InvalidDelta: {exc}", file=sys.stderr)
        return EXIT_DELTA
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_render(args) -> int:
    tol = DEFAULT_TOL
    arc = _load_arc(args.input, tol)
    hull = melkman_hull(arc, tol)
    profile = build_profile(hull, tol)
    delta = math.radians(args.delta) if args.degrees else args.delta
    try:
        if args.mode == VALLEY:
            pair = find_pair_valley(profile, arc, delta, tol)
        else:
            pair = find_pair_mountain(profile, arc, delta, tol)
    except InvalidDelta as exc:
        print(f"InvalidDelta: {exc}", file=sys.stderr)
        return EXIT_DELTA
    svg = render_pair_svg(arc, hull, pair, RenderSpec())
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.output}")
    return EXIT_OK


def run_fuzz(config: FuzzConfig, tol=DEFAULT_TOL):
    """One deterministic campaign: rows for the CSV plus summary counters."""
    rows = []
    anomalies = []
    corollary_hits = 0
    strict_hits = 0
    unique_hits = 0
    unique_total = 0
    for trial in range(config.trials):
        arc = random_simple_arc(config, trial, tol)
        profile = build_profile(melkman_hull(arc, tol), tol)
        mode = MOUNTAIN if trial % 2 == 0 else VALLEY
        delta = draw_delta(config, trial, mode, safe_delta_range(profile, mode))
        if mode == MOUNTAIN:
            pair = find_pair_mountain(profile, arc, delta, tol)
        else:
            pair = find_pair_valley(profile, arc, delta, tol)
        report = verify_triple(arc, pair, tol)
        configs = enumerate_triples(profile, arc, delta, tol)
        typed = sum(1 for c in configs
                    if (c.covers_apex if mode == MOUNTAIN else c.covers_min))
        tie_prone = (pair.near_tie or any(
            abs(delta - g) <= 1e-6 for g in jump_to_jump_gaps(profile)))
        if pair.strict:
            strict_hits += 1
            if not tie_prone:
                unique_total += 1
                if typed == 1:
                    unique_hits += 1
        cor = corollary_check(profile, arc, math.pi, tol)
        if cor.identical:
            corollary_hits += 1
        if (pair.guaranteed and not pair.strict) or not report.passed:
            anomalies.append(trial)
        rows.append({
            "trial": trial, "n": len(arc), "delta": repr(delta),
            "mode": mode, "strict": pair.strict, "unique_count": typed,
            "verified": report.passed, "near_tie": pair.near_tie,
        })
    summary = {
        "trials": config.trials,
        "strict": strict_hits,
        "unique": unique_hits,
        "unique_total": unique_total,
        "corollary_at_pi": corollary_hits,
        "anomalies": anomalies,
    }
    return rows, summary


def fuzz_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=[
        "trial", "n", "delta", "mode", "strict", "unique_count",
        "verified", "near_tie"])
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_fuzz(args) -> int:
    config = FuzzConfig(trials=args.trials, seed=args.seed,
                        delta_policy=args.policy)
    try:
        rows, summary = run_fuzz(config)
    except GenerationExhausted as exc:
        print(f"GenerationExhausted: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(fuzz_csv(rows))
        except OSError as exc:
            print(f"cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    t = summary["trials"]
    print(f"trials                : {t}")
    print(f"strict existence rate : {summary['strict']}/{t}")
    print(f"uniqueness rate       : {summary['unique']}/{summary['unique_total']}"
          f" (strict, away from ties)")
    print(f"corollary rate (pi)   : {summary['corollary_at_pi']}/{t}")
    print(f"anomalies             : {len(summary['anomalies'])}"
          + (f" at trials {summary['anomalies']}" if summary["anomalies"] else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcsupport",
        description="Support-line structure of simple polygonal arcs and "
                    "pairs of support lines with triple touch points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="corner table, widths and jump list")
    p.add_argument("input", help="arc JSON file: {\"vertices\": [[x, y], ...]}")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("find-pair", help="run the level scans at a difference")
    p.add_argument("input")
    p.add_argument("--delta", type=float, required=True,
                   help="angle difference in radians (degrees with --degrees)")
    p.add_argument("--mode", choices=[MOUNTAIN, VALLEY, "both"], default="both")
    p.add_argument("--degrees", action="store_true",
                   help="read --delta and print angles in degrees")
    p.set_defaults(func=cmd_find_pair)

    p = sub.add_parser("render", help="SVG figure of a found pair")
    p.add_argument("input")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--mode", choices=[MOUNTAIN, VALLEY], default=MOUNTAIN)
    p.add_argument("--degrees", action="store_true")
    p.add_argument("-o", "--output", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fuzz", help="property campaign over random arcs")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--policy", choices=["safe_range", "full_range"],
                   default="safe_range")
    p.add_argument("-o", "--output", help="CSV report path")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
