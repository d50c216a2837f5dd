"""The rotor command line: exact circle-dynamics computations from JSON files.

Commands: rotnum, fixedpoints, orbit, euler, check-semiconj, build-semiconj,
straighten, glue, blowup, collapse, sullivan, fuzz, plot.  Every command is
deterministic given its inputs, seed and caps; reports embed the
configuration they were produced with.  Exit codes: 0 success, 1 property
failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .actions import blow_up, collapse, finite_orbit_search, fixed_set, global_fixed_set, orbit_closure
from .arcsets import ArcSet
from .checks import run_checks
from .circle import CirclePoint, InvalidInputError, format_rational, parse_rational
from .cocycles import euler_cocycle, obstruction_cocycle, orientation_cocycle
from .plmaps import PLLift
from .plotting import emit_csv, emit_png, emit_svg
from .rotation import translation_number
from .semiconj import (
    check_left_semiconjugacy,
    construct_semiconjugacy_sup,
    exact_sup_semiconjugacy,
    glue_finite_orbit_actions,
    match_lifts,
    straighten_to_rotation,
)
from .serialize import (
    ParseError,
    action_from_json,
    action_to_json,
    arcs_from_json,
    arcs_to_json,
    load_json,
    monotone_from_json,
    monotone_to_json,
    pl_from_json,
    point_from_json,
    write_json_atomic,
)
from .sullivan import DoubleCoverAction, DoubleCoverHomeo, is_small, pullback_zero_test, sullivan_eval

BREAKPOINT_WARNING_THRESHOLD = 10_000


def _arcset_json(s: ArcSet) -> Any:
    if s.full:
        return {"full_circle": True}
    return {
        "points": [format_rational(a.start) for a in s.arcs if a.is_point()],
        "arcs": arcs_to_json([a for a in s.arcs if not a.is_point()]),
    }


def _points_arg(text: str) -> list[CirclePoint]:
    return [CirclePoint.of(parse_rational(part)) for part in text.split(",") if part.strip()]


def _fractions_arg(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def _result_json(res) -> dict:
    if res.is_exact:
        return {
            "exact": format_rational(res.value),
            "witness": format_rational(res.witness),
            "period": res.period,
        }
    return {
        "interval": [format_rational(res.lo), format_rational(res.hi)],
        "n": res.iterations,
    }


def _warn_size(lift: PLLift, quiet: bool) -> None:
    if len(lift.breakpoints) > BREAKPOINT_WARNING_THRESHOLD and not quiet:
        print(
            f"warning: map has {len(lift.breakpoints)} breakpoints",
            file=sys.stderr,
        )


# ----------------------------------------------------------------------
# command handlers (each returns (exit_code, report))
# ----------------------------------------------------------------------


def cmd_rotnum(args) -> tuple[int, dict]:
    lift = pl_from_json(load_json(args.map), "$")
    _warn_size(lift, args.quiet)
    res = translation_number(lift, max_period=args.max_period, max_iters=args.max_iters)
    report = _result_json(res)
    report["mod1"] = _result_json(res.mod1())
    if not res.is_exact:
        report["note"] = (
            f"no period <= {args.max_period} found; the certified interval "
            "makes no claim of irrationality"
        )
    return 0, report


def cmd_fixedpoints(args) -> tuple[int, dict]:
    action = action_from_json(load_json(args.action))
    per_gen = [_arcset_json(fixed_set(g)) for g in action.generators]
    return 0, {
        "generators": per_gen,
        "global": _arcset_json(global_fixed_set(action)),
    }


def cmd_orbit(args) -> tuple[int, dict]:
    action = action_from_json(load_json(args.action))
    if args.point is not None:
        start = point_from_json(args.point)
        orbit = orbit_closure(action, start, args.bound)
    else:
        orbit = finite_orbit_search(action, args.bound)
    if orbit is None:
        return 0, {"found": False, "bound": args.bound}
    reps = sorted(p.rep for p in orbit.points)
    gaps = [b - a for a, b in zip(reps, reps[1:])] + [reps[0] + 1 - reps[-1]]
    return 0, {
        "found": True,
        "size": orbit.size,
        "points": [format_rational(r) for r in reps],
        "density_heuristic": {
            "note": "heuristic only: gap statistics of the finite orbit",
            "max_gap": format_rational(max(gaps)),
            "min_gap": format_rational(min(gaps)),
        },
    }


def cmd_euler(args) -> tuple[int, dict]:
    data = load_json(args.args)
    if args.cocycle in ("euler", "orientation"):
        pts = data.get("points") if isinstance(data, dict) else None
        if not isinstance(pts, list) or len(pts) != 3:
            raise ParseError("expected {'points': [x, y, z]}", "$.points")
        triple = [point_from_json(p, f"$.points[{i}]") for i, p in enumerate(pts)]
        fn = euler_cocycle if args.cocycle == "euler" else orientation_cocycle
        return 0, {"cocycle": args.cocycle, "value": fn(*triple)}
    maps = data.get("maps") if isinstance(data, dict) else None
    if not isinstance(maps, list) or len(maps) != 2:
        raise ParseError("expected {'maps': [h1, h2]}", "$.maps")
    from .serialize import homeo_from_json

    h1 = homeo_from_json(maps[0], "$.maps[0]")
    h2 = homeo_from_json(maps[1], "$.maps[1]")
    return 0, {"cocycle": "obstruction", "value": obstruction_cocycle(h1, h2)}


def cmd_check_semiconj(args) -> tuple[int, dict]:
    a1 = action_from_json(load_json(args.action1))
    a2 = action_from_json(load_json(args.action2))
    phi = monotone_from_json(load_json(args.phi))
    ok = check_left_semiconjugacy(a1, a2, phi)
    return (0 if ok else 1), {"left_semiconjugacy": ok}


def cmd_build_semiconj(args) -> tuple[int, dict]:
    a1 = action_from_json(load_json(args.action1))
    a2 = action_from_json(load_json(args.action2))
    if a1.lifts is None:
        a1 = a1.with_lifts(a1.sigma_lifts())
    if a2.lifts is None:
        a2 = a2.with_lifts(a2.sigma_lifts())
    method = args.method
    if method == "auto":
        method = "exact" if a1.k == 1 else "ball"
    report: dict[str, Any] = {"method": method, "radius": args.radius}
    phi = None
    if method == "exact":
        from .semiconj import NotSemiconjugateError

        try:
            a1m, a2m, shift = match_lifts(a1, a2)
            phi = exact_sup_semiconjugacy(a1m, a2m)
            report.update({"status": "stabilized", "verified": True, "lift_shift": shift})
        except NotSemiconjugateError as exc:
            report.update({"status": "diverged", "verified": False, "detail": str(exc)})
            return 1, report
    else:
        result = construct_semiconjugacy_sup(a1, a2, ball_radius=args.radius)
        report.update(
            {
                "status": result.status,
                "verified": result.verified,
                "radius_reached": result.radius,
                "detail": result.detail,
            }
        )
        phi = result.phi if result.status == "stabilized" else None
        if result.status != "stabilized":
            return 1, report
    report["phi"] = monotone_to_json(phi)
    if args.svg:
        emit_svg(phi.good_lift, args.svg)
        report["svg"] = args.svg
    return 0, report


def cmd_straighten(args) -> tuple[int, dict]:
    action = action_from_json(load_json(args.action))
    rep = straighten_to_rotation(action, max_period=args.max_period, max_iters=args.max_iters)
    if rep.status != "exact":
        return 1, {
            "status": "inconclusive",
            "interval": [format_rational(rep.interval[0]), format_rational(rep.interval[1])],
        }
    return 0, {
        "status": "exact",
        "rotation_number": format_rational(rep.rotation_number),
        "rotation_action": action_to_json(rep.rotation_action),
        "to_rotation": monotone_to_json(rep.to_rotation),
        "from_rotation": monotone_to_json(rep.from_rotation),
    }


def cmd_glue(args) -> tuple[int, dict]:
    a1 = action_from_json(load_json(args.action1))
    a2 = action_from_json(load_json(args.action2))
    orbit1 = _points_arg(args.orbit1)
    orbit2 = _points_arg(args.orbit2)
    result = glue_finite_orbit_actions(a1, a2, orbit1, orbit2)
    return 0, {
        "action": action_to_json(result.action),
        "collapse_to_first": monotone_to_json(result.collapse_to_first),
        "collapse_to_second": monotone_to_json(result.collapse_to_second),
    }


def cmd_blowup(args) -> tuple[int, dict]:
    action = action_from_json(load_json(args.action))
    orbit = _points_arg(args.orbit)
    widths = _fractions_arg(args.widths)
    blown, arcs = blow_up(action, orbit, widths)
    return 0, {"action": action_to_json(blown), "arcs": arcs_to_json(arcs)}


def cmd_collapse(args) -> tuple[int, dict]:
    action = action_from_json(load_json(args.action))
    arcs = arcs_from_json(load_json(args.arcs))
    quotient, phi = collapse(action, arcs)
    return 0, {"action": action_to_json(quotient), "phi": monotone_to_json(phi)}


def cmd_sullivan(args) -> tuple[int, dict]:
    if args.eval:
        pts = [CirclePoint.of(parse_rational(t)) for t in args.eval]
        return 0, {"value": sullivan_eval(*pts)}
    if args.small:
        pts = _points_arg(args.small)
        return 0, {"small": is_small(pts)}
    if args.pullback:
        data = load_json(args.pullback)
        base = action_from_json(data)
        gens = []
        for i, g in enumerate(base.generators):
            try:
                gens.append(DoubleCoverHomeo(g.lift))
            except InvalidInputError as exc:
                raise ParseError(
                    f"generator {i} is not antipode-equivariant: {exc}",
                    f"$.generators[{i}]",
                ) from exc
        action = DoubleCoverAction(tuple(gens))
        basepoint = point_from_json(args.point) if args.point else CirclePoint.of(0)
        result = pullback_zero_test(action, basepoint, args.radius)
        report: dict[str, Any] = {"vanished": result.vanished, "radius": args.radius}
        if not result.vanished:
            report["witness"] = {
                "words": [list(w) for w in result.witness],
                "value": result.value,
            }
        return 0, report
    raise ParseError("one of --eval/--small/--pullback is required")


def cmd_fuzz(args) -> tuple[int, dict]:
    names = args.checks.split(",") if args.checks else None
    mutations = {}
    if args.mutate:
        for item in args.mutate.split(","):
            key, _, value = item.partition("=")
            mutations[key.strip()] = int(value)
    results = run_checks(seed=args.seed, scale=args.scale, names=names, mutations=mutations)
    failures = [r for r in results if not r.passed]
    report = {
        "seed": args.seed,
        "scale": args.scale,
        "mutations": mutations,
        "checks": [r.as_dict() for r in results],
        "passed": len(results) - len(failures),
        "failed": len(failures),
    }
    return (1 if failures else 0), report


def cmd_plot(args) -> tuple[int, dict]:
    lift = pl_from_json(load_json(args.map))
    report: dict[str, Any] = {}
    emit_svg(lift, args.out)
    report["svg"] = args.out
    if args.png:
        emit_png(lift, args.png)
        report["png"] = args.png
    if args.csv:
        emit_csv(lift, args.csv)
        report["csv"] = args.csv
    return 0, report


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized sweeps"
    )
    common.add_argument(
        "--json-out", default=argparse.SUPPRESS, help="also write the report to this path"
    )
    common.add_argument(
        "--quiet",
        action="store_true",
        default=argparse.SUPPRESS,
        help="suppress stdout report",
    )
    parser = argparse.ArgumentParser(
        prog="rotor",
        description="Exact piecewise-linear circle dynamics",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("rotnum", help="rotation/translation number of a map")
    p.add_argument("map")
    p.add_argument("--max-period", type=int, default=12)
    p.add_argument("--max-iters", type=int, default=4096)
    p.set_defaults(handler=cmd_rotnum)

    p = add_parser("fixedpoints", help="exact fixed sets of an action")
    p.add_argument("action")
    p.set_defaults(handler=cmd_fixedpoints)

    p = add_parser("orbit", help="finite orbit search / point closure")
    p.add_argument("action")
    p.add_argument("--point", help="start point p/q (default: search candidates)")
    p.add_argument("--bound", type=int, default=24)
    p.set_defaults(handler=cmd_orbit)

    p = add_parser("euler", help="evaluate one of the explicit cocycles")
    p.add_argument("--cocycle", choices=["euler", "orientation", "obstruction"], required=True)
    p.add_argument("--args", required=True, help="JSON file with points or maps")
    p.set_defaults(handler=cmd_euler)

    p = add_parser("check-semiconj", help="verify a left-semi-conjugacy exactly")
    p.add_argument("action1")
    p.add_argument("action2")
    p.add_argument("phi")
    p.set_defaults(handler=cmd_check_semiconj)

    p = add_parser("build-semiconj", help="construct a semi-conjugacy by supremum")
    p.add_argument("action1")
    p.add_argument("action2")
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--method", choices=["auto", "ball", "exact"], default="auto")
    p.add_argument("--svg", help="render the resulting staircase to this SVG")
    p.set_defaults(handler=cmd_build_semiconj)

    p = add_parser("straighten", help="semi-conjugate a cyclic action to a rotation")
    p.add_argument("action")
    p.add_argument("--max-period", type=int, default=24)
    p.add_argument("--max-iters", type=int, default=4096)
    p.set_defaults(handler=cmd_straighten)

    p = add_parser("glue", help="glue two actions along matched finite orbits")
    p.add_argument("action1")
    p.add_argument("action2")
    p.add_argument("--orbit1", required=True, help="comma-separated points")
    p.add_argument("--orbit2", required=True, help="comma-separated points")
    p.set_defaults(handler=cmd_glue)

    p = add_parser("blowup", help="insert invariant arcs at a finite orbit")
    p.add_argument("action")
    p.add_argument("--orbit", required=True, help="comma-separated points")
    p.add_argument("--widths", required=True, help="comma-separated widths")
    p.set_defaults(handler=cmd_blowup)

    p = add_parser("collapse", help="collapse an invariant arc system")
    p.add_argument("action")
    p.add_argument("--arcs", required=True, help="JSON file with the arc system")
    p.set_defaults(handler=cmd_collapse)

    p = add_parser("sullivan", help="Sullivan cocycle tools on the double cover")
    p.add_argument("--eval", nargs=3, metavar=("X", "Y", "Z"))
    p.add_argument("--small", help="comma-separated points")
    p.add_argument("--pullback", help="action JSON with antipode-equivariant maps")
    p.add_argument("--point", help="basepoint for --pullback")
    p.add_argument("--radius", type=int, default=3)
    p.set_defaults(handler=cmd_sullivan)

    p = add_parser("fuzz", help="run the seeded property suites")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--checks", help="comma-separated check names (default: all)")
    p.add_argument("--mutate", help="table mutations, e.g. 'euler:O2=0'")
    p.set_defaults(handler=cmd_fuzz)

    p = add_parser("plot", help="render a map's staircase graph")
    p.add_argument("map")
    p.add_argument("--out", required=True, help="SVG output path")
    p.add_argument("--png", help="also render a PNG via matplotlib")
    p.add_argument("--csv", help="also write delimited vertex data")
    p.set_defaults(handler=cmd_plot)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("seed", 0), ("json_out", None), ("quiet", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        code, report = args.handler(args)
    except (ParseError, InvalidInputError, OSError) as exc:
        payload = {"error": str(exc)}
        print(json.dumps(payload, indent=2), file=sys.stderr)
        return 2
    report = {"command": args.command, "seed": args.seed, **report}
    if args.json_out:
        write_json_atomic(report, args.json_out)
    if not args.quiet:
        print(json.dumps(report, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
