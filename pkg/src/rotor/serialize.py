"""JSON schemas for maps, actions, points and arcs.

Rationals serialize as strings "p/q" (integers as "n") to avoid any
precision loss; maps carry their breakpoint and value arrays; actions
bundle generators with optional lifts and relations.  Parse errors carry
the location of the offending field.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from typing import Any, Sequence

from .actions import GroupAction
from .arcsets import Arc
from .circle import CirclePoint, format_rational, parse_rational
from .plmaps import MONOTONE, STRICT, CircleHomeo, MonotoneDegreeOneMap, PLLift, decompose


class ParseError(ValueError):
    """A schema violation, with the JSON location that caused it."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def _rational(value: Any, location: str) -> Fraction:
    if not isinstance(value, str):
        raise ParseError(f"expected rational string, got {value!r}", location)
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise ParseError(str(exc), location) from exc


def point_to_json(p: CirclePoint) -> str:
    return format_rational(p.rep)


def point_from_json(value: Any, location: str = "$") -> CirclePoint:
    return CirclePoint.of(_rational(value, location))


def pl_to_json(f: PLLift) -> dict:
    out: dict[str, Any] = {
        "kind": f.kind,
        "breakpoints": [format_rational(b) for b in f.breakpoints],
        "point": [format_rational(v) for v in f.point],
    }
    if f.kind != STRICT:
        out["left"] = [format_rational(v) for v in f.left]
        out["right"] = [format_rational(v) for v in f.right]
    return out


def pl_from_json(data: Any, location: str = "$") -> PLLift:
    if not isinstance(data, dict):
        raise ParseError("expected a map object", location)
    kind = data.get("kind")
    if kind not in (STRICT, MONOTONE):
        raise ParseError(f"kind must be 'strict' or 'monotone', got {kind!r}", f"{location}.kind")
    for key in ("breakpoints", "point"):
        if not isinstance(data.get(key), list):
            raise ParseError(f"missing array {key!r}", f"{location}.{key}")
    bps = [_rational(v, f"{location}.breakpoints[{i}]") for i, v in enumerate(data["breakpoints"])]
    point = [_rational(v, f"{location}.point[{i}]") for i, v in enumerate(data["point"])]
    if kind == STRICT:
        left = right = point
    else:
        if "left" not in data or "right" not in data:
            raise ParseError("monotone maps need 'left' and 'right'", location)
        left = [_rational(v, f"{location}.left[{i}]") for i, v in enumerate(data["left"])]
        right = [_rational(v, f"{location}.right[{i}]") for i, v in enumerate(data["right"])]
    try:
        return PLLift.make(kind, bps, left, point, right)
    except ValueError as exc:
        raise ParseError(f"invalid map data: {exc}", location) from exc


def homeo_to_json(h: CircleHomeo) -> dict:
    return pl_to_json(h.lift)


def homeo_from_json(data: Any, location: str = "$") -> CircleHomeo:
    lift = pl_from_json(data, location)
    if lift.kind != STRICT:
        raise ParseError("circle homeomorphisms need strict maps", location)
    return decompose(lift)[0]


def monotone_from_json(data: Any, location: str = "$") -> MonotoneDegreeOneMap:
    return MonotoneDegreeOneMap(pl_from_json(data, location))


def monotone_to_json(phi: MonotoneDegreeOneMap) -> dict:
    return pl_to_json(phi.good_lift)


def action_to_json(action: GroupAction) -> dict:
    out: dict[str, Any] = {
        "generators": [homeo_to_json(g) for g in action.generators],
    }
    if action.lifts is not None:
        out["lifts"] = [pl_to_json(l) for l in action.lifts]
    if action.relations:
        out["relations"] = [list(rel) for rel in action.relations]
    return out


def action_from_json(data: Any, location: str = "$") -> GroupAction:
    if not isinstance(data, dict):
        raise ParseError("expected an action object", location)
    gens_data = data.get("generators")
    if not isinstance(gens_data, list) or not gens_data:
        raise ParseError("'generators' must be a non-empty array", f"{location}.generators")
    generators = tuple(
        homeo_from_json(g, f"{location}.generators[{i}]") for i, g in enumerate(gens_data)
    )
    lifts = None
    if "lifts" in data:
        lifts_data = data["lifts"]
        if not isinstance(lifts_data, list) or len(lifts_data) != len(generators):
            raise ParseError("'lifts' must list one map per generator", f"{location}.lifts")
        lifts = tuple(
            pl_from_json(l, f"{location}.lifts[{i}]") for i, l in enumerate(lifts_data)
        )
    relations: tuple[tuple[int, ...], ...] = ()
    if "relations" in data:
        rel_data = data["relations"]
        if not isinstance(rel_data, list):
            raise ParseError("'relations' must be an array of words", f"{location}.relations")
        rels = []
        for i, rel in enumerate(rel_data):
            if not isinstance(rel, list) or not all(isinstance(x, int) for x in rel):
                raise ParseError("words are arrays of integers", f"{location}.relations[{i}]")
            rels.append(tuple(rel))
        relations = tuple(rels)
    action = GroupAction(generators, lifts, relations)
    try:
        action.validate()
    except ValueError as exc:
        raise ParseError(f"action invariant violated: {exc}", location) from exc
    return action


def arcs_to_json(arcs: Sequence[Arc]) -> list:
    return [
        {"start": format_rational(a.start), "length": format_rational(a.length)}
        for a in arcs
    ]


def arcs_from_json(data: Any, location: str = "$") -> tuple[Arc, ...]:
    if not isinstance(data, list):
        raise ParseError("expected an array of arcs", location)
    out = []
    for i, item in enumerate(data):
        loc = f"{location}[{i}]"
        if not isinstance(item, dict):
            raise ParseError("expected an arc object", loc)
        out.append(
            Arc(_rational(item.get("start"), f"{loc}.start"), _rational(item.get("length"), f"{loc}.length"))
        )
    return tuple(out)


def load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def write_json_atomic(data: Any, path: str) -> None:
    """Serialize with sorted keys and replace the target atomically."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
