"""JSON round trips and located parse errors."""

import random
from fractions import Fraction as F

import pytest

from rotor.checks import Sampler
from rotor.actions import GroupAction
from rotor.plmaps import PLLift, decompose
from rotor.serialize import (
    ParseError,
    action_from_json,
    action_to_json,
    arcs_from_json,
    arcs_to_json,
    homeo_from_json,
    homeo_to_json,
    pl_from_json,
    pl_to_json,
)
from rotor.arcsets import Arc


def test_pl_roundtrip_strict():
    f = PLLift.strict_from_vertices([(0, F(1, 4)), (F(1, 2), F(7, 8))])
    assert pl_from_json(pl_to_json(f)) == f


def test_pl_roundtrip_monotone():
    f = PLLift.floor_step(F(2, 7))
    data = pl_to_json(f)
    assert data["kind"] == "monotone" and "left" in data
    assert pl_from_json(data) == f


def test_action_roundtrip_random(rng):
    s = Sampler(rng)
    for _ in range(50):
        gens = tuple(s.homeo() for _ in range(rng.randint(1, 2)))
        lifts = tuple(g.lift.shift(rng.randint(-1, 1)) for g in gens)
        action = GroupAction(gens, lifts)
        assert action_from_json(action_to_json(action)) == action


def test_arcs_roundtrip():
    arcs = (Arc(F(1, 4), F(1, 8)), Arc(F(3, 4), F(1, 16)))
    assert arcs_from_json(arcs_to_json(arcs)) == arcs


def test_parse_errors_carry_location():
    with pytest.raises(ParseError) as err:
        pl_from_json({"kind": "smooth", "breakpoints": [], "point": []})
    assert ".kind" in str(err.value)
    with pytest.raises(ParseError) as err:
        pl_from_json({"kind": "strict", "breakpoints": ["x"], "point": ["0"]})
    assert "breakpoints[0]" in str(err.value)
    with pytest.raises(ParseError) as err:
        action_from_json({"generators": []})
    assert ".generators" in str(err.value)


def test_action_invariant_violations_are_validation_errors():
    h = homeo_to_json(decompose(PLLift.translation(F(1, 3)))[0])
    bad = {"generators": [h], "lifts": [pl_to_json(PLLift.translation(F(1, 4)))]}
    with pytest.raises(ParseError) as err:
        action_from_json(bad)
    assert "invariant" in str(err.value)
    bad_rel = {"generators": [h], "relations": [[1]]}
    with pytest.raises(ParseError):
        action_from_json(bad_rel)
