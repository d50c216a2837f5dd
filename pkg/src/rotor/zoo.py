"""Constructed instances used across tests, checks, and documentation."""

from __future__ import annotations

from fractions import Fraction

from .actions import GroupAction
from .circle import CirclePoint
from .plmaps import CircleHomeo, PLLift


def quadruple_counterexample_table() -> dict[CirclePoint, CirclePoint]:
    """The four-point map that preserves triples but breaks a quadruple.

    Sends 0 and 1/2 to 0, and 1/4 and 3/4 to 1/2: the oriented quadruple
    (0, 1/4, 1/2, 3/4) maps to (0, 1/2, 0, 1/2), which cannot be lifted in
    weak cyclic order.
    """
    o = CirclePoint.of
    return {
        o(0): o(0),
        o(Fraction(1, 4)): o(Fraction(1, 2)),
        o(Fraction(1, 2)): o(0),
        o(Fraction(3, 4)): o(Fraction(1, 2)),
    }


def half_rotation_parabolic() -> CircleHomeo:
    """A PL map of rotation number 1/2 whose square has exactly two fixed points.

    The lift sends 0 -> 1/2 -> 1 with a bulge at 1/4 (and its antipodal
    copy), so the square moves every point of (0, 1/2) + Z/2 strictly
    forward: the periodic orbit {0, 1/2} is the only one.  The map is
    antipode-equivariant, mirroring a parabolic boundary map lifted to the
    double cover.
    """
    lift = PLLift.strict_from_vertices(
        [
            (0, Fraction(1, 2)),
            (Fraction(1, 4), Fraction(7, 8)),
            (Fraction(1, 2), 1),
            (Fraction(3, 4), Fraction(11, 8)),
        ]
    )
    return CircleHomeo(lift)


def half_rotation_pair() -> tuple[GroupAction, GroupAction]:
    """The rotation by one half next to the parabolic-like map of the same
    rotation number; semi-conjugate, but never through a continuous map."""
    a1 = GroupAction.rotation_action(Fraction(1, 2))
    h = half_rotation_parabolic()
    a2 = GroupAction.zaction(h)
    return a1, a2
