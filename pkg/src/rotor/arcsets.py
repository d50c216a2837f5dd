"""Finite unions of closed arcs (and isolated points) of the circle.

Fixed-point sets of piecewise-linear circle homeomorphisms are exactly such
unions, so this small exact algebra (normalize, intersect, membership)
backs the fixed-set machinery.  Points are zero-length arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .circle import CirclePoint, InvalidInputError, frac_mod1, lift_in_window

ZERO = Fraction(0)


class InvalidArcSystemError(InvalidInputError):
    """Raised for overlapping arcs or arc systems of total length >= 1."""


@dataclass(frozen=True)
class Arc:
    """A closed arc [start, start + length] projected to the circle."""

    start: Fraction
    length: Fraction

    def __post_init__(self) -> None:
        if not (0 <= self.start < 1) or not (0 <= self.length <= 1):
            raise InvalidInputError(f"bad arc ({self.start}, {self.length})")

    @property
    def end(self) -> Fraction:
        return self.start + self.length

    def contains(self, x: CirclePoint) -> bool:
        return lift_in_window(x, self.start) <= self.end

    def is_point(self) -> bool:
        return self.length == 0


def check_disjoint_arcs(arcs: Sequence[Arc]) -> None:
    """Raise unless the closed arcs are pairwise disjoint with total length < 1."""
    total = sum((a.length for a in arcs), ZERO)
    if total >= 1:
        raise InvalidArcSystemError(f"arc lengths sum to {total} >= 1")
    ordered = sorted(arcs, key=lambda a: a.start)
    for a, b in zip(ordered, ordered[1:]):
        if b.start <= a.end:
            raise InvalidArcSystemError(f"arcs at {a.start} and {b.start} intersect")
    if len(ordered) >= 2 and ordered[0].start + 1 <= ordered[-1].end:
        raise InvalidArcSystemError("arcs intersect across the wrap")


@dataclass(frozen=True)
class ArcSet:
    """A normalized finite union of closed arcs; may be empty or the full circle."""

    arcs: tuple[Arc, ...]
    full: bool = False

    @classmethod
    def empty(cls) -> "ArcSet":
        return cls(())

    @classmethod
    def full_circle(cls) -> "ArcSet":
        return cls((), full=True)

    @classmethod
    def of(cls, pieces: Iterable[tuple[Fraction, Fraction]]) -> "ArcSet":
        """Normalize raw (start, length) pieces: sort, merge, detect full cover.

        Merging runs on two lifted copies of every piece so chains of arcs
        that wrap through 0 come out as single components.
        """
        items = [(frac_mod1(Fraction(s)), Fraction(l)) for s, l in pieces]
        if any(l < 0 for _, l in items):
            raise InvalidInputError("negative arc length")
        if any(l >= 1 for _, l in items):
            return cls.full_circle()
        if not items:
            return cls.empty()
        doubled = sorted(
            [(s + k, s + k + l) for s, l in items for k in (0, 1)]
        )
        merged: list[list[Fraction]] = []
        for s, e in doubled:
            if merged and s <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], e)
            else:
                merged.append([s, e])
        if any(e - s >= 1 for s, e in merged):
            return cls.full_circle()
        out: list[Arc] = []
        for s, e in merged:
            if not (0 <= s < 1):
                continue
            # drop wrapped fragments whose +1 copy sits strictly inside
            # another merged component
            shadowed = any(
                (s2 <= s + 1 and e + 1 <= e2) and (s2, e2) != (s + 1, e + 1)
                for s2, e2 in merged
            )
            if not shadowed:
                out.append(Arc(s, e - s))
        out.sort(key=lambda a: a.start)
        return cls(tuple(out))

    def is_empty(self) -> bool:
        return not self.full and not self.arcs

    def contains(self, x: CirclePoint) -> bool:
        if self.full:
            return True
        return any(a.contains(x) for a in self.arcs)

    def points_and_arcs(self) -> tuple[list[CirclePoint], list[Arc]]:
        pts = [CirclePoint.of(a.start) for a in self.arcs if a.is_point()]
        arcs = [a for a in self.arcs if not a.is_point()]
        return pts, arcs

    def boundary_points(self) -> list[CirclePoint]:
        """Arc endpoints (and isolated points), deduplicated."""
        pts: set[CirclePoint] = set()
        for a in self.arcs:
            pts.add(CirclePoint.of(a.start))
            pts.add(CirclePoint.of(a.end))
        return sorted(pts)

    def sample_points(self) -> list[CirclePoint]:
        """One representative per component (arc midpoints, points themselves)."""
        if self.full:
            return [CirclePoint.of(0)]
        return [CirclePoint.of(a.start + a.length / 2) for a in self.arcs]

    def intersect(self, other: "ArcSet") -> "ArcSet":
        if self.full:
            return other
        if other.full:
            return self
        pieces: list[tuple[Fraction, Fraction]] = []
        for a in self.arcs:
            sa, ea = a.start, a.end
            for b in other.arcs:
                for shift in (-1, 0, 1):
                    sb, eb = b.start + shift, b.end + shift
                    lo, hi = max(sa, sb), min(ea, eb)
                    if lo <= hi:
                        pieces.append((frac_mod1(lo), hi - lo))
        return ArcSet.of(pieces)

    def min_representative(self) -> Fraction | None:
        """The smallest member representative in [0, 1), None when empty."""
        if self.full:
            return ZERO
        best: Fraction | None = None
        for a in self.arcs:
            cand = a.start if a.end < 1 else ZERO
            if best is None or cand < best:
                best = cand
        return best
