"""Exact rational points on the circle R/Z and cyclic orientation predicates.

Everything downstream is built on these primitives.  All coordinates are
`fractions.Fraction`; there is no floating point anywhere in the core, so
every predicate is decided exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]


class InvalidInputError(ValueError):
    """Raised when an operation receives structurally invalid input."""


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InvalidInputError(f"not a rational value: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer "n") into a Fraction."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"cannot parse rational from {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Serialize a Fraction as "p/q", or "n" for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def frac_mod1(q: Fraction) -> Fraction:
    """Reduce a rational to its representative in [0, 1)."""
    return q - math.floor(q)


HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class CirclePoint:
    """A point of R/Z held as its canonical representative in [0, 1).

    The ordering is the linear order of representatives; cyclic comparisons
    go through :func:`oriented` and :func:`orientation`.
    """

    rep: Fraction

    def __post_init__(self) -> None:
        if not (0 <= self.rep < 1):
            raise InvalidInputError(f"representative {self.rep} not in [0,1)")

    @classmethod
    def of(cls, value: RationalLike) -> "CirclePoint":
        """Build a point from any rational, reducing mod 1."""
        return cls(frac_mod1(as_fraction(value)))

    def antipode(self) -> "CirclePoint":
        """The point half a turn away."""
        return CirclePoint(frac_mod1(self.rep + HALF))

    def __str__(self) -> str:
        return format_rational(self.rep)


def lift_in_window(x: CirclePoint, base: RationalLike) -> Fraction:
    """The unique lift of ``x`` in the half-open window [base, base+1)."""
    b = as_fraction(base)
    return x.rep + math.ceil(b - x.rep)


def oriented(points: Sequence[CirclePoint], strict: bool = False) -> bool:
    """Whether a tuple is weakly (or strictly) positively oriented.

    Greedy minimal lifting: anchor the first point at its representative,
    lift each following point to the smallest lift >= (weak) or > (strict)
    the previous one, and accept iff the last lift stays within one period
    of the anchor.  Any witness family of lifts can be pushed down
    coordinatewise onto the greedy one, so the greedy choice is complete;
    the test suite checks this against a brute-force search over offsets.
    """
    if len(points) == 0:
        raise InvalidInputError("oriented() requires a non-empty tuple")
    anchor = points[0].rep
    prev = anchor
    for p in points[1:]:
        lifted = lift_in_window(p, prev)
        if strict and lifted == prev:
            lifted += 1
        prev = lifted
    if strict:
        return prev < anchor + 1
    return prev <= anchor + 1


def oriented_ranks(ranks: Sequence[int], strict: bool = False) -> bool:
    """Orientation test for tuples given by ranks in a fixed cyclic order.

    Equivalent to :func:`oriented` once points are replaced by their ranks
    among the distinct values present; integer comparisons only, used by the
    exhaustive quadruple sweeps.
    """
    k = len(ranks)
    if k <= 1:
        return True
    bad = 0
    for i in range(k - 1):
        if strict:
            if ranks[i + 1] <= ranks[i]:
                bad += 1
        else:
            if ranks[i + 1] < ranks[i]:
                bad += 1
    if bad == 0:
        return True
    if bad > 1:
        return False
    if strict:
        return ranks[-1] < ranks[0]
    return ranks[-1] <= ranks[0]


class Orientation(Enum):
    POSITIVE = 1
    DEGENERATE = 0
    NEGATIVE = -1


def orientation(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> Orientation:
    """Cyclic orientation of a triple; DEGENERATE iff two points coincide."""
    if oriented((x, y, z), strict=True):
        return Orientation.POSITIVE
    if oriented((y, x, z), strict=True):
        return Orientation.NEGATIVE
    return Orientation.DEGENERATE


def orientation_sign(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
    """The orientation as an integer in {-1, 0, +1}."""
    return orientation(x, y, z).value


def circular_gaps(points: Iterable[CirclePoint]) -> list[Fraction]:
    """Cyclic gaps between consecutive points (sorted), summing to 1."""
    reps = sorted(p.rep for p in points)
    if not reps:
        raise InvalidInputError("circular_gaps() requires points")
    gaps = [b - a for a, b in zip(reps, reps[1:])]
    gaps.append(reps[0] + 1 - reps[-1])
    return gaps
