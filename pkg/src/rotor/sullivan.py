"""The double cover of the circle and the Sullivan cocycle.

The double cover is modeled as the same circle R/Z with the antipode
x -> x + 1/2; its equivariant homeomorphism group consists of circle maps
commuting with the antipode, and the covering onto the base doubles
coordinates.  Non-degenerate triples (no equal or antipodal entries) fall
into eight orbit classes separated by three exact half-circle signs; the
Sullivan cocycle is +-1 exactly on the two classes whose convex hull
contains the center (equivalently, all cyclic gaps below one half) and is
extended to degenerate tuples by symbolic positive perturbation, last
coordinate first, each nudge infinitesimally smaller than the previous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .circle import HALF, CirclePoint, InvalidInputError, circular_gaps, frac_mod1
from .plmaps import STRICT, CircleHomeo, PLLift, compose, invert


# ----------------------------------------------------------------------
# symbolic perturbation
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PerturbedPoint:
    """A circle point nudged forward by an infinitesimal of a given rank.

    Ranks order the nudges: 0 < delta_0 < delta_1 < ... , all smaller than
    every rational gap in sight.  Tuples are perturbed in reverse position
    order (last first), so position i receives rank i and equal points are
    separated in input order.
    """

    base: Fraction
    rank: int


def perturb_tuple(points: Sequence[CirclePoint]) -> tuple[PerturbedPoint, ...]:
    return tuple(PerturbedPoint(p.rep, i) for i, p in enumerate(points))


def half_circle_sign(a: PerturbedPoint, b: PerturbedPoint) -> int:
    """+1 if b - a lies in (0, 1/2) mod 1, -1 if in (1/2, 1).

    The perturbed difference is never exactly 0 or 1/2 because distinct
    ranks carry distinct infinitesimals.
    """
    if a.rank == b.rank:
        raise InvalidInputError("points must carry distinct perturbation ranks")
    base = frac_mod1(b.base - a.base)
    if base == 0:
        return 1 if b.rank > a.rank else -1
    if base == HALF:
        return -1 if b.rank > a.rank else 1
    return 1 if base < HALF else -1


class NondegClass(Enum):
    """The eight non-degenerate orbit classes of triples on the double cover."""

    IDENT = "id"
    T01 = "(01)"
    T02 = "(02)"
    T12 = "(12)"
    C012 = "(012)"
    C021 = "(021)"
    PLUS = "O+"
    MINUS = "O-"


_SIGNS_TO_CLASS: dict[tuple[int, int, int], NondegClass] = {
    (1, 1, 1): NondegClass.IDENT,
    (-1, 1, 1): NondegClass.T01,
    (-1, -1, -1): NondegClass.T02,
    (1, 1, -1): NondegClass.T12,
    (1, -1, -1): NondegClass.C012,
    (-1, -1, 1): NondegClass.C021,
    (1, -1, 1): NondegClass.PLUS,
    (-1, 1, -1): NondegClass.MINUS,
}

EVEN_CLASSES = (NondegClass.IDENT, NondegClass.C012, NondegClass.C021)
ODD_CLASSES = (NondegClass.T01, NondegClass.T02, NondegClass.T12)


def is_nondegenerate(points: Sequence[CirclePoint]) -> bool:
    """No two entries equal or antipodal."""
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = frac_mod1(points[j].rep - points[i].rep)
            if d == 0 or d == HALF:
                return False
    return True


def classify_perturbed(
    x: PerturbedPoint, y: PerturbedPoint, z: PerturbedPoint
) -> NondegClass:
    signs = (half_circle_sign(x, y), half_circle_sign(x, z), half_circle_sign(y, z))
    return _SIGNS_TO_CLASS[signs]


def classify_nondeg_triple(
    x: CirclePoint, y: CirclePoint, z: CirclePoint
) -> NondegClass:
    """Orbit class of a non-degenerate triple under the double-cover group.

    The three half-circle signs (one per pair) are a complete invariant:
    they are preserved by antipode-equivariant homeomorphisms and separate
    the eight class representatives.
    """
    if not is_nondegenerate((x, y, z)):
        raise InvalidInputError("triple has equal or antipodal entries")
    return classify_perturbed(*perturb_tuple((x, y, z)))


# Sullivan cocycle values per class: the two center-containing classes get
# the orientation sign, all six half-circle classes vanish.
SULLIVAN_TABLE: dict[NondegClass, int] = {
    NondegClass.IDENT: 0,
    NondegClass.T01: 0,
    NondegClass.T02: 0,
    NondegClass.T12: 0,
    NondegClass.C012: 0,
    NondegClass.C021: 0,
    NondegClass.PLUS: 1,
    NondegClass.MINUS: -1,
}


def sullivan_eval(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
    """The Sullivan cocycle, extended to degenerate triples by perturbation."""
    return SULLIVAN_TABLE[classify_perturbed(*perturb_tuple((x, y, z)))]


def center_in_hull(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> bool:
    """Whether the center lies interior to the hull of a non-degenerate triple.

    Exact characterization: all three cyclic gaps are below one half.  Kept
    independent of the class table as a cross-check.
    """
    if not is_nondegenerate((x, y, z)):
        raise InvalidInputError("triple has equal or antipodal entries")
    return all(g < HALF for g in circular_gaps((x, y, z)))


def is_small(points: Sequence[CirclePoint]) -> bool:
    """Whether the set fits in a half-open half-circle [a, a + 1/2)."""
    if not points:
        raise InvalidInputError("is_small needs a non-empty set")
    for a in points:
        if all(frac_mod1(b.rep - a.rep) < HALF for b in points):
            return True
    return False


def sullivan_vanishes_on_cube(points: Sequence[CirclePoint], cap: int = 12) -> bool:
    """Brute force the cocycle over all triples (with repetition) of the set."""
    pts = sorted(set(points))
    if len(pts) > cap:
        raise InvalidInputError(f"set larger than the brute-force cap {cap}")
    return all(sullivan_eval(x, y, z) == 0 for x, y, z in product(pts, repeat=3))


# ----------------------------------------------------------------------
# non-degenerate two-cochains as eight-value tables
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class NondegCochain2:
    """An invariant non-degenerate 2-cochain by its eight class values."""

    f_id: int
    f_01: int
    f_02: int
    f_12: int
    f_012: int
    f_021: int
    f_plus: int
    f_minus: int

    def value_on(self, cls: NondegClass) -> int:
        return {
            NondegClass.IDENT: self.f_id,
            NondegClass.T01: self.f_01,
            NondegClass.T02: self.f_02,
            NondegClass.T12: self.f_12,
            NondegClass.C012: self.f_012,
            NondegClass.C021: self.f_021,
            NondegClass.PLUS: self.f_plus,
            NondegClass.MINUS: self.f_minus,
        }[cls]

    def __call__(self, x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
        return self.value_on(classify_nondeg_triple(x, y, z))

    def row(self) -> tuple[int, int, int, int] | None:
        """The (f^+, f^-, f_+, f_-) presentation when the symmetric values agree."""
        if self.f_id == self.f_012 == self.f_021 and self.f_01 == self.f_02 == self.f_12:
            return (self.f_id, self.f_01, self.f_plus, self.f_minus)
        return None

    @classmethod
    def from_row(cls, f_even: int, f_odd: int, f_plus: int, f_minus: int) -> "NondegCochain2":
        return cls(f_even, f_odd, f_odd, f_odd, f_even, f_even, f_plus, f_minus)


@dataclass(frozen=True)
class NondegAnalysis:
    is_cocycle: bool
    class_index: int | None


def analyze_nondeg_cochain2(f: NondegCochain2) -> NondegAnalysis:
    """Cocycle conditions and the integer class index of an eight-value table.

    Cocycle iff the three even values agree, the three odd values agree,
    and even + odd = f_+ + f_-; the index f_+ - 2 f^+ + f^- classifies up
    to coboundary.
    """
    row = f.row()
    if row is None:
        return NondegAnalysis(False, None)
    f_even, f_odd, f_plus, f_minus = row
    if f_even + f_odd != f_plus + f_minus:
        return NondegAnalysis(False, None)
    return NondegAnalysis(True, f_plus - 2 * f_even + f_odd)


def nondeg_coboundary(w_plus: int, w_minus: int) -> NondegCochain2:
    """The coboundary of the invariant non-degenerate 1-cochain (w_+, w_-)."""
    return NondegCochain2.from_row(
        w_plus, w_minus, 2 * w_plus - w_minus, 2 * w_minus - w_plus
    )


# class representatives built from (x0, x1, x2, antipode(x0)) positively
# oriented: x0 = 0, x1 = 1/8, x2 = 1/4
_R0 = CirclePoint.of(0)
_R1 = CirclePoint.of(Fraction(1, 8))
_R2 = CirclePoint.of(Fraction(1, 4))
_R1BAR = _R1.antipode()

NONDEG_REPRESENTATIVES: dict[NondegClass, tuple[CirclePoint, CirclePoint, CirclePoint]] = {
    NondegClass.IDENT: (_R0, _R1, _R2),
    NondegClass.T01: (_R1, _R0, _R2),
    NondegClass.T02: (_R2, _R1, _R0),
    NondegClass.T12: (_R0, _R2, _R1),
    NondegClass.C012: (_R1, _R2, _R0),
    NondegClass.C021: (_R2, _R0, _R1),
    NondegClass.PLUS: (_R0, _R2, _R1BAR),
    NondegClass.MINUS: (_R0, _R1BAR, _R2),
}


def nondeg_table_of(
    cocycle: Callable[[CirclePoint, CirclePoint, CirclePoint], int]
) -> NondegCochain2:
    """Evaluate a triple cochain on the eight class representatives."""
    vals = {cls: cocycle(*rep) for cls, rep in NONDEG_REPRESENTATIVES.items()}
    return NondegCochain2(
        vals[NondegClass.IDENT],
        vals[NondegClass.T01],
        vals[NondegClass.T02],
        vals[NondegClass.T12],
        vals[NondegClass.C012],
        vals[NondegClass.C021],
        vals[NondegClass.PLUS],
        vals[NondegClass.MINUS],
    )


# ----------------------------------------------------------------------
# the double cover group
# ----------------------------------------------------------------------


def project_to_base(x: CirclePoint) -> CirclePoint:
    """The covering map of the model: double the coordinate."""
    return CirclePoint.of(2 * x.rep)


@dataclass(frozen=True)
class DoubleCoverHomeo:
    """A circle homeomorphism commuting with the antipode x -> x + 1/2.

    The canonical lift sends 0 into [0, 1); the half-period equivariance
    lift(x + 1/2) = lift(x) + 1/2 is verified structurally.
    """

    lift: PLLift

    def __post_init__(self) -> None:
        if self.lift.kind != STRICT:
            raise InvalidInputError("double cover elements need strict lifts")
        if not (0 <= self.lift(0) < 1):
            raise InvalidInputError("canonical lift must send 0 into [0,1)")
        if _precompose_half(self.lift) != self.lift.shift(HALF):
            raise InvalidInputError("lift does not commute with the antipode")

    @classmethod
    def rotation(cls, alpha) -> "DoubleCoverHomeo":
        return cls(PLLift.translation(frac_mod1(Fraction(alpha))))

    @classmethod
    def from_half_vertices(
        cls, vertices: Sequence[tuple[Fraction, Fraction]]
    ) -> "DoubleCoverHomeo":
        """Build from graph vertices over [0, 1/2); the rest is antipode-forced."""
        xs = [Fraction(x) for x, _ in vertices]
        ys = [Fraction(y) for _, y in vertices]
        if any(not (0 <= x < HALF) for x in xs):
            raise InvalidInputError("vertices must lie in [0, 1/2)")
        full = list(zip(xs, ys)) + [(x + HALF, y + HALF) for x, y in zip(xs, ys)]
        lift = PLLift.strict_from_vertices(full)
        n = math.floor(lift(0))
        return cls(lift.shift(-n))

    def __call__(self, x: CirclePoint) -> CirclePoint:
        return CirclePoint.of(self.lift(x.rep))

    def antipode_image_check(self, x: CirclePoint) -> bool:
        return self(x.antipode()) == self(x).antipode()

    def compose(self, other: "DoubleCoverHomeo") -> "DoubleCoverHomeo":
        lift = compose(self.lift, other.lift)
        return DoubleCoverHomeo(lift.shift(-math.floor(lift(0))))

    def inverse(self) -> "DoubleCoverHomeo":
        lift = invert(self.lift)
        return DoubleCoverHomeo(lift.shift(-math.floor(lift(0))))

    def project(self) -> CircleHomeo:
        """The induced homeomorphism of the base circle (coordinates doubled)."""
        vertices = []
        for b, v in zip(self.lift.breakpoints, self.lift.point):
            if b < HALF:
                vertices.append((2 * b, 2 * v))
        if not vertices:
            vertices = [(Fraction(0), 2 * self.lift(0))]
        lift = PLLift.strict_from_vertices(sorted(vertices))
        return CircleHomeo(lift.shift(-math.floor(lift(0))))


def _precompose_half(f: PLLift) -> PLLift:
    """The lift x -> f(x + 1/2)."""
    from .plmaps import _canonical

    entries = []
    for b, l, v, r in zip(f.breakpoints, f.left, f.point, f.right):
        p = frac_mod1(b - HALF)
        k = (b - HALF) - p
        entries.append((p, l - k * f.rise, v - k * f.rise, r - k * f.rise))
    entries.sort()
    return PLLift(
        f.kind,
        *_canonical(
            tuple(e[0] for e in entries),
            tuple(e[1] for e in entries),
            tuple(e[2] for e in entries),
            tuple(e[3] for e in entries),
            f.rise,
        ),
        rise=f.rise,
    )


# ----------------------------------------------------------------------
# pullbacks along double-cover actions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCoverAction:
    """Generators of an action by antipode-equivariant homeomorphisms."""

    generators: tuple[DoubleCoverHomeo, ...]

    @property
    def k(self) -> int:
        return len(self.generators)

    def evaluate_word(self, word: Sequence[int]) -> DoubleCoverHomeo:
        out = DoubleCoverHomeo.rotation(0)
        for letter in word:
            if letter == 0 or abs(letter) > self.k:
                raise InvalidInputError(f"letter {letter} out of range")
            g = self.generators[abs(letter) - 1]
            out = out.compose(g if letter > 0 else g.inverse())
        return out


@dataclass(frozen=True)
class PullbackZeroTest:
    vanished: bool
    witness: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None
    value: int | None


def pullback_sullivan(
    action: DoubleCoverAction, basepoint: CirclePoint
) -> Callable[[Sequence[int], Sequence[int], Sequence[int]], int]:
    """The Sullivan cocycle pulled back along the orbit map of the action."""

    def ev(w0: Sequence[int], w1: Sequence[int], w2: Sequence[int]) -> int:
        pts = [action.evaluate_word(tuple(w))(basepoint) for w in (w0, w1, w2)]
        return sullivan_eval(*pts)

    return ev


def pullback_zero_test(
    action: DoubleCoverAction, basepoint: CirclePoint, radius: int
) -> PullbackZeroTest:
    """Exhaustive zero test of the pulled-back cocycle over a word ball."""
    from .actions import reduced_words

    ev = pullback_sullivan(action, basepoint)
    words = list(reduced_words(action.k, radius))
    points = {w: action.evaluate_word(w)(basepoint) for w in words}
    distinct: dict[CirclePoint, tuple[int, ...]] = {}
    for w, p in points.items():
        distinct.setdefault(p, w)
    reps = list(distinct.items())
    for p0, w0 in reps:
        for p1, w1 in reps:
            for p2, w2 in reps:
                value = sullivan_eval(p0, p1, p2)
                if value != 0:
                    return PullbackZeroTest(False, (w0, w1, w2), value)
    return PullbackZeroTest(True, None, None)


# the reference comparison table for the four named cocycles, as
# (f^+, f^-, f_+, f_-) rows with their class indices
REFERENCE_TABLE: dict[str, tuple[tuple[int, int, int, int], int]] = {
    "sullivan": ((0, 0, 1, -1), 1),
    "euler_pullback": ((1, 0, 0, 1), -2),
    "orientation": ((1, -1, 1, -1), -2),
    "orientation_pullback": ((1, -1, -1, 1), -4),
}
