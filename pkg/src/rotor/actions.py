"""Finitely generated group actions on the circle.

Groups are free groups on k generators with optional declared relations
(checked structurally, no word-problem solving).  Words are tuples of
nonzero integers, letter i meaning generator i-1 and -i its inverse, read
left to right as a group product acting on the left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .arcsets import Arc, ArcSet
from .circle import CirclePoint, InvalidInputError, frac_mod1
from .plmaps import (
    CircleHomeo,
    MonotoneDegreeOneMap,
    PLLift,
    compose,
    decompose,
    devil_staircase,
    invert,
    project_equal,
    translation_fixed_set,
)

Word = tuple[int, ...]


class InvalidWordError(InvalidInputError):
    """Raised for words with out-of-range letters."""


class InvalidOrbitError(InvalidInputError):
    """Raised when a claimed finite orbit is not invariant."""


class InvalidWidthsError(InvalidInputError):
    """Raised for blow-up widths that are non-positive or sum to >= 1."""


class NotAPrimitiveError(InvalidInputError):
    """Raised when an integer table fails the coboundary equation for a lift."""


class ActionValidationError(InvalidInputError):
    """Raised when declared lifts or relations fail their invariants."""


@dataclass(frozen=True)
class GroupAction:
    """Generators of a circle action, with optional lifts and relations."""

    generators: tuple[CircleHomeo, ...]
    lifts: tuple[PLLift, ...] | None = None
    relations: tuple[Word, ...] = ()

    @property
    def k(self) -> int:
        return len(self.generators)

    @classmethod
    def rotation_action(cls, alpha, with_lift: bool = True) -> "GroupAction":
        h = CircleHomeo.rotation(alpha)
        lifts = (PLLift.translation(frac_mod1(Fraction(alpha))),) if with_lift else None
        return cls((h,), lifts)

    @classmethod
    def zaction(cls, h: CircleHomeo, lift: PLLift | None = None) -> "GroupAction":
        return cls((h,), (lift,) if lift is not None else (h.lift,))

    @classmethod
    def trivial(cls, k: int = 1, with_lifts: bool = True) -> "GroupAction":
        gens = tuple(CircleHomeo.identity() for _ in range(k))
        lifts = tuple(PLLift.identity() for _ in range(k)) if with_lifts else None
        return cls(gens, lifts)

    def validate(self) -> None:
        """Check lifts project to the generators and relations act trivially."""
        if self.lifts is not None:
            if len(self.lifts) != self.k:
                raise ActionValidationError("one lift per generator required")
            for i, (g, lift) in enumerate(zip(self.generators, self.lifts)):
                if decompose(lift)[0] != g:
                    raise ActionValidationError(
                        f"lift {i} does not project to generator {i}"
                    )
        for rel in self.relations:
            if not evaluate_word(self, rel).is_identity():
                raise ActionValidationError(f"relation {list(rel)} does not act trivially")

    def with_lifts(self, lifts: Sequence[PLLift]) -> "GroupAction":
        return GroupAction(self.generators, tuple(lifts), self.relations)

    def sigma_lifts(self) -> tuple[PLLift, ...]:
        """The canonical bounded-section lifts of the generators."""
        return tuple(g.lift for g in self.generators)


def _check_letter(action: GroupAction, letter: int) -> None:
    if letter == 0 or abs(letter) > action.k:
        raise InvalidWordError(f"letter {letter} out of range for {action.k} generators")


def evaluate_word(action: GroupAction, word: Sequence[int]) -> CircleHomeo:
    """The circle homeomorphism of a word (empty word: identity)."""
    out = CircleHomeo.identity()
    for letter in word:
        _check_letter(action, letter)
        g = action.generators[abs(letter) - 1]
        out = out.compose(g if letter > 0 else g.inverse())
    return out


def evaluate_word_lift(action: GroupAction, word: Sequence[int]) -> PLLift:
    """The lifted word through the action's chosen generator lifts."""
    if action.lifts is None:
        raise InvalidInputError("action has no chosen lifts")
    out = PLLift.identity()
    for letter in word:
        _check_letter(action, letter)
        lift = action.lifts[abs(letter) - 1]
        out = compose(out, lift if letter > 0 else invert(lift))
    return out


def act(action: GroupAction, word: Sequence[int], x: CirclePoint) -> CirclePoint:
    return evaluate_word(action, word)(x)


def reduced_words(k: int, max_length: int) -> Iterator[Word]:
    """All freely reduced words of length <= max_length, by length."""
    letters = [i for i in range(1, k + 1)] + [-i for i in range(1, k + 1)]
    layer: list[Word] = [()]
    yield ()
    for _ in range(max_length):
        nxt: list[Word] = []
        for w in layer:
            for letter in letters:
                if w and w[-1] == -letter:
                    continue
                nw = w + (letter,)
                nxt.append(nw)
                yield nw
        layer = nxt


# ----------------------------------------------------------------------
# fixed sets and finite orbits
# ----------------------------------------------------------------------


def fixed_set(h: CircleHomeo) -> ArcSet:
    """Exact solution set of h(x) = x on the circle.

    The canonical lift's displacement lies in (-1, 2), so circle fixed
    points are solutions of lift(x) = x or lift(x) = x + 1.
    """
    pieces: list[tuple[Fraction, Fraction]] = []
    for p in (0, 1):
        sols = translation_fixed_set(h.lift, p)
        if sols.full:
            return ArcSet.full_circle()
        pieces.extend((a.start, a.length) for a in sols.arcs)
    return ArcSet.of(pieces)


def global_fixed_set(action: GroupAction) -> ArcSet:
    """Points fixed by every generator (hence by the whole action)."""
    out = ArcSet.full_circle()
    for g in action.generators:
        out = out.intersect(fixed_set(g))
        if out.is_empty():
            return out
    return out


@dataclass(frozen=True)
class FiniteOrbit:
    points: tuple[CirclePoint, ...]

    @property
    def size(self) -> int:
        return len(self.points)


def orbit_closure(
    action: GroupAction, start: CirclePoint, size_bound: int
) -> FiniteOrbit | None:
    """Closure of a point under generators and inverses, None above the bound."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt: list[CirclePoint] = []
        for p in frontier:
            for g in action.generators:
                for image in (g(p), g.inverse()(p)):
                    if image not in seen:
                        seen.add(image)
                        if len(seen) > size_bound:
                            return None
                        nxt.append(image)
        frontier = nxt
    return FiniteOrbit(tuple(sorted(seen)))


def finite_orbit_search(
    action: GroupAction, size_bound: int, candidate_word_length: int = 2
) -> FiniteOrbit | None:
    """Search for a finite invariant orbit of size within the bound.

    Candidate points are 0 plus boundary points of fixed sets of short
    words; each candidate's closure under generators and inverses is
    computed breadth-first and abandoned when it exceeds the bound.  A
    None return means none was found within the bound, not nonexistence.
    """
    if size_bound < 1:
        raise InvalidInputError("size_bound must be at least 1")
    candidates: list[CirclePoint] = []
    for word in reduced_words(action.k, candidate_word_length):
        if not word:
            continue
        fs = fixed_set(evaluate_word(action, word))
        candidates.extend(fs.boundary_points())
        if len(candidates) > 64:
            break
    candidates = sorted(set(candidates)) + [CirclePoint.of(0)]
    for c in candidates:
        orbit = orbit_closure(action, c, size_bound)
        if orbit is not None:
            return orbit
    return None


# ----------------------------------------------------------------------
# the supremum fixed point of a bounded lifted action
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SupFixedPointResult:
    status: str                    # "stabilized" | "growing" | "unbounded"
    value: Fraction | None = None  # current sup of the lifted orbit of 0
    radius: int | None = None      # ball radius reached (word-ball route)


def sup_fixed_point(action: GroupAction, ball_radius: int = 6) -> SupFixedPointResult:
    """The supremum of the lifted orbit of 0, certified fixed when attained.

    Cyclic lifted actions are resolved exactly: the supremum is the
    smallest fixed point of the lift at or above 0, or the orbit is
    unbounded when the lift has none.  General actions enumerate the word
    ball; "stabilized" requires the sup value unchanged from the previous
    radius and bit-exactly fixed by every lifted generator.
    """
    if action.lifts is None:
        raise InvalidInputError("sup_fixed_point requires chosen lifts")
    if action.k == 1:
        lift = action.lifts[0]
        sols = translation_fixed_set(lift, 0)
        if sols.is_empty():
            return SupFixedPointResult("unbounded")
        value = sols.min_representative()
        assert lift(value) == value
        return SupFixedPointResult("stabilized", value=value)
    sup_prev: Fraction | None = None
    sup_cur: Fraction | None = None
    current: list[tuple[Word, PLLift]] = [((), PLLift.identity())]
    sup_cur = Fraction(0)
    for radius in range(1, ball_radius + 1):
        nxt: list[tuple[Word, PLLift]] = []
        for w, lift in current:
            for letter in [i for i in range(1, action.k + 1)] + [-i for i in range(1, action.k + 1)]:
                if w and w[-1] == -letter:
                    continue
                g = action.lifts[abs(letter) - 1]
                nxt.append((w + (letter,), compose(lift, g if letter > 0 else invert(g))))
        current = nxt
        sup_prev = sup_cur
        sup_cur = max([sup_cur] + [lift(0) for _, lift in nxt])
        if sup_cur >= Fraction(radius, 2):
            return SupFixedPointResult("unbounded", value=sup_cur, radius=radius)
        if sup_cur == sup_prev and all(l(sup_cur) == sup_cur for l in action.lifts):
            return SupFixedPointResult("stabilized", value=sup_cur, radius=radius)
    return SupFixedPointResult("growing", value=sup_cur, radius=ball_radius)


# ----------------------------------------------------------------------
# lifts from integral primitives and back
# ----------------------------------------------------------------------


def lift_action_from_primitive(action: GroupAction, u: Sequence[int]) -> GroupAction:
    """Lift each generator to sigma(g) - u(g), per the lifting formula.

    Declared relations must lift to the exact identity; otherwise the
    table is not a primitive of the pulled-back obstruction cocycle for
    any homomorphic lift and :class:`NotAPrimitiveError` is raised.
    """
    if len(u) != action.k:
        raise InvalidInputError("one integer per generator required")
    lifts = tuple(g.lift.shift(-ui) for g, ui in zip(action.generators, u))
    lifted = action.with_lifts(lifts)
    for rel in action.relations:
        if evaluate_word_lift(lifted, rel) != PLLift.identity():
            raise NotAPrimitiveError(
                f"relation {list(rel)} lifts to a nontrivial deck translation"
            )
    return lifted


def primitive_from_lift(action: GroupAction) -> Callable[[Sequence[int]], int]:
    """The integer table u(w) = sigma(w)(0) - lifted(w)(0) recovered from lifts."""
    if action.lifts is None:
        raise InvalidInputError("action has no chosen lifts")

    def u(word: Sequence[int]) -> int:
        lifted = evaluate_word_lift(action, word)
        return -math.floor(lifted(0))

    return u


# ----------------------------------------------------------------------
# blow-up and collapse
# ----------------------------------------------------------------------


def orbit_permutation(g: CircleHomeo, orbit: Sequence[CirclePoint]) -> int:
    """The cyclic index shift induced on a sorted invariant finite set."""
    pts = sorted(orbit)
    k = len(pts)
    images = [g(p) for p in pts]
    if set(images) != set(pts):
        raise InvalidOrbitError("generator does not preserve the orbit")
    index = {p: i for i, p in enumerate(pts)}
    shift = index[images[0]]
    for i, img in enumerate(images):
        if index[img] != (i + shift) % k:
            raise InvalidOrbitError("generator does not shift the orbit cyclically")
    return shift


def blow_up(
    action: GroupAction,
    orbit: Sequence[CirclePoint],
    widths: Sequence[Fraction],
) -> tuple[GroupAction, tuple[Arc, ...]]:
    """Insert an arc of the given width at each orbit point.

    Each generator extends affinely across the inserted arcs (the arc at x
    maps affinely onto the arc at g(x)); the complement is compressed by
    the factor 1 - sum(widths) so the new circle again has unit length.
    Returns the new action together with the invariant arc system.
    """
    pts = sorted(set(orbit))
    if len(pts) != len(orbit):
        raise InvalidOrbitError("orbit points must be distinct")
    k = len(pts)
    widths = [Fraction(w) for w in widths]
    if len(widths) != k:
        raise InvalidWidthsError("one width per orbit point required")
    if any(w <= 0 for w in widths):
        raise InvalidWidthsError("widths must be positive")
    total = sum(widths, Fraction(0))
    if total >= 1:
        raise InvalidWidthsError(f"widths sum to {total} >= 1")
    shifts = [orbit_permutation(g, pts) for g in action.generators]
    scale = 1 - total
    xs = [p.rep for p in pts] + [pts[0].rep + 1]
    alpha = [Fraction(0)]
    for i in range(k):
        alpha.append(alpha[i] + widths[i] + scale * (xs[i + 1] - xs[i]))
    assert alpha[k] == 1

    def psi(i: int, t: Fraction) -> Fraction:
        # old lifted coordinate t in [xs[i], xs[i+1]] -> new lifted coordinate
        return alpha[i] + widths[i] + scale * (t - xs[i])

    new_gens: list[CircleHomeo] = []
    for g, shift in zip(action.generators, shifts):
        lift = g.lift
        samples: list[tuple[Fraction, Fraction]] = []
        for i in range(k):
            j = (i + shift) % k
            samples.append((frac_mod1(alpha[i]), frac_mod1(alpha[j])))
            samples.append((frac_mod1(alpha[i] + widths[i]), frac_mod1(alpha[j] + widths[j])))
            # generator breakpoints interior to the gap (xs[i], xs[i+1])
            base_image = lift(xs[i])
            for b in lift.breakpoints:
                m = math.floor(xs[i] - b) + 1
                while b + m < xs[i + 1]:
                    if b + m > xs[i]:
                        t = b + m
                        img = lift(t) - base_image  # offset into the image gap
                        samples.append(
                            (frac_mod1(psi(i, t)), frac_mod1(alpha[j] + widths[j] + scale * img))
                        )
                    m += 1
        samples = sorted(set(samples))
        xs_new = [s for s, _ in samples]
        ys_new = [y for _, y in samples]
        new_gens.append(CircleHomeo(PLLift.from_circle_samples(xs_new, ys_new)))
    arcs = tuple(Arc(frac_mod1(alpha[i]), widths[i]) for i in range(k))
    return GroupAction(tuple(new_gens), relations=action.relations), arcs


def collapse(
    action: GroupAction, arcs: Sequence[Arc]
) -> tuple[GroupAction, MonotoneDegreeOneMap]:
    """Collapse an invariant system of disjoint closed arcs to points.

    Returns the quotient action and the collapsing map phi, with the exact
    equivariance quotient(g) . phi = phi . g verified structurally for
    every generator.
    """
    phi = devil_staircase(arcs)
    if not arcs:
        return action, phi
    phit = phi.good_lift
    starts = {a.start: a for a in arcs}
    for g in action.generators:
        for a in arcs:
            img_start = g(CirclePoint.of(a.start))
            target = starts.get(img_start.rep)
            if target is None:
                raise InvalidOrbitError("arc image does not start at an arc")
            img_end = g(CirclePoint.of(frac_mod1(a.end)))
            if img_end.rep != frac_mod1(target.end):
                raise InvalidOrbitError("arc image does not match an arc of the system")
    new_gens: list[CircleHomeo] = []
    for g in action.generators:
        lift = g.lift
        crit: set[Fraction] = set(lift.breakpoints)
        for a in arcs:
            crit.add(a.start)
            crit.add(frac_mod1(a.end))
        samples: dict[Fraction, Fraction] = {}
        for x in sorted(crit):
            u = frac_mod1(phit(x))
            v = frac_mod1(phit(lift(x)))
            if u in samples and samples[u] != v:
                raise InvalidOrbitError("arc system is not invariant under a generator")
            samples[u] = v
        xs = sorted(samples)
        new_lift = PLLift.from_circle_samples(xs, [samples[x] for x in xs])
        new_g = CircleHomeo.from_lift(new_lift)
        if not project_equal(compose(new_g.lift, phit), compose(phit, lift)):
            raise InvalidOrbitError("quotient action failed exact equivariance")
        new_gens.append(new_g)
    return GroupAction(tuple(new_gens), relations=action.relations), phi
