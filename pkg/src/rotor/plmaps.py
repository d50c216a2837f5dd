"""Piecewise-linear lifts of circle maps, with exact jump data.

A :class:`PLLift` stores one period of a piecewise-affine map f: R -> R with
f(x + 1) = f(x) + rise.  At each breakpoint b the triple (left, point,
right) records the left limit, the value, and the right limit, so genuinely
discontinuous monotone maps are first-class citizens.  Strict lifts
(continuous, strictly increasing, rise 1) model lifted circle
homeomorphisms; monotone lifts (non-decreasing with jumps, rise 1) model
good lifts of non-decreasing degree one maps.  The ``raw`` kind is an
unvalidated container used for pointwise differences.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .arcsets import Arc, ArcSet, check_disjoint_arcs
from .circle import (
    CirclePoint,
    InvalidInputError,
    RationalLike,
    as_fraction,
    frac_mod1,
    lift_in_window,
    oriented_ranks,
)

STRICT = "strict"
MONOTONE = "monotone"
RAW = "raw"

ZERO = Fraction(0)
ONE = Fraction(1)


class NotDegreeOneMapError(InvalidInputError):
    """Raised when a finite table is not the restriction of a degree one map."""


def _canonical(
    bps: tuple[Fraction, ...],
    left: tuple[Fraction, ...],
    point: tuple[Fraction, ...],
    right: tuple[Fraction, ...],
    rise: Fraction,
) -> tuple[tuple[Fraction, ...], ...]:
    """Drop breakpoints where the map is affine; normalize pure-affine maps."""
    m = len(bps)

    def seg(i: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        a = bps[i]
        if i + 1 < m:
            return a, bps[i + 1], right[i], left[i + 1]
        return a, bps[0] + 1, right[i], left[0] + rise

    keep: list[int] = []
    for i in range(m):
        if not (left[i] == point[i] == right[i]):
            keep.append(i)
            continue
        if m == 1:
            continue  # lone continuous breakpoint of an affine map
        a_prev, b_prev, va_prev, vb_prev = seg(i - 1 if i > 0 else m - 1)
        a_cur, b_cur, va_cur, vb_cur = seg(i)
        slope_prev = (vb_prev - va_prev) / (b_prev - a_prev)
        slope_cur = (vb_cur - va_cur) / (b_cur - a_cur)
        if slope_prev != slope_cur:
            keep.append(i)
            continue
        # collinearity with the previous segment, in lifted position
        x_here = bps[i] if i > 0 else bps[0] + 1
        target = point[i] if i > 0 else point[0] + rise
        if va_prev + slope_prev * (x_here - a_prev) != target:
            keep.append(i)
    if not keep:
        # globally affine with slope == rise: f(x) = f(0) + rise * x
        c = point[0] - rise * bps[0]
        return (ZERO,), (c,), (c,), (c,)
    if len(keep) == m:
        return bps, left, point, right
    return (
        tuple(bps[i] for i in keep),
        tuple(left[i] for i in keep),
        tuple(point[i] for i in keep),
        tuple(right[i] for i in keep),
    )


@dataclass(frozen=True)
class PLLift:
    """One period of a piecewise-affine lift f with f(x+1) = f(x) + rise.

    ``breakpoints`` is a non-empty strictly increasing tuple in [0, 1); the
    map is affine on each open segment between consecutive breakpoints,
    running from right[i] at breakpoints[i] to left[i+1] at the next one
    (wrapping to left[0] + rise).  Instances are kept canonical, so
    structural equality is pointwise equality.
    """

    kind: str
    breakpoints: tuple[Fraction, ...]
    left: tuple[Fraction, ...]
    point: tuple[Fraction, ...]
    right: tuple[Fraction, ...]
    rise: Fraction = ONE

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def make(
        cls,
        kind: str,
        breakpoints: Sequence[RationalLike],
        left: Sequence[RationalLike],
        point: Sequence[RationalLike],
        right: Sequence[RationalLike],
        rise: RationalLike = 1,
    ) -> "PLLift":
        """Build, canonicalize and validate a lift from raw data."""
        bps = tuple(as_fraction(b) for b in breakpoints)
        lf = tuple(as_fraction(v) for v in left)
        pt = tuple(as_fraction(v) for v in point)
        rt = tuple(as_fraction(v) for v in right)
        r = as_fraction(rise)
        if not bps:
            raise InvalidInputError("a PLLift needs at least one breakpoint")
        if not (len(bps) == len(lf) == len(pt) == len(rt)):
            raise InvalidInputError("breakpoint/value arrays differ in length")
        if any(not (0 <= b < 1) for b in bps):
            raise InvalidInputError("breakpoints must lie in [0,1)")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise InvalidInputError("breakpoints must be strictly increasing")
        lift = cls(kind, *_canonical(bps, lf, pt, rt, r), rise=r)
        problems = lift.validate()
        if problems:
            raise InvalidInputError("; ".join(problems))
        return lift

    @classmethod
    def raw(
        cls,
        breakpoints: Sequence[Fraction],
        left: Sequence[Fraction],
        point: Sequence[Fraction],
        right: Sequence[Fraction],
        rise: Fraction,
    ) -> "PLLift":
        """Unvalidated container (differences, deliberately broken inputs)."""
        return cls(
            RAW,
            *_canonical(tuple(breakpoints), tuple(left), tuple(point), tuple(right), Fraction(rise)),
            rise=Fraction(rise),
        )

    @classmethod
    def identity(cls) -> "PLLift":
        return cls.make(STRICT, [0], [0], [0], [0])

    @classmethod
    def translation(cls, c: RationalLike) -> "PLLift":
        """The lift x -> x + c (lift of a rotation)."""
        c = as_fraction(c)
        return cls.make(STRICT, [0], [c], [c], [c])

    @classmethod
    def floor_step(cls, y0: RationalLike = 0) -> "PLLift":
        """The good lift x -> y0 + floor(x) of a constant circle map."""
        y0 = as_fraction(y0)
        return cls.make(MONOTONE, [0], [y0 - 1], [y0], [y0])

    @classmethod
    def strict_from_vertices(
        cls, vertices: Sequence[tuple[RationalLike, RationalLike]]
    ) -> "PLLift":
        """Continuous strictly increasing lift through graph vertices.

        Vertices are (x, f(x)) over one period: x strictly increasing in
        [0, 1), values strictly increasing, with the wrap segment supplying
        the remainder of the unit rise.
        """
        xs = [as_fraction(x) for x, _ in vertices]
        ys = [as_fraction(y) for _, y in vertices]
        return cls.make(STRICT, xs, ys, ys, ys)

    @classmethod
    def from_circle_samples(
        cls, xs: Sequence[Fraction], ys_mod1: Sequence[Fraction]
    ) -> "PLLift":
        """Strict lift through circle-valued samples via the minimal lift walk.

        The samples must include every breakpoint of the intended map and be
        listed with x strictly increasing in [0, 1); the values, read mod 1,
        must wind once around in cyclic order.
        """
        if len(xs) != len(ys_mod1) or not xs:
            raise InvalidInputError("sample arrays empty or mismatched")
        lifted = [frac_mod1(ys_mod1[0])]
        for y in ys_mod1[1:]:
            prev = lifted[-1]
            cand = lift_in_window(CirclePoint.of(y), prev)
            if cand == prev:
                cand += 1
            lifted.append(cand)
        if lifted[-1] >= lifted[0] + 1:
            raise InvalidInputError("samples do not wind once around the circle")
        return cls.make(STRICT, xs, lifted, lifted, lifted)

    # ------------------------------------------------------------------
    # validation
    # ------------------------------------------------------------------

    def validate(self) -> list[str]:
        """Violated structural constraints for the declared kind (empty if valid)."""
        problems: list[str] = []
        if self.kind == RAW:
            return problems
        if self.kind not in (STRICT, MONOTONE):
            return [f"unknown kind {self.kind!r}"]
        if self.rise != 1:
            problems.append(f"rise per period is {self.rise}, expected 1")
        m = len(self.breakpoints)
        for i in range(m):
            if not (self.left[i] <= self.point[i] <= self.right[i]):
                problems.append(
                    f"values at breakpoint {self.breakpoints[i]} not ordered L<=V<=R"
                )
        for i in range(m):
            _, _, va, vb = self._segment(i)
            if self.kind == STRICT and vb <= va:
                problems.append(f"segment after {self.breakpoints[i]} not strictly increasing")
            if self.kind == MONOTONE and vb < va:
                problems.append(f"segment after {self.breakpoints[i]} decreasing")
        if self.kind == STRICT:
            for i in range(m):
                if not (self.left[i] == self.point[i] == self.right[i]):
                    problems.append(f"jump at breakpoint {self.breakpoints[i]} in strict lift")
        return problems

    # ------------------------------------------------------------------
    # evaluation
    # ------------------------------------------------------------------

    def _locate(self, x: Fraction) -> tuple[int, int]:
        """Reduce x into the stored window; return (period offset, slot index)."""
        b0 = self.breakpoints[0]
        k = math.floor(x - b0)
        x0 = x - k
        i = bisect_right(self.breakpoints, x0) - 1
        return k, i

    def _segment(self, i: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Open segment after breakpoint i: (a, b, value at a+, value at b-)."""
        m = len(self.breakpoints)
        a = self.breakpoints[i]
        if i + 1 < m:
            return a, self.breakpoints[i + 1], self.right[i], self.left[i + 1]
        return a, self.breakpoints[0] + 1, self.right[i], self.left[0] + self.rise

    def segments(self) -> Iterator[tuple[Fraction, Fraction, Fraction, Fraction]]:
        for i in range(len(self.breakpoints)):
            yield self._segment(i)

    def slope(self, i: int) -> Fraction:
        a, b, va, vb = self._segment(i)
        return (vb - va) / (b - a)

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_fraction(x)
        k, i = self._locate(x)
        x0 = x - k
        if x0 == self.breakpoints[i]:
            return self.point[i] + k * self.rise
        a, b, va, vb = self._segment(i)
        return va + (vb - va) * (x0 - a) / (b - a) + k * self.rise

    def left_limit(self, x: RationalLike) -> Fraction:
        x = as_fraction(x)
        k, i = self._locate(x)
        if x - k == self.breakpoints[i]:
            return self.left[i] + k * self.rise
        return self(x)

    def right_limit(self, x: RationalLike) -> Fraction:
        x = as_fraction(x)
        k, i = self._locate(x)
        if x - k == self.breakpoints[i]:
            return self.right[i] + k * self.rise
        return self(x)

    def slope_left_of(self, x: Fraction) -> Fraction:
        k, i = self._locate(x)
        if x - k == self.breakpoints[i]:
            return self.slope((i - 1) % len(self.breakpoints))
        return self.slope(i)

    def slope_right_of(self, x: Fraction) -> Fraction:
        _, i = self._locate(x)
        return self.slope(i)

    # ------------------------------------------------------------------
    # algebra
    # ------------------------------------------------------------------

    def shift(self, c: RationalLike) -> "PLLift":
        """Post-translate: x -> f(x) + c."""
        c = as_fraction(c)
        return PLLift(
            self.kind,
            self.breakpoints,
            tuple(v + c for v in self.left),
            tuple(v + c for v in self.point),
            tuple(v + c for v in self.right),
            self.rise,
        )

    def compose(self, g: "PLLift") -> "PLLift":
        return compose(self, g)

    def inverse(self) -> "PLLift":
        return invert(self)

    def power(self, n: int) -> "PLLift":
        """n-fold composition power (negative n through the inverse)."""
        if n == 0:
            return PLLift.identity()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = compose(out, base)
        return out

    def is_translation(self) -> bool:
        return (
            len(self.breakpoints) == 1
            and self.left == self.point == self.right
            and self.rise == 1
            and self.slope(0) == 1
        )

    def is_continuous(self) -> bool:
        return all(
            self.left[i] == self.point[i] == self.right[i]
            for i in range(len(self.breakpoints))
        )

    def graph_vertices(self) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
        """Per breakpoint: (b, left, point, right) over one period."""
        return list(zip(self.breakpoints, self.left, self.point, self.right))


# ----------------------------------------------------------------------
# composition, inversion, lattice and difference operations
# ----------------------------------------------------------------------


def compose(f: PLLift, g: PLLift) -> PLLift:
    """Exact PL data of f(g(x)); the inner map must have rise 1."""
    if g.rise != 1:
        raise InvalidInputError("inner map of a composition must have rise 1")
    cands = set(g.breakpoints)
    for i in range(len(g.breakpoints)):
        a, b, va, vb = g._segment(i)
        if va == vb:
            continue
        slope = (vb - va) / (b - a)
        for c in f.breakpoints:
            k = math.floor(va - c) + 1
            while c + k < vb:
                if c + k > va:
                    cands.add(frac_mod1(a + (c + k - va) / slope))
                k += 1
    xs = sorted(cands)
    left, point, right = [], [], []
    for x in xs:
        point.append(f(g(x)))
        lam = g.left_limit(x)
        left.append(f(lam) if g.slope_left_of(x) == 0 else f.left_limit(lam))
        mu = g.right_limit(x)
        right.append(f(mu) if g.slope_right_of(x) == 0 else f.right_limit(mu))
    if f.kind == RAW or g.kind == RAW:
        kind = RAW
    elif f.kind == STRICT and g.kind == STRICT:
        kind = STRICT
    else:
        kind = MONOTONE
    out = PLLift(
        kind,
        *_canonical(tuple(xs), tuple(left), tuple(point), tuple(right), f.rise),
        rise=f.rise,
    )
    problems = out.validate()
    if problems:
        raise InvalidInputError("composition produced invalid data: " + "; ".join(problems))
    return out


def invert(f: PLLift) -> PLLift:
    """Inverse of a strict lift, again strict."""
    if f.kind != STRICT:
        raise InvalidInputError("only strict lifts are invertible")
    pairs = []
    for b, v in zip(f.breakpoints, f.point):
        k = math.floor(v)
        pairs.append((v - k, b - k))
    pairs.sort()
    ys = [p[1] for p in pairs]
    return PLLift.make(STRICT, [p[0] for p in pairs], ys, ys, ys)


def pl_max(f: PLLift, g: PLLift) -> PLLift:
    """Pointwise maximum of two monotone lifts of equal rise."""
    if f.rise != g.rise:
        raise InvalidInputError("pointwise max needs equal rises")
    cands = set(f.breakpoints) | set(g.breakpoints)
    merged = sorted(cands)
    m = len(merged)
    for i in range(m):
        a = merged[i]
        b = merged[i + 1] if i + 1 < m else merged[0] + 1
        da = f.right_limit(a) - g.right_limit(a)
        db = f.left_limit(b) - g.left_limit(b)
        if (da < 0 < db) or (db < 0 < da):
            cands.add(frac_mod1(a + (b - a) * (-da) / (db - da)))
    xs = sorted(cands)
    left = tuple(max(f.left_limit(x), g.left_limit(x)) for x in xs)
    point = tuple(max(f(x), g(x)) for x in xs)
    right = tuple(max(f.right_limit(x), g.right_limit(x)) for x in xs)
    kind = STRICT if f.kind == STRICT and g.kind == STRICT else MONOTONE
    out = PLLift(kind, *_canonical(tuple(xs), left, point, right, f.rise), rise=f.rise)
    problems = out.validate()
    if problems:
        raise InvalidInputError("pointwise max produced invalid data: " + "; ".join(problems))
    return out


def pl_difference(f: PLLift, g: PLLift) -> PLLift:
    """Pointwise difference f - g as a raw profile (rise may be any integer)."""
    xs = sorted(set(f.breakpoints) | set(g.breakpoints))
    left = tuple(f.left_limit(x) - g.left_limit(x) for x in xs)
    point = tuple(f(x) - g(x) for x in xs)
    right = tuple(f.right_limit(x) - g.right_limit(x) for x in xs)
    return PLLift.raw(tuple(xs), left, point, right, f.rise - g.rise)


def is_integer_valued(d: PLLift) -> bool:
    """Whether a profile takes only integer values (hence is locally constant)."""
    if d.rise.denominator != 1:
        return False
    for i in range(len(d.breakpoints)):
        _, _, va, vb = d._segment(i)
        if va != vb:
            return False
    return all(v.denominator == 1 for vs in (d.left, d.point, d.right) for v in vs)


def constant_value(d: PLLift) -> Fraction | None:
    """The constant value of a profile, or None if it is not constant."""
    if d.rise != 0:
        return None
    vals = set(d.left) | set(d.point) | set(d.right)
    if len(vals) != 1:
        return None
    for i in range(len(d.breakpoints)):
        _, _, va, vb = d._segment(i)
        if va != vb:
            return None
    return next(iter(vals))


def step_profile(d: PLLift) -> list[tuple[Fraction, Fraction, Fraction]]:
    """A locally-constant profile as pieces (start, end, value).

    Zero-length pieces are the values at breakpoints; positive pieces carry
    the constant value of the open segment after them.
    """
    pieces: list[tuple[Fraction, Fraction, Fraction]] = []
    for i in range(len(d.breakpoints)):
        a, b, va, vb = d._segment(i)
        if va != vb:
            raise InvalidInputError("profile is not locally constant")
        pieces.append((a, a, d.point[i]))
        pieces.append((a, b, va))
    return pieces


def project_equal(f: PLLift, g: PLLift) -> bool:
    """Whether f and g define the same circle map (difference integer valued)."""
    return is_integer_valued(pl_difference(f, g))


def translation_fixed_set(f: PLLift, p: RationalLike) -> ArcSet:
    """Exact solution set of f(x) = x + p on the circle, for continuous f."""
    if not f.is_continuous():
        raise InvalidInputError("translation_fixed_set expects a continuous lift")
    p = as_fraction(p)
    pieces: list[tuple[Fraction, Fraction]] = []
    for i, b in enumerate(f.breakpoints):
        if f.point[i] - b - p == 0:
            pieces.append((b, ZERO))
    for i in range(len(f.breakpoints)):
        a, b, va, vb = f._segment(i)
        da = va - a - p
        db = vb - b - p
        if da == 0 and db == 0:
            pieces.append((frac_mod1(a), b - a))
        elif (da < 0 < db) or (db < 0 < da):
            x = a + (b - a) * (-da) / (db - da)
            pieces.append((frac_mod1(x), ZERO))
    return ArcSet.of(pieces)


def round_up_map(fixed: ArcSet) -> PLLift:
    """The monotone step map x -> min{y >= x with y in the set}.

    The set must be a non-empty union of closed arcs; the result is the
    identity on the set and constant (the next component's start) on each
    complementary gap.
    """
    if fixed.full:
        return PLLift.identity()
    if fixed.is_empty():
        raise InvalidInputError("round_up_map needs a non-empty set")
    comps = sorted(fixed.arcs, key=lambda a: a.start)
    entries: list[tuple[Fraction, Fraction, Fraction, Fraction]] = []
    r = len(comps)
    for j, comp in enumerate(comps):
        next_start = comps[j + 1].start if j + 1 < r else comps[0].start + 1
        s, e = comp.start, comp.end
        if comp.is_point():
            entries.append((s, s, s, next_start))
        else:
            entries.append((s, s, s, s))
            k = math.floor(e) if e >= 1 else 0
            entries.append((frac_mod1(e), e - k, e - k, next_start - k))
    entries.sort()
    return PLLift.make(
        MONOTONE,
        [x for x, _, _, _ in entries],
        [l for _, l, _, _ in entries],
        [v for _, _, v, _ in entries],
        [rr for _, _, _, rr in entries],
    )


# ----------------------------------------------------------------------
# circle homeomorphisms and monotone degree one maps
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CircleHomeo:
    """An orientation-preserving circle homeomorphism via its bounded lift.

    The stored lift is the canonical section choice: the unique lift
    sending 0 into [0, 1).
    """

    lift: PLLift

    def __post_init__(self) -> None:
        if self.lift.kind != STRICT:
            raise InvalidInputError("a circle homeomorphism needs a strict lift")
        if not (0 <= self.lift(0) < 1):
            raise InvalidInputError("canonical lift must send 0 into [0,1)")

    @classmethod
    def identity(cls) -> "CircleHomeo":
        return cls(PLLift.identity())

    @classmethod
    def rotation(cls, alpha: RationalLike) -> "CircleHomeo":
        return cls(PLLift.translation(frac_mod1(as_fraction(alpha))))

    @classmethod
    def from_lift(cls, lift: PLLift) -> "CircleHomeo":
        return decompose(lift)[0]

    def __call__(self, x: CirclePoint) -> CirclePoint:
        return CirclePoint.of(self.lift(x.rep))

    def compose(self, other: "CircleHomeo") -> "CircleHomeo":
        return decompose(compose(self.lift, other.lift))[0]

    def inverse(self) -> "CircleHomeo":
        return decompose(invert(self.lift))[0]

    def power(self, n: int) -> "CircleHomeo":
        if n == 0:
            return CircleHomeo.identity()
        return decompose(self.lift.power(n))[0]

    def is_identity(self) -> bool:
        return self.lift == PLLift.identity()


def decompose(lift: PLLift) -> tuple[CircleHomeo, int]:
    """Split a strict lift into its circle homeomorphism and deck translation.

    Returns (h, n) with lift = sigma(h) + n and n = floor(lift(0)).
    """
    if lift.kind != STRICT:
        raise InvalidInputError("decompose() expects a strict lift")
    n = math.floor(lift(0))
    return CircleHomeo(lift.shift(-n)), n


@dataclass(frozen=True)
class MonotoneDegreeOneMap:
    """A non-decreasing degree one circle map held by one good lift."""

    good_lift: PLLift

    def __post_init__(self) -> None:
        if self.good_lift.kind not in (STRICT, MONOTONE):
            raise InvalidInputError("good lift must be strict or monotone")
        problems = self.good_lift.validate()
        if problems:
            raise InvalidInputError("; ".join(problems))

    @classmethod
    def identity(cls) -> "MonotoneDegreeOneMap":
        return cls(PLLift.identity())

    def __call__(self, x: CirclePoint) -> CirclePoint:
        return CirclePoint.of(self.good_lift(x.rep))

    def compose(self, other: "MonotoneDegreeOneMap") -> "MonotoneDegreeOneMap":
        return MonotoneDegreeOneMap(compose(self.good_lift, other.good_lift))

    def is_continuous(self) -> bool:
        return self.good_lift.is_continuous()

    def is_constant_map(self) -> bool:
        g = self.good_lift
        return all(g.slope(i) == 0 for i in range(len(g.breakpoints)))


# ----------------------------------------------------------------------
# good-lift predicates and constructions
# ----------------------------------------------------------------------


def validate_good_lift(f: PLLift) -> bool:
    """True iff f is non-decreasing, translation-commuting and jump-consistent."""
    if f.rise != 1:
        return False
    m = len(f.breakpoints)
    for i in range(m):
        if not (f.left[i] <= f.point[i] <= f.right[i]):
            return False
    for i in range(m):
        _, _, va, vb = f._segment(i)
        if vb < va:
            return False
    return True


def quadruple_test(
    table: Mapping[CirclePoint, CirclePoint],
    exhaustive_cap: int = 40,
    samples: int = 20000,
    seed: int = 0,
) -> bool:
    """Whether the table maps weakly positively oriented 4-tuples to such.

    Exhaustive over the fourth power of the domain up to ``exhaustive_cap``
    points, seeded sampling above.  Orientation tests run on ranks in the
    fixed cyclic order, integer comparisons only.
    """
    domain = sorted(table.keys())
    if not domain:
        raise InvalidInputError("quadruple_test needs a non-empty table")
    values = sorted({table[p] for p in domain})
    val_rank = {p: i for i, p in enumerate(values)}
    img = [val_rank[table[p]] for p in domain]
    n = len(domain)

    def check(quad: tuple[int, int, int, int]) -> bool:
        if oriented_ranks(quad):
            return oriented_ranks(tuple(img[i] for i in quad))
        return True

    if n <= exhaustive_cap:
        rng_idx = range(n)
        return all(
            check((a, b, c, d))
            for a in rng_idx
            for b in rng_idx
            for c in rng_idx
            for d in rng_idx
        )
    import random

    rng = random.Random(seed)
    return all(
        check(tuple(rng.randrange(n) for _ in range(4))) for _ in range(samples)
    )


def extract_good_lift(table: Mapping[CirclePoint, CirclePoint]) -> PLLift:
    """A good lift (right-continuous step function) through a finite table.

    Follows the constructive window argument: anchor two points with
    distinct images, lift images over the first stretch into [y0, y0+1)
    and over the second into (y0, y0+1].  Constant tables give
    y0 + floor(x).  Raises :class:`NotDegreeOneMapError` when the
    quadruple test fails.
    """
    if not table:
        raise InvalidInputError("extract_good_lift needs a non-empty table")
    if not quadruple_test(table):
        raise NotDegreeOneMapError("table maps some oriented quadruple out of order")
    domain = sorted(table.keys())
    images = {table[p] for p in domain}
    if len(images) == 1:
        return PLLift.floor_step(next(iter(images)).rep)
    x0 = domain[0]
    y0 = table[x0]
    x0t = x0.rep
    y0t = y0.rep
    x1 = next(p for p in domain if table[p] != y0)
    x1t = lift_in_window(x1, x0t)
    window_pairs: list[tuple[Fraction, Fraction]] = []
    for p in domain:
        pt = lift_in_window(p, x0t)
        yt = lift_in_window(table[p], y0t)
        if pt > x1t and yt == y0t:
            yt += 1
        window_pairs.append((pt, yt))
    window_pairs.sort()
    for (_, v1), (_, v2) in zip(window_pairs, window_pairs[1:]):
        if v2 < v1:
            raise NotDegreeOneMapError("window lifting is not monotone")
    circle_pairs = sorted(
        (frac_mod1(pt), yt - (pt - frac_mod1(pt))) for pt, yt in window_pairs
    )
    xs = [p for p, _ in circle_pairs]
    ws = [w for _, w in circle_pairs]
    m = len(xs)
    left = [ws[i - 1] - (1 if i == 0 else 0) for i in range(m)]
    return PLLift.make(MONOTONE, xs, left, ws, ws)


def upper_semicontinuize(phi: MonotoneDegreeOneMap) -> MonotoneDegreeOneMap:
    """Replace each point value by its left limit (sup over y < x)."""
    g = phi.good_lift
    return MonotoneDegreeOneMap(
        PLLift(g.kind, *_canonical(g.breakpoints, g.left, g.left, g.right, g.rise), rise=g.rise)
    )


def devil_staircase(arcs: Sequence[Arc]) -> MonotoneDegreeOneMap:
    """Continuous monotone degree one map collapsing each arc to a point.

    The complement is rescaled affinely (slope 1/(1 - total length)) so the
    quotient circle has unit length; the map is constant exactly on the
    arcs.  An empty system gives the identity.
    """
    arcs = [a for a in arcs if not a.is_point()]
    if not arcs:
        return MonotoneDegreeOneMap.identity()
    check_disjoint_arcs(arcs)
    ordered = sorted(arcs, key=lambda a: a.start)
    total = sum((a.length for a in ordered), ZERO)
    scale = 1 - total
    # walk one period from the first arc start, tracking complement measure
    vertices: list[tuple[Fraction, Fraction]] = []
    acc = ZERO
    cursor = ordered[0].start
    for arc in ordered:
        gap = arc.start - cursor
        if gap < 0:
            raise InvalidInputError("arc walk out of order")
        acc += gap
        vertices.append((arc.start, acc / scale))
        vertices.append((arc.end, acc / scale))
        cursor = arc.end
    entries = []
    for x, v in vertices:
        k = math.floor(x)
        entries.append((x - k, v - k))
    entries.sort()
    xs = [x for x, _ in entries]
    vs = [v for _, v in entries]
    return MonotoneDegreeOneMap(PLLift.make(MONOTONE, xs, vs, vs, vs))
