"""Semi-conjugacy between circle actions: checking and constructing.

A left-semi-conjugacy from action one to action two is a non-decreasing
degree one map phi with rho1(g) . phi = phi . rho2(g) for every generator.
The checker compares both composites exactly as PL-with-jumps data (their
difference must be integer valued; it need not be constant).  The builder
realizes the supremum construction: a word-ball maximum with structural
stabilization detection for general actions, and a closed form for the
infinite supremum for cyclic actions with exact rational rotation number,
where the limit is reachable because the coset tails evaluate through the
round-up map onto the periodic set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .circle import CirclePoint, InvalidInputError, frac_mod1
from .actions import GroupAction
from .plmaps import (
    MONOTONE,
    CircleHomeo,
    MonotoneDegreeOneMap,
    PLLift,
    compose,
    constant_value,
    invert,
    is_integer_valued,
    pl_difference,
    pl_max,
    round_up_map,
    step_profile,
    translation_fixed_set,
)
from .rotation import TranslationNumberResult, translation_number

STALL_TOLERANCE = Fraction(1, 2 ** 40)


class NotSemiconjugateError(InvalidInputError):
    """Raised when rotation numbers certify that no semi-conjugacy exists."""


def check_left_semiconjugacy(
    a1: GroupAction, a2: GroupAction, phi: MonotoneDegreeOneMap
) -> bool:
    """Exact test of rho1(g) . phi = phi . rho2(g) for every generator.

    Both sides are composed as PL data through the canonical lifts; the
    circle identity holds iff the pointwise difference of the composites is
    integer valued (it may jump between integers, as the constant-map
    examples show).
    """
    if a1.k != a2.k:
        raise InvalidInputError("actions must share the generator count")
    phit = phi.good_lift
    for g1, g2 in zip(a1.generators, a2.generators):
        lhs = compose(g1.lift, phit)
        rhs = compose(phit, g2.lift)
        if not is_integer_valued(pl_difference(lhs, rhs)):
            return False
    return True


@dataclass(frozen=True)
class NGammaReport:
    """Per-generator translation discrepancy of a lifted semi-conjugacy."""

    equivariant: bool
    constants: tuple[int | None, ...]
    profiles: tuple[tuple[tuple[Fraction, Fraction, Fraction], ...] | None, ...]
    normalized_lifts1: tuple[PLLift, ...] | None

    @property
    def all_constant(self) -> bool:
        return all(c is not None for c in self.constants)


def analyze_n_gamma(
    a1: GroupAction, a2: GroupAction, phi: MonotoneDegreeOneMap
) -> NGammaReport:
    """Compute n_g(x) = lift1(g)(phit(x)) - phit(lift2(g)(x)) per generator.

    When every n_g is constant, the first action's lifts are shifted by
    -n_g and the on-the-nose lifted equivariance is verified structurally.
    Non-constant discrepancies are returned as exact step profiles.
    """
    if a1.lifts is None or a2.lifts is None:
        raise InvalidInputError("both actions need chosen lifts")
    phit = phi.good_lift
    constants: list[int | None] = []
    profiles: list[tuple | None] = []
    equivariant = True
    diffs: list[PLLift] = []
    for l1, l2 in zip(a1.lifts, a2.lifts):
        d = pl_difference(compose(l1, phit), compose(phit, l2))
        diffs.append(d)
        if not is_integer_valued(d):
            equivariant = False
            constants.append(None)
            profiles.append(None)
            continue
        c = constant_value(d)
        if c is None:
            constants.append(None)
            profiles.append(tuple(step_profile(d)))
        else:
            constants.append(int(c))
            profiles.append(None)
    normalized = None
    if equivariant and all(c is not None for c in constants):
        normalized = tuple(
            l1.shift(-c) for l1, c in zip(a1.lifts, constants)
        )
        for nl, l2 in zip(normalized, a2.lifts):
            if compose(nl, phit) != compose(phit, l2):
                raise AssertionError("normalized lifts failed exact equivariance")
    return NGammaReport(equivariant, tuple(constants), tuple(profiles), normalized)


@dataclass(frozen=True)
class CircleSubset:
    """A finite union of arcs with individually open or closed endpoints."""

    pieces: tuple[tuple[Fraction, Fraction, bool, bool], ...]
    full: bool = False

    def is_empty(self) -> bool:
        return not self.full and not self.pieces

    def contains(self, x: CirclePoint) -> bool:
        if self.full:
            return True
        for start, end, closed_start, closed_end in self.pieces:
            lifted = x.rep + math.ceil(start - x.rep)
            if lifted < start or lifted > end:
                continue
            if lifted == start and not closed_start:
                continue
            if lifted == end and not closed_end:
                continue
            return True
        return False

    def sample_points(self, per_piece: int = 1) -> list[CirclePoint]:
        if self.full:
            return [CirclePoint.of(0), CirclePoint.of(Fraction(1, 3))]
        out = []
        for start, end, closed_start, closed_end in self.pieces:
            if start == end:
                out.append(CirclePoint.of(start))
                continue
            out.append(CirclePoint.of((start + end) / 2))
            if closed_start:
                out.append(CirclePoint.of(start))
            if closed_end:
                out.append(CirclePoint.of(end))
        return out


def injective_invariant_sets(phi: MonotoneDegreeOneMap) -> tuple[CircleSubset, CircleSubset]:
    """The sets where a point is the inf (resp. sup) of its level set.

    Level sets of a good lift are points or intervals; the returned
    projections are exactly the loci where the map is injective from the
    left (resp. right).  At least one of the two is always non-empty.
    """
    g = phi.good_lift
    m = len(g.breakpoints)

    def qualifies_minus(i: int) -> bool:
        if g.left[i] < g.point[i]:
            return True
        return g.left[i] == g.point[i] and g.slope((i - 1) % m) > 0

    def qualifies_plus(i: int) -> bool:
        if g.point[i] < g.right[i]:
            return True
        return g.point[i] == g.right[i] and g.slope(i) > 0

    def build(qualifies) -> CircleSubset:
        # cyclic element list: even slots are breakpoints, odd slots the
        # open segments after them; maximal runs of included elements are
        # the components
        included = []
        for i in range(m):
            included.append(qualifies(i))
            included.append(g.slope(i) > 0)
        n = 2 * m
        if all(included):
            return CircleSubset((), full=True)
        if not any(included):
            return CircleSubset(())

        def position(elem: int, winding: int) -> Fraction:
            return g.breakpoints[(elem // 2) % m] + winding

        start_scan = next(e for e in range(n) if not included[e])
        pieces: list[tuple[Fraction, Fraction, bool, bool]] = []
        e = start_scan
        scanned = 0
        while scanned < n:
            e = (e + 1) % n
            scanned += 1
            if not included[e]:
                continue
            run = [e]
            while scanned < n and included[(e + 1) % n]:
                e = (e + 1) % n
                scanned += 1
                run.append(e)
            first, last = run[0], run[-1]
            start = g.breakpoints[first // 2]
            closed_start = first % 2 == 0
            # walk to compute the lifted end position
            winding = 0
            prev = first
            for elem in run[1:]:
                if elem < prev:
                    winding += 1
                prev = elem
            if last % 2 == 0:
                end = g.breakpoints[last // 2] + winding
                closed_end = True
            else:
                nxt = (last // 2 + 1) % m
                end = g.breakpoints[nxt] + (winding + 1 if nxt == 0 else winding)
                closed_end = False
            pieces.append((frac_mod1(start), frac_mod1(start) + (end - start), closed_start, closed_end))
        pieces.sort()
        return CircleSubset(tuple(pieces))

    return build(qualifies_minus), build(qualifies_plus)


# ----------------------------------------------------------------------
# the supremum construction
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class SupConstructionReport:
    phi: MonotoneDegreeOneMap | None
    status: str          # "stabilized" | "diverged" | "stalled" | "exhausted"
    radius: int
    verified: bool
    detail: str = ""


def _exact_rotation_pair(
    a1: GroupAction, a2: GroupAction, max_period: int
) -> tuple[TranslationNumberResult, TranslationNumberResult] | None:
    if a1.k != 1 or a1.lifts is None or a2.lifts is None:
        return None
    r1 = translation_number(a1.lifts[0], max_period=max_period, max_iters=64)
    r2 = translation_number(a2.lifts[0], max_period=max_period, max_iters=64)
    if r1.is_exact and r2.is_exact:
        return r1, r2
    return None


def construct_semiconjugacy_sup(
    a1: GroupAction,
    a2: GroupAction,
    ball_radius: int,
    grid: int = 64,
    max_period: int = 24,
) -> SupConstructionReport:
    """Word-ball supremum of lift1(w)^-1 . lift2(w), with stabilization check.

    The running maximum over words of length <= N is an exact continuous
    strict lift at every stage; "stabilized" means structural equality
    between consecutive radii plus the exact semi-conjugacy check.  For
    cyclic actions whose exact rotation numbers differ the construction
    reports divergence immediately (complete by the rotation-number
    invariant); otherwise unbounded growth of the value at 0 is flagged
    heuristically.
    """
    if a1.k != a2.k:
        raise InvalidInputError("actions must share the generator count")
    if a1.lifts is None or a2.lifts is None:
        raise InvalidInputError("both actions need chosen lifts")
    pair = _exact_rotation_pair(a1, a2, max_period)
    if pair is not None:
        r1, r2 = pair
        if r1.value != r2.value:
            if frac_mod1(r1.value) != frac_mod1(r2.value):
                detail = (
                    f"rotation numbers differ: {r1.value} vs {r2.value} (mod 1); "
                    "no semi-conjugacy exists"
                )
            else:
                detail = (
                    f"translation numbers differ by an integer: {r1.value} vs "
                    f"{r2.value}; match_lifts must be applied first"
                )
            return SupConstructionReport(None, "diverged", 0, False, detail)
    current = PLLift.identity()
    value_prev = current(0)
    strictly_growing = True
    stalled = False
    words: dict[tuple[int, ...], tuple[PLLift, PLLift]] = {
        (): (PLLift.identity(), PLLift.identity())
    }
    frontier = [()]
    for radius in range(1, ball_radius + 1):
        nxt = []
        new_terms: list[PLLift] = []
        for w in frontier:
            inv1, l2 = words[w]
            for letter in [i for i in range(1, a1.k + 1)] + [-i for i in range(1, a1.k + 1)]:
                if w and w[-1] == -letter:
                    continue
                nw = w + (letter,)
                g1 = a1.lifts[abs(letter) - 1]
                g2 = a2.lifts[abs(letter) - 1]
                # word product w * letter: lift1(nw)^-1 = lift1(letter)^-1 . lift1(w)^-1
                ninv1 = compose(invert(g1) if letter > 0 else g1, inv1)
                nl2 = compose(l2, g2 if letter > 0 else invert(g2))
                # note lift2 composes on the right of the previous word
                words[nw] = (ninv1, nl2)
                nxt.append(nw)
                new_terms.append(compose(ninv1, nl2))
        frontier = nxt
        prev = current
        for t in new_terms:
            current = pl_max(current, t)
        if current == prev:
            phi = MonotoneDegreeOneMap(current)
            if check_left_semiconjugacy(a1, a2, phi):
                return SupConstructionReport(phi, "stabilized", radius, True)
        value_cur = current(0)
        if value_cur <= value_prev:
            strictly_growing = False
        if strictly_growing and value_cur - Fraction(0) >= 2:
            return SupConstructionReport(
                MonotoneDegreeOneMap(current),
                "diverged",
                radius,
                False,
                "value at 0 grew monotonically past 2; sup appears unbounded",
            )
        gap = max(
            abs(current(Fraction(j, grid)) - prev(Fraction(j, grid))) for j in range(grid)
        )
        stalled = gap < STALL_TOLERANCE and current != prev
        value_prev = value_cur
    phi = MonotoneDegreeOneMap(current)
    status = "stalled" if stalled else "exhausted"
    return SupConstructionReport(
        phi, status, ball_radius, check_left_semiconjugacy(a1, a2, phi)
    )


def match_lifts(
    a1: GroupAction, a2: GroupAction, max_period: int = 24
) -> tuple[GroupAction, GroupAction, int]:
    """Shift the second cyclic action's lift so both translation numbers agree.

    Raises :class:`NotSemiconjugateError` when the rotation numbers differ
    mod 1 (a complete invariant for cyclic actions).
    """
    if a1.k != 1 or a2.k != 1:
        raise InvalidInputError("match_lifts applies to cyclic actions")
    if a1.lifts is None or a2.lifts is None:
        raise InvalidInputError("both actions need chosen lifts")
    r1 = translation_number(a1.lifts[0], max_period=max_period, max_iters=64)
    r2 = translation_number(a2.lifts[0], max_period=max_period, max_iters=64)
    if not (r1.is_exact and r2.is_exact):
        raise InvalidInputError("match_lifts needs exact rotation numbers")
    diff = r1.value - r2.value
    if diff.denominator != 1:
        raise NotSemiconjugateError(
            f"rotation numbers {frac_mod1(r1.value)} and {frac_mod1(r2.value)} differ"
        )
    n = int(diff)
    return a1, a2.with_lifts((a2.lifts[0].shift(n),)), n


def exact_sup_semiconjugacy(
    a1: GroupAction, a2: GroupAction, max_period: int = 24
) -> MonotoneDegreeOneMap:
    """The full-group supremum map for cyclic actions, in closed form.

    Requires matched lifts with a common exact rational translation number
    p/q.  Tail terms along each coset n + qZ factor through the round-up
    map onto the fixed set of lift^q - p, so the infinite supremum is an
    exact finite PL computation; the result may genuinely jump.  The
    constructed map is verified by :func:`check_left_semiconjugacy`.
    """
    if a1.k != 1 or a2.k != 1:
        raise InvalidInputError("exact_sup_semiconjugacy applies to cyclic actions")
    if a1.lifts is None or a2.lifts is None:
        raise InvalidInputError("both actions need chosen lifts")
    A = a1.lifts[0]
    B = a2.lifts[0]
    rA = translation_number(A, max_period=max_period, max_iters=64)
    rB = translation_number(B, max_period=max_period, max_iters=64)
    if not (rA.is_exact and rB.is_exact):
        raise InvalidInputError("exact construction needs exact rotation numbers")
    if rA.value != rB.value:
        if frac_mod1(rA.value) != frac_mod1(rB.value):
            raise NotSemiconjugateError(
                f"rotation numbers {frac_mod1(rA.value)} and {frac_mod1(rB.value)} differ"
            )
        raise InvalidInputError("translation numbers differ by an integer; match lifts first")
    t = rA.value
    q, p = t.denominator, t.numerator

    def max_terms() -> PLLift:
        out = PLLift.identity()
        term = PLLift.identity()
        for _ in range(1, q):
            term = compose(compose(invert(A), term), B)
            out = pl_max(out, term)
        return out

    if A.is_translation():
        g_b = B.power(q).shift(-p)
        bplus = round_up_map(translation_fixed_set(g_b, 0))
        phit = compose(max_terms(), bplus)
    elif B.is_translation():
        g_a = A.power(q).shift(-p)
        aplus = round_up_map(translation_fixed_set(g_a, 0))
        phit = compose(aplus, max_terms())
    else:
        rot = GroupAction.rotation_action(frac_mod1(t))
        rot = rot.with_lifts((PLLift.translation(t),))
        phi1 = exact_sup_semiconjugacy(a1, rot, max_period)
        phi2 = exact_sup_semiconjugacy(rot, a2, max_period)
        phit = compose(phi1.good_lift, phi2.good_lift)
    phi = MonotoneDegreeOneMap(phit)
    if not check_left_semiconjugacy(a1, a2, phi):
        raise AssertionError("exact supremum construction failed verification")
    return phi


@dataclass(frozen=True)
class StraightenReport:
    status: str                          # "exact" | "inconclusive"
    rotation_action: GroupAction | None
    rotation_number: Fraction | None
    to_rotation: MonotoneDegreeOneMap | None    # action left-semi-conj to rotation
    from_rotation: MonotoneDegreeOneMap | None  # rotation left-semi-conj to action
    interval: tuple[Fraction, Fraction] | None = None


def straighten_to_rotation(
    action: GroupAction, max_period: int = 24, max_iters: int = 4096
) -> StraightenReport:
    """Semi-conjugate a cyclic action to the rotation by its rotation number.

    Both directions of the supremum construction are run and verified;
    with only an interval available the report is inconclusive.
    """
    if action.k != 1:
        raise InvalidInputError("straighten_to_rotation applies to cyclic actions")
    lifts = action.lifts if action.lifts is not None else action.sigma_lifts()
    lifted = action.with_lifts(lifts)
    res = translation_number(lifts[0], max_period=max_period, max_iters=max_iters)
    if not res.is_exact:
        return StraightenReport("inconclusive", None, None, None, None, (res.lo, res.hi))
    alpha = frac_mod1(res.value)
    rot = GroupAction.rotation_action(alpha).with_lifts((PLLift.translation(res.value),))
    to_rot = exact_sup_semiconjugacy(lifted, rot, max_period)
    from_rot = exact_sup_semiconjugacy(rot, lifted, max_period)
    return StraightenReport("exact", GroupAction.rotation_action(alpha), alpha, to_rot, from_rot)


# ----------------------------------------------------------------------
# gluing two actions along matched finite orbits
# ----------------------------------------------------------------------


class CannotGlueError(InvalidInputError):
    """Raised when the induced orbit permutations disagree."""


@dataclass(frozen=True)
class GlueResult:
    action: GroupAction
    collapse_to_first: MonotoneDegreeOneMap   # left-semi-conjugacy from a1
    collapse_to_second: MonotoneDegreeOneMap  # left-semi-conjugacy from a2


def glue_finite_orbit_actions(
    a1: GroupAction,
    a2: GroupAction,
    orbit1: Sequence[CirclePoint],
    orbit2: Sequence[CirclePoint],
) -> GlueResult:
    """Interleave two actions along finite orbits of equal size.

    The new circle alternates the closed arcs between consecutive points of
    the first orbit with those of the second (each rescaled by one half);
    a generator acts by the first action on the odd arcs and by the second
    on the even arcs, which is well defined exactly when both induce the
    same cyclic shift on their orbits.  The two collapsing maps are
    continuous degree one left-semi-conjugacies, verified exactly.
    """
    from .actions import orbit_permutation

    if a1.k != a2.k:
        raise InvalidInputError("actions must share the generator count")
    pts1 = sorted(set(orbit1))
    pts2 = sorted(set(orbit2))
    if len(pts1) != len(pts2) or not pts1:
        raise InvalidInputError("orbits must be non-empty and of equal size")
    k = len(pts1)
    shifts1 = [orbit_permutation(g, pts1) for g in a1.generators]
    shifts2 = [orbit_permutation(g, pts2) for g in a2.generators]
    if shifts1 != shifts2:
        raise CannotGlueError(
            f"orbit permutations disagree: {shifts1} vs {shifts2}"
        )
    half = Fraction(1, 2)
    xs = [p.rep for p in pts1] + [pts1[0].rep + 1]
    ys = [p.rep for p in pts2] + [pts2[0].rep + 1]
    u_len = [xs[i + 1] - xs[i] for i in range(k)]
    v_len = [ys[i + 1] - ys[i] for i in range(k)]
    # positions of the interleaved arcs on the new circle
    pos_u = [Fraction(0)]
    pos_v = []
    for i in range(k):
        pos_v.append(pos_u[i] + u_len[i] * half)
        pos_u.append(pos_v[i] + v_len[i] * half)
    assert pos_u[k] == 1

    def build_generator(g1: CircleHomeo, g2: CircleHomeo, shift: int) -> CircleHomeo:
        samples: list[tuple[Fraction, Fraction]] = []
        for i in range(k):
            j = (i + shift) % k
            for (pos, lens, lift, base_pts) in (
                (pos_u, u_len, g1.lift, xs),
                (pos_v, v_len, g2.lift, ys),
            ):
                start, image_start = pos[i], pos[j]
                samples.append((frac_mod1(start), frac_mod1(image_start)))
                base_val = lift(base_pts[i])
                for b in lift.breakpoints:
                    m = math.floor(base_pts[i] - b) + 1
                    while b + m < base_pts[i + 1]:
                        if b + m > base_pts[i]:
                            t = b + m
                            z = start + (t - base_pts[i]) * half
                            img = image_start + (lift(t) - base_val) * half
                            samples.append((frac_mod1(z), frac_mod1(img)))
                        m += 1
        samples = sorted(set(samples))
        return CircleHomeo(
            PLLift.from_circle_samples([s for s, _ in samples], [v for _, v in samples])
        )

    new_gens = tuple(
        build_generator(g1, g2, s)
        for g1, g2, s in zip(a1.generators, a2.generators, shifts1)
    )
    a3 = GroupAction(new_gens)

    def collapse_map(keep_first: bool) -> MonotoneDegreeOneMap:
        # arcs of the kept family map affinely (slope 2) onto the original
        # circle; arcs of the other family collapse to the junction points
        xs_new: list[Fraction] = []
        vs_new: list[Fraction] = []
        for i in range(k):
            if keep_first:
                # value runs xs[i] -> xs[i+1] on the U arc, constant after
                xs_new.extend([pos_u[i], pos_v[i]])
                vs_new.extend([xs[i], xs[i + 1]])
            else:
                # constant ys[i] on the U arc, runs ys[i] -> ys[i+1] on V
                xs_new.extend([pos_u[i], pos_v[i]])
                vs_new.extend([ys[i], ys[i]])
        return MonotoneDegreeOneMap(PLLift.make(MONOTONE, xs_new, vs_new, vs_new, vs_new))

    phi1 = collapse_map(True)
    phi2 = collapse_map(False)
    if not check_left_semiconjugacy(a1, a3, phi1):
        raise AssertionError("first collapse failed exact equivariance")
    if not check_left_semiconjugacy(a2, a3, phi2):
        raise AssertionError("second collapse failed exact equivariance")
    if not (phi1.is_continuous() and phi2.is_continuous()):
        raise AssertionError("collapse maps must be continuous")
    return GlueResult(a3, phi1, phi2)
