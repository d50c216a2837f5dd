"""Independent brute-force oracles for the subtlest exact machinery.

These cross-check jump bookkeeping (one-sided limits through compositions
and maxima), the arc-set algebra, level-set analysis, round-up maps and
the closed-form supremum against direct pointwise probing with exact
rational offsets.
"""

import random
from fractions import Fraction as F

from rotor.arcsets import ArcSet
from rotor.checks import Sampler
from rotor.circle import CirclePoint
from rotor.plmaps import (
    PLLift,
    compose,
    decompose,
    invert,
    pl_max,
    round_up_map,
    translation_fixed_set,
)
from rotor.semiconj import exact_sup_semiconjugacy, injective_invariant_sets
from rotor.actions import GroupAction

o = CirclePoint.of


def probe_offset(lift: PLLift) -> F:
    gaps = []
    bps = list(lift.breakpoints) + [lift.breakpoints[0] + 1]
    gaps.extend(b2 - b1 for b1, b2 in zip(bps, bps[1:]))
    return min(gaps) / 4


def test_compose_jump_data_against_probing(rng):
    s = Sampler(rng)
    for _ in range(60):
        f = s.monotone_lift()
        g = s.monotone_lift()
        h = compose(f, g)
        probe = probe_offset(h)

        def oracle(x, f=f, g=g):
            return f(g(x))

        for x in list(h.breakpoints) + [s.fraction(40) for _ in range(5)]:
            assert h(x) == oracle(x)
        # within the last probe interval the composite is affine, so
        # extrapolating two oracle samples hits the stored limits exactly
        for b in h.breakpoints:
            y1 = oracle(b - probe / 2)
            y2 = oracle(b - probe / 4)
            assert h.left_limit(b) == y2 + (y2 - y1)
            z1 = oracle(b + probe / 2)
            z2 = oracle(b + probe / 4)
            assert h.right_limit(b) == z2 + (z2 - z1)


def test_pl_max_jump_data_against_probing(rng):
    s = Sampler(rng)
    for _ in range(60):
        f = s.monotone_lift()
        g = s.monotone_lift()
        h = pl_max(f, g)
        probe = probe_offset(h)
        for x in list(h.breakpoints) + [s.fraction(40) for _ in range(5)]:
            assert h(x) == max(f(x), g(x))
        for b in h.breakpoints:
            y1 = max(f(b - probe / 2), g(b - probe / 2))
            y2 = max(f(b - probe / 4), g(b - probe / 4))
            assert h.left_limit(b) == y2 + (y2 - y1)
            z1 = max(f(b + probe / 2), g(b + probe / 2))
            z2 = max(f(b + probe / 4), g(b + probe / 4))
            assert h.right_limit(b) == z2 + (z2 - z1)


def test_arcset_membership_against_pieces(rng):
    for _ in range(150):
        pieces = []
        for _ in range(rng.randint(0, 5)):
            start = F(rng.randrange(0, 24), 24)
            length = F(rng.randrange(0, 13), 24)
            pieces.append((start, length))
        normalized = ArcSet.of(pieces)

        def raw_contains(x: CirclePoint) -> bool:
            from rotor.circle import lift_in_window

            for s_, l_ in pieces:
                if lift_in_window(x, s_) <= s_ + l_:
                    return True
            return False

        for j in range(48):
            x = o(F(j, 48))
            assert normalized.contains(x) == raw_contains(x), (pieces, x)


def test_arcset_intersection_against_membership(rng):
    for _ in range(100):
        def rand_set():
            pieces = []
            for _ in range(rng.randint(0, 4)):
                pieces.append((F(rng.randrange(0, 16), 16), F(rng.randrange(0, 9), 16)))
            return ArcSet.of(pieces)

        a, b = rand_set(), rand_set()
        inter = a.intersect(b)
        for j in range(64):
            x = o(F(j, 64))
            assert inter.contains(x) == (a.contains(x) and b.contains(x))


def test_injective_sets_against_level_probing(rng):
    s = Sampler(rng)
    for _ in range(80):
        phi = s.monotone_lift()
        from rotor.plmaps import MonotoneDegreeOneMap

        mono = MonotoneDegreeOneMap(phi)
        km, kp = injective_invariant_sets(mono)
        probe = probe_offset(phi)
        candidates = set(phi.breakpoints)
        for i in range(len(phi.breakpoints)):
            a, b_, _, _ = phi._segment(i)
            candidates.add(a + (b_ - a) / 2)
        for x in candidates:
            in_minus = phi(x - probe) < phi(x)
            in_plus = phi(x + probe) > phi(x)
            point = o(x)
            assert km.contains(point) == in_minus, (phi.graph_vertices(), x)
            assert kp.contains(point) == in_plus, (phi.graph_vertices(), x)


def test_round_up_against_fixed_scan(rng):
    s = Sampler(rng)
    for _ in range(60):
        # build a strict lift with prescribed fixed points (and possibly
        # fixed arcs, when the bulge vertex would leave the base window)
        k = rng.randint(1, 3)
        pts = sorted({s.fraction(12) for _ in range(k)})
        vertices = []
        for a, b in zip(pts, pts[1:] + [pts[0] + 1]):
            vertices.append((a, a))
            mid = (a + b) / 2
            if mid < 1:
                vertices.append((mid, a + (b - a) / 4))
        lift = PLLift.strict_from_vertices(vertices)
        fixed = translation_fixed_set(lift, 0)
        assert not fixed.is_empty()
        up = round_up_map(fixed)
        for j in range(24):
            x = F(j, 24)
            value = up(x)
            assert x <= value < x + 1
            assert fixed.contains(o(value - (1 if value >= 1 else 0)))
            # nothing fixed strictly between x and the rounded value
            step = F(1, 240)
            probe = x
            while probe < value:
                assert not fixed.contains(o(probe)) or probe == x and value == x
                probe += step


def test_exact_sup_dominates_word_ball(rng):
    s = Sampler(rng)
    for _ in range(10):
        q = rng.choice([2, 3])
        p = rng.choice([r for r in range(1, q) if F(r, q).denominator == q])
        alpha = F(p, q)
        a1 = GroupAction.rotation_action(alpha)
        _, lift = s.rotation_conjugate(alpha, max_pieces=2)
        a2 = GroupAction.zaction(decompose(lift)[0], lift)
        phi = exact_sup_semiconjugacy(a1, a2)
        phit = phi.good_lift
        # the exact supremum dominates every finite term, with equality at
        # fixed points of lift^q - p where the tail is constant
        A = PLLift.translation(alpha)
        term = PLLift.identity()
        terms = [term]
        for _ in range(12):
            term = compose(compose(invert(A), term), lift)
            terms.append(term)
        for j in range(16):
            x = F(j, 16)
            vals = [t(x) for t in terms]
            assert phit(x) >= max(vals)
        g_b = lift.power(q).shift(-p)
        fixed = translation_fixed_set(g_b, 0)
        for x in [a.start for a in fixed.arcs]:
            vals = [t(x) for t in terms[:q]]
            assert phit(x) == max(vals)


def test_compose_associativity_structural(rng):
    s = Sampler(rng)
    for _ in range(40):
        f, g, h = s.monotone_lift(), s.monotone_lift(), s.strict_lift()
        assert compose(compose(f, g), h) == compose(f, compose(g, h))
