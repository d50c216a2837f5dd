"""The acceptance gate: every criterion at its stated sample count, exact.

Each criterion reports one PASS/FAIL line in the terminal summary (see
conftest).  All assertions are bit-exact; there are no tolerances anywhere.

One sub-claim of criterion 10 (the stored reference row for the
Euler cocycle pulled back along the doubling map, with class index -2) is
implemented faithfully and fails: the reference row is internally
inconsistent with the other rows of the same table, and the pullback
computes to (0, 1, 1, 0) with class index +2.  The machine-checked
reconciliation lives in test_criterion_10_pullback_row_computed; the full
analysis is recorded in the decisions ledger outside the package.
"""

import random
from fractions import Fraction as F
from itertools import product

import pytest

from conftest import record_criterion
from rotor.actions import GroupAction, evaluate_word, finite_orbit_search
from rotor.arcsets import Arc
from rotor.checks import (
    Sampler,
    check_d_obstruction_zero,
    check_delta_euler_zero,
    check_delta_orientation_zero,
    check_delta_sullivan_zero,
    check_floor_defect_identity,
    check_global_fixed_iff_rot_zero,
    check_obstruction_equals_euler_at_zero,
    check_orientation_euler_coboundary,
    check_smallness_equivalence,
    mutated_tables,
)
from rotor.circle import CirclePoint, frac_mod1, oriented
from rotor.cocycles import (
    HomCochain2,
    coboundary_from_b,
    euler_cocycle,
    orientation_cocycle,
    pullback_cocycle,
    table_of,
)
from rotor.plmaps import (
    CircleHomeo,
    PLLift,
    compose,
    decompose,
    extract_good_lift,
    invert,
    quadruple_test,
    validate_good_lift,
)
from rotor.rotation import rotation_number, translation_number
from rotor.semiconj import (
    analyze_n_gamma,
    check_left_semiconjugacy,
    construct_semiconjugacy_sup,
    exact_sup_semiconjugacy,
    glue_finite_orbit_actions,
    injective_invariant_sets,
)
from rotor.sullivan import (
    NondegCochain2,
    REFERENCE_TABLE,
    analyze_nondeg_cochain2,
    nondeg_coboundary,
    nondeg_table_of,
    project_to_base,
    sullivan_eval,
)
from rotor.actions import blow_up, collapse
from rotor.zoo import half_rotation_pair, quadruple_counterexample_table

SEED = 20260808
o = CirclePoint.of


def seeded(tag: str) -> random.Random:
    return random.Random(f"{SEED}:{tag}")


def crit(number: int, ok: bool, note: str = "") -> None:
    record_criterion(number, ok, note)
    assert ok, f"criterion {number} failed{': ' + note if note else ''}"


# ----------------------------------------------------------------------
# criterion 1: cocycle identities
# ----------------------------------------------------------------------


def test_criterion_1_cocycle_identities():
    r1 = check_delta_euler_zero(seeded("c1-euler"), 1000)
    r2 = check_delta_orientation_zero(seeded("c1-orient"), 1000)
    r3 = check_d_obstruction_zero(seeded("c1-obstruction"), 500)
    crit(1, r1.passed and r2.passed and r3.passed, "delta/d vanish exactly")


# ----------------------------------------------------------------------
# criterion 2: the two comparison identities
# ----------------------------------------------------------------------


def test_criterion_2_euler_comparisons():
    r1 = check_obstruction_equals_euler_at_zero(seeded("c2-orbit"), 500)
    r2 = check_orientation_euler_coboundary(seeded("c2-coboundary"), 1000)
    crit(2, r1.passed and r2.passed, "orbit formula and table identity")


# ----------------------------------------------------------------------
# criterion 3: floor-defect identity
# ----------------------------------------------------------------------


def test_criterion_3_floor_defect():
    r = check_floor_defect_identity(seeded("c3"), 500)
    crit(3, r.passed, "500 lifted pairs, zero tolerance")


# ----------------------------------------------------------------------
# criterion 4: quadruple lemma and the counterexample
# ----------------------------------------------------------------------


def test_criterion_4_quadruple_lemma():
    table = quadruple_counterexample_table()
    ok = not quadruple_test(table)
    pts = sorted(table)
    for tri in product(pts, repeat=3):
        if oriented(tri) and not oriented([table[p] for p in tri]):
            ok = False
    s = Sampler(seeded("c4"))
    for _ in range(200):
        tbl = s.monotone_table(s.rng.randint(2, 8))
        lift = extract_good_lift(tbl)
        if not validate_good_lift(lift):
            ok = False
            break
        if any(CirclePoint.of(lift(p.rep)) != q for p, q in tbl.items()):
            ok = False
            break
        tup = s.coincident_tuple(5)
        if oriented(tup) and not oriented([CirclePoint.of(lift(p.rep)) for p in tup]):
            ok = False
            break
    crit(4, ok, "counterexample + 200 extracted lifts")


# ----------------------------------------------------------------------
# criterion 5: rotation numbers
# ----------------------------------------------------------------------


def test_criterion_5_rotation_numbers():
    s = Sampler(seeded("c5"))
    ok = True
    for _ in range(50):
        q = s.rng.randint(1, 12)
        p = s.rng.randrange(0, q)
        alpha = F(p, q)
        res = translation_number(PLLift.translation(alpha))
        if not (res.is_exact and res.value == alpha):
            ok = False
            break
        _, lift = s.rotation_conjugate(alpha, max_pieces=2)
        res2 = translation_number(lift)
        if not (res2.is_exact and res2.value == alpha):
            ok = False
            break
        sigma = decompose(lift)[0].lift
        if rotation_number(sigma).value != frac_mod1(alpha):
            ok = False
            break
    for q in (13, 14, 15):
        _, lift = s.rotation_conjugate(F(1, q), max_pieces=2)
        interval = translation_number(lift, max_period=12, max_iters=4096)
        if interval.is_exact:
            ok = False
            break
        if interval.hi - interval.lo != F(2, 4096):
            ok = False
            break
        certified = translation_number(lift, max_period=q)
        if not (certified.is_exact and interval.lo < certified.value < interval.hi):
            ok = False
            break
    crit(5, ok, "50 exact + certified intervals at width 2/4096")


# ----------------------------------------------------------------------
# criterion 6: the fixed-point chain for cyclic actions
# ----------------------------------------------------------------------


def test_criterion_6_fixed_point_chain():
    r = check_global_fixed_iff_rot_zero(seeded("c6"), 100)
    crit(6, r.passed, "fixed point <=> rotation number 0 <=> sup stabilizes")


# ----------------------------------------------------------------------
# criteria 7 and 8: the supremum construction and its transport
# ----------------------------------------------------------------------


def _equal_rotation_pairs(count: int):
    s = Sampler(seeded("c7-equal"))
    pairs = []
    while len(pairs) < count:
        q = s.rng.choice([2, 3, 4])
        p = s.rng.choice([r for r in range(1, q) if F(r, q).denominator == q])
        alpha = F(p, q)
        a1 = GroupAction.rotation_action(alpha)
        _, lift = s.rotation_conjugate(alpha, max_pieces=2)
        a2 = GroupAction.zaction(decompose(lift)[0], lift)
        pairs.append((alpha, a1, a2))
    return pairs


PAIR_REPORTS = []


def test_criterion_7_sup_construction():
    ok = True
    for alpha, a1, a2 in _equal_rotation_pairs(50):
        report = construct_semiconjugacy_sup(a1, a2, ball_radius=3 * alpha.denominator)
        if not (report.status == "stabilized" and report.verified):
            ok = False
            break
        if report.radius > 3 * alpha.denominator:
            ok = False
            break
        PAIR_REPORTS.append((alpha, a1, a2, report.phi))
    s = Sampler(seeded("c7-unequal"))
    trials = 0
    while trials < 50:
        q1 = s.rng.choice([2, 3, 4])
        p1 = s.rng.choice([r for r in range(1, q1) if F(r, q1).denominator == q1])
        q2 = s.rng.choice([2, 3, 4, 5])
        choices = [
            r for r in range(1, q2)
            if F(r, q2).denominator == q2 and F(r, q2) != F(p1, q1)
        ]
        if not choices:
            continue
        trials += 1
        a1 = GroupAction.rotation_action(F(p1, q1))
        _, lift = s.rotation_conjugate(F(s.rng.choice(choices), q2), max_pieces=2)
        a2 = GroupAction.zaction(decompose(lift)[0], lift)
        report = construct_semiconjugacy_sup(a1, a2, ball_radius=3 * q1)
        if report.status != "diverged":
            ok = False
            break
    crit(7, ok, "50 stabilize within 3q, 50 diverge")


def test_criterion_8_transport():
    if not PAIR_REPORTS:
        pytest.skip("criterion 7 produced no pairs")
    s = Sampler(seeded("c8"))
    ok = True
    triples_checked = 0
    for alpha, a1, a2, phi in PAIR_REPORTS:
        report = analyze_n_gamma(a1, a2, phi)
        if not (report.equivariant and report.all_constant):
            ok = False
            break
        k_minus, k_plus = injective_invariant_sets(phi)
        k_set = k_minus if not k_minus.is_empty() else k_plus
        if k_set.is_empty():
            ok = False
            break
        x = k_set.sample_points()[0]
        ev2 = pullback_cocycle(lambda w, a=a2: evaluate_word(a, w), x)
        ev1 = pullback_cocycle(lambda w, a=a1: evaluate_word(a, w), phi(x))
        for _ in range(4):
            ws = [s.word(1) for _ in range(3)]
            triples_checked += 1
            if ev1(*ws) != ev2(*ws):
                ok = False
                break
        if not ok:
            break
    crit(8, ok and triples_checked >= 200, f"{triples_checked} word triples transported")


# ----------------------------------------------------------------------
# criterion 9: the finite-orbit constructions
# ----------------------------------------------------------------------


def test_criterion_9_constructions():
    ok = True
    rot = GroupAction.rotation_action(F(1, 3))
    orbit = finite_orbit_search(rot, 3)
    blown, arcs = blow_up(rot, orbit.points, [F(1, 12)] * 3)
    if translation_number(blown.generators[0].lift).value != F(1, 3):
        ok = False
    quotient, phi = collapse(blown, arcs)
    if translation_number(quotient.generators[0].lift).value != F(1, 3):
        ok = False
    a1, a2 = half_rotation_pair()
    pts = [o(0), o(F(1, 2))]
    glue = glue_finite_orbit_actions(a1, a2, pts, pts)
    for action, phi_c in ((a1, glue.collapse_to_first), (a2, glue.collapse_to_second)):
        if not phi_c.is_continuous():
            ok = False
        if phi_c.is_constant_map():
            ok = False
        if not check_left_semiconjugacy(action, glue.action, phi_c):
            ok = False
    direct = exact_sup_semiconjugacy(a1, a2)
    if direct.is_continuous():
        ok = False
    if not check_left_semiconjugacy(a1, a2, direct):
        ok = False
    crit(9, ok, "blow-up/collapse, gluing, and the jump of the direct map")


# ----------------------------------------------------------------------
# criterion 10: the appendix
# ----------------------------------------------------------------------


def _expanded_reference_row(key: str) -> NondegCochain2:
    return NondegCochain2.from_row(*REFERENCE_TABLE[key][0])


def test_criterion_10_sullivan_row():
    table = nondeg_table_of(sullivan_eval)
    ok = table == _expanded_reference_row("sullivan")
    analysis = analyze_nondeg_cochain2(table)
    ok = ok and analysis.is_cocycle and analysis.class_index == REFERENCE_TABLE["sullivan"][1]
    crit(10, ok, "")


def test_criterion_10_orientation_rows():
    ot = nondeg_table_of(orientation_cocycle)
    ok = ot == _expanded_reference_row("orientation")
    ok = ok and analyze_nondeg_cochain2(ot).class_index == REFERENCE_TABLE["orientation"][1]
    pot = nondeg_table_of(
        lambda a, b, c: orientation_cocycle(
            project_to_base(a), project_to_base(b), project_to_base(c)
        )
    )
    ok = ok and pot == _expanded_reference_row("orientation_pullback")
    ok = (
        ok
        and analyze_nondeg_cochain2(pot).class_index
        == REFERENCE_TABLE["orientation_pullback"][1]
    )
    crit(10, ok, "")


def test_criterion_10_reference_pullback_row_analyzes_to_minus_2():
    reference = _expanded_reference_row("euler_pullback")
    analysis = analyze_nondeg_cochain2(reference)
    crit(10, analysis.is_cocycle and analysis.class_index == -2, "")


def _computed_pullback_table() -> NondegCochain2:
    return nondeg_table_of(
        lambda a, b, c: euler_cocycle(
            project_to_base(a), project_to_base(b), project_to_base(c)
        )
    )


def test_criterion_10_pullback_row_computed():
    """The machine truth for the doubled Euler cocycle, with reconciliation.

    The pointwise pullback evaluates to (0, 1, 1, 0) with class index +2;
    adding the reference row gives exactly the coboundary of the constant
    pair (1, 1), so the reference row represents the negative of the
    computed class.  This pins the actual behavior next to the faithful
    (failing) transcription of the reference claim below.
    """
    computed = _computed_pullback_table()
    assert computed.row() == (0, 1, 1, 0)
    assert analyze_nondeg_cochain2(computed).class_index == 2
    reference = REFERENCE_TABLE["euler_pullback"][0]
    summed = tuple(c + p for c, p in zip(computed.row(), reference))
    assert summed == nondeg_coboundary(1, 1).row()


@pytest.mark.reference_table_conflict
def test_criterion_10_pullback_row_as_referenced():
    """Faithful transcription of the reference pullback row claim.

    This asserts that composing the doubling map with the Euler cocycle
    reproduces the reference row (1, 0, 0, 1) of class index -2.  The claim
    is internally inconsistent with the other reference rows (their exact
    reconciliation is machine-checked in the companion test above), so this
    test fails; the derivation is recorded in the decisions ledger.
    """
    computed = _computed_pullback_table()
    expected = _expanded_reference_row("euler_pullback")
    ok = computed == expected and analyze_nondeg_cochain2(computed).class_index == -2
    crit(
        10,
        ok,
        "reference pullback row (1,0,0,1)/-2 is not the pointwise pullback; "
        "computed (0,1,1,0)/+2, see decisions ledger",
    )


def test_criterion_10_smallness_and_delta():
    r1 = check_smallness_equivalence(seeded("c10-small"), 200)
    r2 = check_delta_sullivan_zero(seeded("c10-delta"), 1000)
    crit(10, r1.passed and r2.passed, "")


# ----------------------------------------------------------------------
# criterion 11: mutation sensitivity
# ----------------------------------------------------------------------


def _criteria_1_2_10_detector(seed_tag: str) -> tuple[bool, dict | None]:
    """Run the clean-green sub-checks of criteria 1, 2 and 10, short-circuiting.

    Returns (all passed, witness of the first failure).
    """
    # criterion 2's exact table identity (cheap, catches Euler flips)
    b = coboundary_from_b(0, 1)
    et = table_of(euler_cocycle)
    ot = table_of(orientation_cocycle)
    expected = HomCochain2(
        -2 * et.f0 + b.f0,
        -2 * et.f1 + b.f1,
        -2 * et.f2 + b.f2,
        -2 * et.f3 + b.f3,
        -2 * et.fplus + b.fplus,
        -2 * et.fminus + b.fminus,
    )
    if ot != expected:
        return False, {
            "criterion": 2,
            "identity": "orientation = -2*euler + coboundary",
            "orientation": ot.as_dict(),
            "got": expected.as_dict(),
        }
    # criterion 10's Sullivan row (cheap, catches Sullivan flips)
    st = nondeg_table_of(sullivan_eval)
    if st != NondegCochain2.from_row(*REFERENCE_TABLE["sullivan"][0]):
        return False, {
            "criterion": 10,
            "identity": "sullivan_eval reproduces its class row",
            "row": st.row() or tuple(),
        }
    # criterion 1's sampled differentials, reduced but seeded batches
    for check, count in (
        (check_delta_euler_zero, 200),
        (check_delta_sullivan_zero, 200),
    ):
        result = check(seeded(f"c11:{seed_tag}:{check.__name__}"), count)
        if not result.passed:
            return False, {"criterion": 1, **(result.witness or {})}
    return True, None


def test_criterion_11_mutation_sensitivity():
    euler_keys = [f"euler:{cls}" for cls in ("O0", "O1", "O2", "O3", "O+", "O-")]
    sull_keys = [
        f"sullivan:{cls}"
        for cls in ("id", "(01)", "(02)", "(12)", "(012)", "(021)", "O+", "O-")
    ]
    baseline_ok, _ = _criteria_1_2_10_detector("baseline")
    ok = baseline_ok
    caught = 0
    for key in euler_keys + sull_keys:
        with mutated_tables({key: 1 - _current_value(key) if _current_value(key) in (0, 1) else 0}):
            detected, witness = _criteria_1_2_10_detector(key)
        if detected:
            ok = False
            break
        if witness is None:
            ok = False
            break
        caught += 1
    crit(11, ok and caught == 14, f"{caught}/14 single flips detected with witnesses")


def _current_value(key: str) -> int:
    from rotor import cocycles as _c
    from rotor import sullivan as _s

    family, _, cls = key.partition(":")
    if family == "euler":
        target = next(c for c in _c.OrbitClass3 if c.value == cls)
        return _c.EULER_TABLE[target]
    target = next(c for c in _s.NondegClass if c.value == cls)
    return _s.SULLIVAN_TABLE[target]
