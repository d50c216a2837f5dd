"""Exact rational arithmetic for piecewise-linear circle dynamics.

Circle homeomorphisms and their lifts, rotation and translation numbers,
the explicit two-cocycles representing the bounded Euler class, exact
semi-conjugacy checking and construction, and the Sullivan cocycle on the
double cover.
"""

from .arcsets import Arc, ArcSet, InvalidArcSystemError
from .circle import (
    CirclePoint,
    InvalidInputError,
    Orientation,
    as_fraction,
    format_rational,
    frac_mod1,
    lift_in_window,
    orientation,
    orientation_sign,
    oriented,
    parse_rational,
)
from .plmaps import (
    CircleHomeo,
    MonotoneDegreeOneMap,
    NotDegreeOneMapError,
    PLLift,
    compose,
    decompose,
    devil_staircase,
    extract_good_lift,
    invert,
    pl_difference,
    pl_max,
    project_equal,
    quadruple_test,
    round_up_map,
    translation_fixed_set,
    upper_semicontinuize,
    validate_good_lift,
)
from .rotation import TranslationNumberResult, rotation_number, t_floor, translation_number
from .cocycles import (
    HomCochain2,
    OrbitClass3,
    analyze_cochain2,
    classify_triple,
    coboundary_from_b,
    d_inhom,
    delta_hom,
    euler_cocycle,
    iota,
    iota_inv,
    obstruction_cocycle,
    orientation_cocycle,
    pullback_cocycle,
    table_of,
)
from .actions import (
    FiniteOrbit,
    GroupAction,
    blow_up,
    collapse,
    evaluate_word,
    evaluate_word_lift,
    finite_orbit_search,
    fixed_set,
    global_fixed_set,
    lift_action_from_primitive,
    primitive_from_lift,
    sup_fixed_point,
)
from .semiconj import (
    NotSemiconjugateError,
    analyze_n_gamma,
    check_left_semiconjugacy,
    construct_semiconjugacy_sup,
    exact_sup_semiconjugacy,
    glue_finite_orbit_actions,
    injective_invariant_sets,
    match_lifts,
    straighten_to_rotation,
)
from .sullivan import (
    DoubleCoverAction,
    DoubleCoverHomeo,
    NondegClass,
    NondegCochain2,
    analyze_nondeg_cochain2,
    classify_nondeg_triple,
    is_nondegenerate,
    is_small,
    nondeg_coboundary,
    pullback_sullivan,
    pullback_zero_test,
    sullivan_eval,
    sullivan_vanishes_on_cube,
)

__version__ = "0.1.0"
