"""Translation and rotation numbers: exact detection and certified intervals."""

from fractions import Fraction as F

import pytest

from rotor.circle import InvalidInputError
from rotor.plmaps import PLLift, compose, decompose, invert
from rotor.rotation import rotation_number, t_floor, translation_number
from rotor.zoo import half_rotation_parabolic


def test_t_floor_examples():
    assert t_floor(PLLift.translation(F(5, 2))) == 2
    assert t_floor(PLLift.translation(F(-1, 3))) == -1
    assert t_floor(PLLift.identity()) == 0


def test_translation_number_rotation():
    res = translation_number(PLLift.translation(F(2, 3)))
    assert res.value == F(2, 3)
    assert res.period == 3
    lift = PLLift.translation(F(2, 3))
    assert compose(lift.power(res.period), PLLift.identity())(res.witness) == res.witness + 2


def test_translation_number_conjugate():
    j = PLLift.strict_from_vertices([(0, 0), (F(1, 4), F(2, 5))])
    lift = compose(compose(j, PLLift.translation(F(1, 2))), invert(j))
    res = translation_number(lift)
    assert res.value == F(1, 2)
    # the witness is an exact periodic point
    assert lift.power(2)(res.witness) == res.witness + 1


def test_translation_number_fixed_point_is_period_one():
    h = half_rotation_parabolic()
    sq = h.lift.power(2)
    res = translation_number(sq)
    assert res.value == 1 and res.period == 1


def test_rotation_number_mod1():
    res = rotation_number(PLLift.translation(F(3, 7)))
    assert res.value == F(3, 7)
    res2 = rotation_number(PLLift.translation(F(10, 7)))
    assert res2.value == F(3, 7)
    assert rotation_number(PLLift.identity()).value == 0


def test_interval_fallback():
    j = PLLift.strict_from_vertices([(0, 0), (F(1, 2), F(3, 8))])
    lift = compose(compose(j, PLLift.translation(F(1, 13))), invert(j))
    res = translation_number(lift, max_period=12, max_iters=512)
    assert not res.is_exact
    assert res.hi - res.lo == F(2, 512)
    certified = translation_number(lift, max_period=13)
    assert certified.value == F(1, 13)
    assert res.lo < certified.value < res.hi
    # long-run-average oracle: the 10^5-step estimate lands in the interval
    n = 100_000
    x = F(0)
    for _ in range(n):
        x = lift(x)
    assert res.lo < x / n < res.hi


def test_homogeneity_and_equivariance():
    j = PLLift.strict_from_vertices([(0, F(1, 8)), (F(1, 3), F(1, 2))])
    lift = compose(compose(j, PLLift.translation(F(1, 3))), invert(j))
    base = translation_number(lift)
    assert base.value == F(1, 3)
    for n in (2, 3, 5):
        assert translation_number(lift.power(n), max_period=24).value == n * base.value
    assert translation_number(lift.shift(2)).value == base.value + 2


def test_caps_validation():
    with pytest.raises(InvalidInputError):
        translation_number(PLLift.identity(), max_period=0)
    with pytest.raises(InvalidInputError):
        translation_number(PLLift.floor_step(0))
