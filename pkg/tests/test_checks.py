"""The property-suite registry: clean runs, determinism, mutation hooks."""

import pytest

from rotor.checks import ALL_CHECKS, mutated_tables, run_checks
from rotor.cocycles import EULER_TABLE, OrbitClass3, euler_cocycle
from rotor.circle import CirclePoint
from fractions import Fraction as F

o = CirclePoint.of


def test_all_checks_pass_at_small_scale():
    results = run_checks(seed=7, scale=0.1)
    failures = [r.name for r in results if not r.passed]
    assert failures == []
    assert len(results) == len(ALL_CHECKS)


def test_run_checks_is_deterministic():
    a = [r.as_dict() for r in run_checks(seed=3, scale=0.05, names=["delta_euler_zero"])]
    b = [r.as_dict() for r in run_checks(seed=3, scale=0.05, names=["delta_euler_zero"])]
    assert a == b


def test_unknown_check_name_rejected():
    with pytest.raises(ValueError):
        run_checks(names=["no_such_check"])


def test_mutated_tables_context():
    x, y = o(0), o(F(1, 2))
    assert euler_cocycle(x, y, x) == 1
    with mutated_tables({"euler:O2": 0}):
        assert euler_cocycle(x, y, x) == 0
        assert EULER_TABLE[OrbitClass3.O2] == 0
    assert euler_cocycle(x, y, x) == 1


def test_mutation_breaks_coboundary_identity():
    results = run_checks(
        seed=0, scale=0.2, names=["orientation_euler_coboundary"], mutations={"euler:O-": 0}
    )
    assert not results[0].passed
    assert results[0].witness is not None


def test_mutation_breaks_sullivan_rows():
    results = run_checks(
        seed=0, scale=1.0, names=["sullivan_reference_rows"], mutations={"sullivan:O+": 0}
    )
    assert not results[0].passed
