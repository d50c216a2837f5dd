"""Shared fixtures and the acceptance-criteria terminal summary."""

from __future__ import annotations

import random

import pytest

from rotor.checks import Sampler

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, passed: bool, note: str = "") -> None:
    """Collect one acceptance-criterion outcome for the terminal summary."""
    prev = ACCEPTANCE_RESULTS.get(number)
    if prev is None:
        ACCEPTANCE_RESULTS[number] = (passed, note)
    else:
        ACCEPTANCE_RESULTS[number] = (prev[0] and passed, prev[1] or note)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240808)


@pytest.fixture
def sampler(rng) -> Sampler:
    return Sampler(rng)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, note = ACCEPTANCE_RESULTS[number]
        status = "PASS" if passed else "FAIL"
        suffix = f" ({note})" if note else ""
        terminalreporter.write_line(f"criterion {number:2d}: {status}{suffix}")
