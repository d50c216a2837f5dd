"""Translation numbers, the floor quasimorphism, and rotation numbers.

Rational translation numbers are detected exactly through periodic-point
root finding; otherwise a certified interval of width 2/n around the true
value is returned, justified by the strict bound |f^n(0) - n T| < 1 for
lifts without the corresponding periodic points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .circle import InvalidInputError, frac_mod1
from .plmaps import PLLift, STRICT, compose, translation_fixed_set

DEFAULT_MAX_PERIOD = 12
DEFAULT_MAX_ITERS = 4096


@dataclass(frozen=True)
class TranslationNumberResult:
    """Either an exact rational value with a periodic witness, or an interval.

    Exact: ``value`` = p/q with witness w satisfying f^q(w) = w + p
    bit-exactly.  Interval: lo < T < hi with hi - lo = 2/iterations.
    """

    value: Fraction | None = None
    witness: Fraction | None = None
    period: int | None = None
    lo: Fraction | None = None
    hi: Fraction | None = None
    iterations: int | None = None

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def mod1(self) -> "TranslationNumberResult":
        """The same result with the value (or interval) reduced mod 1."""
        if self.is_exact:
            return TranslationNumberResult(
                value=frac_mod1(self.value), witness=self.witness, period=self.period
            )
        shift = math.floor(self.lo)
        return TranslationNumberResult(
            lo=self.lo - shift, hi=self.hi - shift, iterations=self.iterations
        )


def t_floor(lift: PLLift) -> int:
    """The floor quasimorphism: floor of the lift's value at 0."""
    return math.floor(lift(0))


def translation_number(
    lift: PLLift,
    max_period: int = DEFAULT_MAX_PERIOD,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> TranslationNumberResult:
    """Translation number of a strict lift: exact if a period <= max_period exists.

    For each q the only translation candidates are the two integers
    adjacent to f^q(0), since the displacement of f^q has amplitude < 1.
    Ties break to the smallest q, then the smallest p.  With no hit, the
    interval ((f^n(0)-1)/n, (f^n(0)+1)/n) is returned at n = max_iters.
    """
    if lift.kind != STRICT:
        raise InvalidInputError("translation numbers require strict lifts")
    if max_period < 1 or max_iters < 1:
        raise InvalidInputError("caps must be at least 1")
    power = lift
    for q in range(1, max_period + 1):
        if q > 1:
            power = compose(power, lift)
        v = power(0)
        pf = math.floor(v)
        candidates = [pf] if v == pf else [pf, pf + 1]
        for p in candidates:
            roots = translation_fixed_set(power, p)
            if not roots.is_empty():
                w = roots.min_representative()
                assert power(w) == w + p
                return TranslationNumberResult(value=Fraction(p, q), witness=w, period=q)
    x = Fraction(0)
    for _ in range(max_iters):
        x = lift(x)
    return TranslationNumberResult(
        lo=(x - 1) / max_iters, hi=(x + 1) / max_iters, iterations=max_iters
    )


def rotation_number(
    lift: PLLift,
    max_period: int = DEFAULT_MAX_PERIOD,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> TranslationNumberResult:
    """Rotation number of the circle map under a chosen lift, reduced mod 1."""
    return translation_number(lift, max_period, max_iters).mod1()
