"""The cochain calculus and the explicit integral two-cocycles on the circle.

Homogeneous two-cochains invariant under the circle's homeomorphism group
are six-value tables indexed by the orbit classes of triples; this module
provides the classification, the Euler / orientation / obstruction
cocycles, the homogeneous and inhomogeneous differentials, the basis
change between them, and the coboundary and cocycle analysis for tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .circle import CirclePoint, Orientation, orientation, orientation_sign
from .plmaps import CircleHomeo, PLLift


class OrbitClass3(Enum):
    """Orbit classes of point triples under the homeomorphism group."""

    O0 = "O0"          # (x, x, x)
    O1 = "O1"          # (y, x, x): first entry differs
    O2 = "O2"          # (x, y, x): middle entry differs
    O3 = "O3"          # (x, x, y): last entry differs
    OPLUS = "O+"       # positively oriented distinct triple
    OMINUS = "O-"      # negatively oriented distinct triple


def classify_triple(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> OrbitClass3:
    if x == y == z:
        return OrbitClass3.O0
    if y == z:
        return OrbitClass3.O1
    if x == z:
        return OrbitClass3.O2
    if x == y:
        return OrbitClass3.O3
    if orientation(x, y, z) is Orientation.POSITIVE:
        return OrbitClass3.OPLUS
    return OrbitClass3.OMINUS


# Values of the Euler cocycle per orbit class: 1 exactly on the middle
# degenerate class and on negatively oriented triples.
EULER_TABLE: dict[OrbitClass3, int] = {
    OrbitClass3.O0: 0,
    OrbitClass3.O1: 0,
    OrbitClass3.O2: 1,
    OrbitClass3.O3: 0,
    OrbitClass3.OPLUS: 0,
    OrbitClass3.OMINUS: 1,
}


def euler_cocycle(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
    """The integral Euler cocycle on point triples, valued in {0, 1}."""
    return EULER_TABLE[classify_triple(x, y, z)]


def orientation_cocycle(x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
    """The orientation cocycle: the orientation sign in {-1, 0, +1}."""
    return orientation_sign(x, y, z)


def obstruction_cocycle(h1: CircleHomeo, h2: CircleHomeo) -> int:
    """The obstruction cocycle of the bounded section, valued in {0, 1}.

    sigma(h1)sigma(h2)(0) always lies in [0, 2); the value records whether
    it landed in the upper unit interval.
    """
    v = h1.lift(h2.lift(Fraction(0)))
    assert 0 <= v < 2
    return 1 if v >= 1 else 0


def obstruction_cocycle_casewise(h1: CircleHomeo, h2: CircleHomeo) -> int:
    """The equivalent two-case form of the obstruction cocycle.

    Exactly one case must apply; used as a consistency cross-check of the
    window form above.
    """
    v = h1.lift(h2.lift(Fraction(0)))
    upper = 1 <= v < h1.lift(Fraction(1)) < 2
    lower = 0 <= h1.lift(Fraction(0)) <= v < 1
    if upper == lower:
        raise AssertionError(f"case split failed at value {v}")
    return 1 if upper else 0


# ----------------------------------------------------------------------
# differentials and the basis change
# ----------------------------------------------------------------------


def delta_hom(f: Callable[..., int]) -> Callable[..., int]:
    """Homogeneous differential: alternating sum over omitted arguments."""

    def delta(*args):
        total = 0
        for i in range(len(args)):
            term = f(*(args[:i] + args[i + 1 :]))
            total += term if i % 2 == 0 else -term
        return total

    return delta


def d_inhom(f: Callable[..., int], arity: int, mul: Callable) -> Callable[..., int]:
    """Inhomogeneous differential for group cochains of the given arity."""

    def d(*args):
        if len(args) != arity + 1:
            raise TypeError(f"expected {arity + 1} group elements")
        total = f(*args[1:])
        for i in range(1, arity + 1):
            merged = args[: i - 1] + (mul(args[i - 1], args[i]),) + args[i + 1 :]
            term = f(*merged)
            total += -term if i % 2 == 1 else term
        last = f(*args[:arity])
        total += last if (arity + 1) % 2 == 0 else -last
        return total

    return d


def iota(f: Callable[..., int], inv: Callable, mul: Callable) -> Callable[..., int]:
    """Inhomogeneous-to-homogeneous basis change on group cochains."""

    def hom(*args):
        return f(*(mul(inv(args[i]), args[i + 1]) for i in range(len(args) - 1)))

    return hom


def iota_inv(g: Callable[..., int], identity, mul: Callable) -> Callable[..., int]:
    """Homogeneous-to-inhomogeneous basis change (the stated inverse)."""

    def inhom(*args):
        acc = identity
        homogeneous_args = [identity]
        for a in args:
            acc = mul(acc, a)
            homogeneous_args.append(acc)
        return g(*homogeneous_args)

    return inhom


def homeo_mul(a: CircleHomeo, b: CircleHomeo) -> CircleHomeo:
    return a.compose(b)


def homeo_inv(a: CircleHomeo) -> CircleHomeo:
    return a.inverse()


def lift_mul(a: PLLift, b: PLLift) -> PLLift:
    return a.compose(b)


# ----------------------------------------------------------------------
# six-value tables
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class HomCochain2:
    """An invariant homogeneous 2-cochain as its six orbit-class values."""

    f0: int
    f1: int
    f2: int
    f3: int
    fplus: int
    fminus: int

    def value_on(self, cls: OrbitClass3) -> int:
        return {
            OrbitClass3.O0: self.f0,
            OrbitClass3.O1: self.f1,
            OrbitClass3.O2: self.f2,
            OrbitClass3.O3: self.f3,
            OrbitClass3.OPLUS: self.fplus,
            OrbitClass3.OMINUS: self.fminus,
        }[cls]

    def __call__(self, x: CirclePoint, y: CirclePoint, z: CirclePoint) -> int:
        return self.value_on(classify_triple(x, y, z))

    def as_dict(self) -> dict[str, int]:
        return {
            "f0": self.f0,
            "f1": self.f1,
            "f2": self.f2,
            "f3": self.f3,
            "f+": self.fplus,
            "f-": self.fminus,
        }


@dataclass(frozen=True)
class Cochain2Analysis:
    is_cocycle: bool
    class_index: int | None


def analyze_cochain2(f: HomCochain2) -> Cochain2Analysis:
    """Cocycle conditions for six-value tables and the integer class index.

    A table is a cocycle iff the three one-point-degenerate values agree
    and fplus + fminus = f2 + f3; the class index fplus - fminus then
    classifies it up to coboundary.
    """
    is_cocycle = (f.f0 == f.f1 == f.f3) and (f.fplus + f.fminus == f.f2 + f.f3)
    return Cochain2Analysis(is_cocycle, f.fplus - f.fminus if is_cocycle else None)


def coboundary_from_b(alpha: int, beta: int) -> HomCochain2:
    """The coboundary of the invariant 1-cochain valued alpha / beta.

    alpha is the value on the diagonal, beta on distinct pairs.
    """
    return HomCochain2(alpha, alpha, 2 * beta - alpha, alpha, beta, beta)


_REP_X = CirclePoint.of(0)
_REP_Y = CirclePoint.of(Fraction(1, 3))
_REP_Z = CirclePoint.of(Fraction(2, 3))

ORBIT_REPRESENTATIVES: dict[OrbitClass3, tuple[CirclePoint, CirclePoint, CirclePoint]] = {
    OrbitClass3.O0: (_REP_X, _REP_X, _REP_X),
    OrbitClass3.O1: (_REP_Y, _REP_X, _REP_X),
    OrbitClass3.O2: (_REP_X, _REP_Y, _REP_X),
    OrbitClass3.O3: (_REP_X, _REP_X, _REP_Y),
    OrbitClass3.OPLUS: (_REP_X, _REP_Y, _REP_Z),
    OrbitClass3.OMINUS: (_REP_Y, _REP_X, _REP_Z),
}


def table_of(cocycle: Callable[[CirclePoint, CirclePoint, CirclePoint], int]) -> HomCochain2:
    """Evaluate a triple cochain on class representatives into a table."""
    vals = {cls: cocycle(*rep) for cls, rep in ORBIT_REPRESENTATIVES.items()}
    return HomCochain2(
        vals[OrbitClass3.O0],
        vals[OrbitClass3.O1],
        vals[OrbitClass3.O2],
        vals[OrbitClass3.O3],
        vals[OrbitClass3.OPLUS],
        vals[OrbitClass3.OMINUS],
    )


def pullback_cocycle(evaluate_word, basepoint: CirclePoint):
    """Pull the Euler cocycle back along the orbit map of an action.

    ``evaluate_word`` maps a word to a :class:`CircleHomeo`; the returned
    evaluator sends word triples to Euler cocycle values at the orbit of
    ``basepoint``.  The Euler table is read at call time so mutation tests
    can patch it.
    """

    def ev(w0: Sequence[int], w1: Sequence[int], w2: Sequence[int]) -> int:
        pts = [evaluate_word(tuple(w))(basepoint) for w in (w0, w1, w2)]
        return euler_cocycle(*pts)

    return ev
