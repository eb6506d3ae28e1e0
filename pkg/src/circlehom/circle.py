"""Points of the saturated circle at desk scale, rotations, and S-distances.

A point is an angle in [0,1) plus a rational multiple of one formal positive
infinitesimal.  The directed S-distance between two points is a star value:
exact when the angular difference is irrational, tagged by the sign of the
infinitesimal offset when it is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .basis import IrrationalBasis
from .errors import PreconditionError, UsageError
from .star import (EXACT, MINUS_EPS, PLUS_EPS, RealValue, StarValue,
                   in_z_star, mod_z_reduce, neg_star, rational, star_compare,
                   star_lt, sum_star, symbol)


@dataclass(frozen=True)
class Point:
    """Circle location: canonical angle in [0,1) plus an iota coefficient."""

    angle: RealValue
    iota: Fraction = Fraction(0)

    @staticmethod
    def make(angle: RealValue, iota: Fraction | int = 0) -> "Point":
        return Point(angle.reduce_mod_1(), Fraction(iota))

    def nudged(self, delta: Fraction | int) -> "Point":
        """Same angle, iota shifted by delta."""
        return Point(self.angle, self.iota + Fraction(delta))


@dataclass(frozen=True)
class Translation:
    """Desk-scale automorphism: rotate by a fixed angle and shift iota.

    Rotations g_r are the special case of a rational shift with zero iota
    shift.  Composition adds shifts; every translation is invertible.
    """

    shift: RealValue
    iota_shift: Fraction = Fraction(0)

    def __call__(self, p: Point) -> Point:
        return Point.make(p.angle + self.shift, p.iota + self.iota_shift)

    def compose(self, other: "Translation") -> "Translation":
        return Translation(self.shift + other.shift, self.iota_shift + other.iota_shift)

    def inverse(self) -> "Translation":
        return Translation(-self.shift, -self.iota_shift)

    @staticmethod
    def identity(basis: IrrationalBasis) -> "Translation":
        return Translation(rational(basis, 0))

    @staticmethod
    def rotation(basis: IrrationalBasis, r: Fraction | int | str) -> "Translation":
        return Translation(rational(basis, Fraction(r)))


class PointContext:
    """Owns a basis and hands out pairwise-generic fresh points.

    Fresh points use previously unused basis symbols, so they are independent
    from every point built earlier over the same context.  Single-owner: use
    one context per thread or serialize access externally.
    """

    def __init__(self, basis: IrrationalBasis | None = None):
        self.basis = basis if basis is not None else IrrationalBasis.default()
        self._used = 0

    def point(self, angle: RealValue | Fraction | int | str, iota: Fraction | int = 0) -> Point:
        if not isinstance(angle, RealValue):
            angle = rational(self.basis, Fraction(angle))
        return Point.make(angle, iota)

    def symbol_point(self, name: str, iota: Fraction | int = 0) -> Point:
        return Point.make(symbol(self.basis, name), iota)

    def fresh_generic(self, iota: Fraction | int = 0) -> Point:
        idx = self.basis.append_sqrt_symbol()
        self._used += 1
        return Point.make(RealValue(self.basis, Fraction(0), ((idx, Fraction(1)),)), iota)


def rotate(p: Point, r: Fraction | int | str) -> Point:
    """Clockwise rotation by the rational angle r; identity for integer r."""
    return Point.make(p.angle.shift(Fraction(r)), p.iota)


def sd(a: Point, b: Point) -> StarValue:
    """Directed S-distance of b from a.

    Values lie in [0,1) plus tagged rationals, with 0-e reported as 1-e.
    The iota offset only matters when the angular difference is rational;
    an irrational difference already determines the pair's type.
    """
    if a.angle.basis is not b.angle.basis:
        raise PreconditionError("points come from different contexts")
    delta = (b.angle - a.angle).reduce_mod_1()
    if not delta.is_rational():
        return StarValue(delta, EXACT)
    k = b.iota - a.iota
    if k == 0:
        return StarValue(delta, EXACT)
    if k > 0:
        return StarValue(delta, PLUS_EPS)
    if delta.is_zero():
        return StarValue(delta.shift(Fraction(1)), MINUS_EPS)
    return StarValue(delta, MINUS_EPS)


def point_at(a: Point, distance: StarValue) -> Point:
    """Canonical point b with sd(a, b) == distance (unit iota step per tag)."""
    return Point.make(a.angle + distance.value, a.iota + distance.tag)


def point_before(c: Point, distance: StarValue) -> Point:
    """Canonical point a with sd(a, c) == distance."""
    return Point.make(c.angle - distance.value, c.iota - distance.tag)


def position_key(a: Point, x: Point) -> tuple[RealValue, Fraction]:
    """Clockwise position of x as seen from a: angular offset, then iota offset.

    A vanishing angular offset with negative iota offset wraps to the top of
    the circle, matching the 1-e canonicalization of distances.
    """
    delta = (x.angle - a.angle).reduce_mod_1()
    k = x.iota - a.iota
    if delta.is_zero() and k < 0:
        delta = delta.shift(Fraction(1))
    return delta, k


def s_relation(a: Point, b: Point, c: Point) -> bool:
    """b comes strictly before c going clockwise from a, all three distinct.

    The comparison refines the distance order: when two points sit at the
    same cut, their infinitesimal offsets still order them strictly.
    """
    if a == b or b == c or a == c:
        return False
    db, kb = position_key(a, b)
    dc, kc = position_key(a, c)
    angle_cmp = db.compare(dc)
    if angle_cmp != 0:
        return angle_cmp < 0
    return kb < kc


def independent(points: list[Point]) -> bool:
    """Pairwise non-interalgebraic: no pair lies at an exact rational distance."""
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = sd(points[i], points[j])
            if d.tag == EXACT and d.value.is_rational():
                return False
    return True


def _min_distance(a: Point, b: Point) -> StarValue:
    dab, dba = sd(a, b), sd(b, a)
    return dab if star_compare(dab, dba) <= 0 else dba


def u_less(a: Point, b: Point, r: Fraction) -> bool:
    """Arc distance between a and b is strictly less than r, for 0 < r <= 1/2."""
    r = Fraction(r)
    if not 0 < r <= Fraction(1, 2):
        raise UsageError("u_less requires 0 < r <= 1/2")
    return star_lt(_min_distance(a, b), StarValue(rational(a.angle.basis, r), EXACT))


def u_eq(a: Point, b: Point, r: Fraction) -> bool:
    """Arc distance between a and b is exactly r, for 0 < r <= 1/2."""
    r = Fraction(r)
    if not 0 < r <= Fraction(1, 2):
        raise UsageError("u_eq requires 0 < r <= 1/2")
    return star_compare(_min_distance(a, b), StarValue(rational(a.angle.basis, r), EXACT)) == 0


def lascar_equivalent(a: Point, b: Point) -> bool:
    """Endpoints of a bounding shell: the directed distance lies in Z*."""
    return in_z_star(sd(a, b))


def reverse_distance(d: StarValue) -> StarValue:
    """The unique member of 1 -* d, reduced: equals sd(b, a) given d = sd(a, b)."""
    one = StarValue(rational(d.value.basis, 1), EXACT)
    (result,) = sum_star([one, neg_star(d)])
    return mod_z_reduce(result)


class EnClass(Enum):
    FORWARD = "Forward"
    BACKWARD = "Backward"
    OTHER = "Other"


def classify_en(points: list[Point]) -> EnClass:
    """Trichotomy of n-tuples: forward rotation orbit, backward orbit, or other."""
    n = len(points)
    if n < 1:
        raise UsageError("classify_en needs a nonempty tuple")
    z = points[0]
    if all(points[i] == rotate(z, Fraction(i, n)) for i in range(n)):
        return EnClass.FORWARD
    if all(points[i] == rotate(z, Fraction(-i, n)) for i in range(n)):
        return EnClass.BACKWARD
    return EnClass.OTHER
