"""Exact arithmetic on the value space R union Q* with infinitesimal tags.

Values are rational-coefficient combinations over a declared irrational
basis, optionally decorated with an epsilon tag (only when the value is
rational).  The plus-like operation is multivalued: adding two irrationals
whose sum is rational blurs the result into {r-e, r, r+e}.  Folding any
number of operands never produces more than three values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .basis import IrrationalBasis
from .errors import ConfigurationError, UsageError

MINUS_EPS = -1
EXACT = 0
PLUS_EPS = 1

_TAG_NAMES = {MINUS_EPS: "MinusEps", EXACT: "Exact", PLUS_EPS: "PlusEps"}


@dataclass(frozen=True)
class RealValue:
    """q0 + sum(q_i * alpha_i) with exact rational coefficients.

    ``coords`` holds the nonzero irrational coefficients as a sparse sorted
    tuple of (symbol index, coefficient) pairs.  Equality is coefficient-wise;
    ordering of distinct values is decided by certificate refinement.
    """

    basis: IrrationalBasis
    q0: Fraction
    coords: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        for _, coeff in self.coords:
            if coeff == 0:
                raise ValueError("coords must not contain zero coefficients")

    # equality must ignore the (unhashable, mutable) basis object identity is fine:
    # values from different bases are simply unequal.
    def __eq__(self, other) -> bool:
        if not isinstance(other, RealValue):
            return NotImplemented
        return self.basis is other.basis and self.q0 == other.q0 and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.basis), self.q0, self.coords))

    # -- predicates ---------------------------------------------------------

    def is_rational(self) -> bool:
        return not self.coords

    def is_integer(self) -> bool:
        return not self.coords and self.q0.denominator == 1

    def is_zero(self) -> bool:
        return not self.coords and self.q0 == 0

    # -- arithmetic (exact, coefficientwise) ---------------------------------

    def _combine(self, other: "RealValue", sign: int) -> "RealValue":
        if self.basis is not other.basis:
            raise ConfigurationError("cannot combine values over different bases")
        merged = dict(self.coords)
        for idx, coeff in other.coords:
            new = merged.get(idx, Fraction(0)) + sign * coeff
            if new == 0:
                merged.pop(idx, None)
            else:
                merged[idx] = new
        return RealValue(self.basis, self.q0 + sign * other.q0,
                         tuple(sorted(merged.items())))

    def __add__(self, other: "RealValue") -> "RealValue":
        return self._combine(other, 1)

    def __sub__(self, other: "RealValue") -> "RealValue":
        return self._combine(other, -1)

    def __neg__(self) -> "RealValue":
        return RealValue(self.basis, -self.q0,
                         tuple((i, -c) for i, c in self.coords))

    def scale(self, factor: Fraction) -> "RealValue":
        if factor == 0:
            return RealValue(self.basis, Fraction(0))
        return RealValue(self.basis, self.q0 * factor,
                         tuple((i, c * factor) for i, c in self.coords))

    def shift(self, rational: Fraction) -> "RealValue":
        return RealValue(self.basis, self.q0 + rational, self.coords)

    # -- certified order ------------------------------------------------------

    def _interval(self) -> tuple[Fraction, Fraction]:
        lo = hi = self.q0
        for idx, coeff in self.coords:
            slo, shi = self.basis.interval(idx)
            if coeff > 0:
                lo += coeff * slo
                hi += coeff * shi
            else:
                lo += coeff * shi
                hi += coeff * slo
        return lo, hi

    def sign(self) -> int:
        """Exact sign; refines certificates for genuinely irrational values."""
        if self.is_rational():
            return (self.q0 > 0) - (self.q0 < 0)
        for _ in range(self.basis.refinement_cap):
            lo, hi = self._interval()
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            for idx, _ in self.coords:
                self.basis.refine(idx)
        raise ConfigurationError(
            "certificate refinement cap exceeded while deciding a sign; "
            "the declared basis may hide a linear dependence")

    def compare(self, other: "RealValue") -> int:
        if self == other:
            return 0
        return (self - other).sign()

    def floor(self) -> int:
        """Exact floor; for irrational values decided by refinement."""
        if self.is_rational():
            return self.q0.numerator // self.q0.denominator
        for _ in range(self.basis.refinement_cap):
            lo, hi = self._interval()
            flo = lo.numerator // lo.denominator
            fhi = hi.numerator // hi.denominator
            if flo == fhi:
                return flo
            for idx, _ in self.coords:
                self.basis.refine(idx)
        raise ConfigurationError(
            "certificate refinement cap exceeded while flooring a value")

    def reduce_mod_1(self) -> "RealValue":
        return self.shift(Fraction(-self.floor()))

    def __repr__(self) -> str:  # debugging aid; wire formatting lives in wire.py
        parts = [str(self.q0)] if (self.q0 != 0 or not self.coords) else []
        for idx, coeff in self.coords:
            parts.append(f"{coeff}*{self.basis.name_of(idx)}")
        return " + ".join(parts)


def rational(basis: IrrationalBasis, value: Fraction | int | str) -> RealValue:
    return RealValue(basis, Fraction(value))


def symbol(basis: IrrationalBasis, name: str, coeff: Fraction | int = 1) -> RealValue:
    return RealValue(basis, Fraction(0), ((basis.index_of(name), Fraction(coeff)),))


@dataclass(frozen=True)
class StarValue:
    """A RealValue with an epsilon tag; tags attach to rational values only."""

    value: RealValue
    tag: int = EXACT

    def __post_init__(self):
        if self.tag not in (MINUS_EPS, EXACT, PLUS_EPS):
            raise ValueError(f"bad tag {self.tag}")
        if self.tag != EXACT and not self.value.is_rational():
            raise UsageError("epsilon tags may only decorate rational values")

    def tag_name(self) -> str:
        return _TAG_NAMES[self.tag]

    def __repr__(self) -> str:
        suffix = {MINUS_EPS: "-e", EXACT: "", PLUS_EPS: "+e"}[self.tag]
        return f"{self.value!r}{suffix}"


StarSet = frozenset


def star_compare(a: StarValue, b: StarValue) -> int:
    """Total order: compare values, then MinusEps < Exact < PlusEps."""
    c = a.value.compare(b.value)
    if c != 0:
        return c
    return (a.tag > b.tag) - (a.tag < b.tag)


def star_lt(a: StarValue, b: StarValue) -> bool:
    return star_compare(a, b) < 0


def star_sort(values: Iterable[StarValue]) -> list[StarValue]:
    import functools
    return sorted(values, key=functools.cmp_to_key(star_compare))


def _check_same_basis(a: StarValue, b: StarValue) -> None:
    if a.value.basis is not b.value.basis:
        raise ConfigurationError("star operands use different bases")


def plus_star(a: StarValue, b: StarValue) -> StarSet:
    """Multivalued sum on R union Q*.

    Two exact operands blur into a three-element set exactly when both are
    irrational and the sum is rational; opposite tags blur likewise.
    """
    _check_same_basis(a, b)
    total = a.value + b.value
    if a.tag == EXACT and b.tag == EXACT:
        if not total.is_rational():
            return frozenset({StarValue(total, EXACT)})
        if a.value.is_rational() and b.value.is_rational():
            return frozenset({StarValue(total, EXACT)})
        return frozenset({StarValue(total, MINUS_EPS),
                          StarValue(total, EXACT),
                          StarValue(total, PLUS_EPS)})
    if a.tag == EXACT or b.tag == EXACT:
        exact, tagged = (a, b) if a.tag == EXACT else (b, a)
        if exact.value.is_rational():
            return frozenset({StarValue(total, tagged.tag)})
        return frozenset({StarValue(total, EXACT)})
    if a.tag == b.tag:
        return frozenset({StarValue(total, a.tag)})
    return frozenset({StarValue(total, MINUS_EPS),
                      StarValue(total, EXACT),
                      StarValue(total, PLUS_EPS)})


def neg_star(a: StarValue) -> StarValue:
    return StarValue(-a.value, -a.tag)


def times_star(r0: Fraction | int, a: StarValue) -> StarValue:
    """Rational scalar times a star value.

    A positive scalar preserves the tag; zero collapses to exact zero; a
    negative scalar swaps the tag, matching neg_star on scalar -1.
    """
    r0 = Fraction(r0)
    if r0 == 0:
        return StarValue(RealValue(a.value.basis, Fraction(0)), EXACT)
    tag = a.tag if r0 > 0 else -a.tag
    return StarValue(a.value.scale(r0), tag)


def sum_star(values: Sequence[StarValue]) -> StarSet:
    """Union-fold of plus_star over a nonempty operand list."""
    if not values:
        raise UsageError("sum_star needs at least one operand")
    acc: frozenset[StarValue] = frozenset({values[0]})
    for nxt in values[1:]:
        acc = frozenset().union(*(plus_star(p, nxt) for p in acc))
        assert len(acc) <= 3
    return acc


def minus_star(a: StarValue, b: StarValue) -> StarSet:
    return plus_star(a, neg_star(b))


def in_zero_star(a: StarValue) -> bool:
    """Membership in {0-e, 0, 0+e}."""
    return a.value.is_zero()


def in_z_star(a: StarValue) -> bool:
    """Membership in Z* = Z union {n - e, n + e}."""
    return a.value.is_integer()


def equiv_zero(a: StarValue, b: StarValue) -> bool:
    """a and b differ by an infinitesimal: a -* b lies inside {0}*."""
    return all(in_zero_star(d) for d in minus_star(a, b))


def equiv_z(a: StarValue, b: StarValue) -> bool:
    """a and b differ by a member of Z*."""
    return all(in_z_star(d) for d in minus_star(a, b))


def mod_z_reduce(a: StarValue) -> StarValue:
    """Canonical representative with value in [0,1); 0-e canonicalizes to 1-e."""
    reduced = a.value.reduce_mod_1()
    if reduced.is_zero() and a.tag == MINUS_EPS:
        return StarValue(reduced.shift(Fraction(1)), MINUS_EPS)
    return StarValue(reduced, a.tag)


def to_real_mod_z(a: StarValue) -> RealValue:
    """Drop the tag and reduce into [0,1); constant on equiv_z classes."""
    return a.value.reduce_mod_1()
