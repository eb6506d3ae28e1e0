"""Relation semantics for the arc-length structure and its reduction.

The quantifier-free betweenness formula is evaluated through its arc
decomposition: partition the circle at the k rotation images of the first
argument, locate the other two arguments using only arc-length predicates,
point equality, and rotations, then decide precedence case by case.  The
printed source formula contains transcription slips; this module implements
the semantics it describes (see README notes).

Also provided: an exact cut-reconstruction of the directed distance (and so
of the homology bracket) that consults only those primitives, used to check
that brackets computed through the arc-length language agree with the ones
computed from angles directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .circle import Point, rotate, u_less
from .errors import UsageError


def _on_division(x: Point, a: Point, k: int) -> Optional[int]:
    """Index i with x == g_{i/k}(a), if any."""
    for i in range(k):
        if x == rotate(a, Fraction(i, k)):
            return i
    return None


def _in_arc(x: Point, a: Point, k: int) -> Optional[int]:
    """Index i with x strictly inside the arc (g_{i/k}(a), g_{(i+1)/k}(a)).

    A point lies strictly inside the open 1/k-arc exactly when it is within
    1/k of both endpoints, which keeps the test inside the arc-length
    language (valid for k >= 3).
    """
    r = Fraction(1, k)
    for i in range(k):
        lo = rotate(a, Fraction(i, k))
        hi = rotate(a, Fraction(i + 1, k))
        if u_less(lo, x, r) and u_less(hi, x, r):
            return i
    return None


def _before_in_same_arc(y: Point, z: Point, k: int) -> bool:
    """y lies strictly between the arc start and z: within 1/k below z."""
    r = Fraction(1, k)
    return y != z and u_less(rotate(z, Fraction(-1, k)), y, r) and u_less(z, y, r)


def s_prime_k(a: Point, b: Point, c: Point, k: int) -> bool:
    """Betweenness decided by the arc decomposition at the k-division of a."""
    if k < 3:
        raise UsageError("s_prime_k requires k >= 3")
    c_on = _on_division(c, a, k)
    if c_on is not None:
        if c_on == 0:
            return False
        b_on = _on_division(b, a, k)
        if b_on is not None:
            return 1 <= b_on < c_on
        b_in = _in_arc(b, a, k)
        return b_in is not None and b_in <= c_on - 1
    c_in = _in_arc(c, a, k)
    if c_in is None:
        return False
    b_on = _on_division(b, a, k)
    if b_on is not None:
        return 1 <= b_on <= c_in
    b_in = _in_arc(b, a, k)
    if b_in is None:
        return False
    if b_in < c_in:
        return True
    if b_in == c_in:
        return _before_in_same_arc(b, c, k)
    return False


def _strictly_between(a: Point, probe: Point, b: Point, k: int = 3) -> bool:
    """probe comes strictly before b clockwise from a, via the arc formula."""
    return s_prime_k(a, probe, b, k)


def cut_interval(a: Point, b: Point, rounds: int = 48,
                 denominators: int = 16) -> tuple[str, Fraction, Fraction]:
    """Locate the directed distance of b from a using arc-language queries only.

    Returns ("exact", r, r) when b is a rotation image of a by some rational
    with denominator <= `denominators`; otherwise returns ("cut", lo, hi)
    with an interval of width 2**-rounds that the distance provably meets
    (for a tagged rational r the cut sits at r itself and r is an endpoint
    of, or interior to, the reported interval).

    Only point equality with rotations and the betweenness formula are
    consulted, mirroring how the arc-length structure recovers the ternary
    ordering.
    """
    if a == b:
        return "exact", Fraction(0), Fraction(0)
    for den in range(1, denominators + 1):
        for num in range(1, den):
            r = Fraction(num, den)
            if r.denominator == den and b == rotate(a, r):
                return "exact", r, r
    lo, hi = Fraction(0), Fraction(1)
    for _ in range(rounds):
        mid = (lo + hi) / 2
        probe = rotate(a, mid)
        if probe == b:
            # distance is mid with a possible epsilon offset; report the point
            return "exact", mid, mid
        if probe == a:
            break
        if _strictly_between(a, probe, b):
            lo = mid
        else:
            hi = mid
    return "cut", lo, hi
