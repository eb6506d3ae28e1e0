"""Chain-walks: telescoping 2-chains certifying shell boundaries.

A walk is a signed list of 2-simplices whose supports thread through a
nonzero index sequence starting at 1 and ending at 2, with the first
boundary part hitting the shell's inner edge, the last hitting the negated
outer edge, and consecutive parts cancelling.  Walk search is a bounded
brute force used as an independent oracle for the holonomy criterion: a
returned walk is always re-verified, and NotFound is a bounded-search
verdict, never a semantic claim.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circle import Point, PointContext, sd
from .errors import MalformedWalkError, PreconditionError, UsageError
from .shells import (Representation, bracket, bracket_shell,
                     literal_representation)
from .simplices import (Chain, Edge1, Shell1, Simplex2, boundary, chain_of,
                        make_simplex2, shell_from_chain)
from .star import EXACT, star_compare


@dataclass(frozen=True)
class ChainWalk:
    """Signed 2-simplices plus the index sequence threading their supports."""

    terms: tuple[tuple[int, Simplex2], ...]
    index_seq: tuple[int, ...]

    def as_chain(self) -> Chain:
        return Chain(2, tuple((s, sign) for sign, s in self.terms))

    def length(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class WalkRepresentation:
    """Representation data extracted from a verified walk.

    ``points`` is the sequence d_0 .. d_{2n+1} with d_0 the initial point,
    d_{2*pivot} the terminal point, and the final entry the representation's
    third point; ``matching`` pairs each non-pivot even start index with the
    odd start index whose reversed pair carries the same distance type.
    """

    rep: Representation
    apex: Point
    points: tuple[Point, ...]
    pivot: int
    matching: tuple[tuple[int, int], ...]


def _signed_boundary(sign: int, simplex: Simplex2) -> Chain:
    return boundary(chain_of(simplex, sign))


def verify_chain_walk(walk: ChainWalk, f01: Edge1, f02: Edge1) -> bool:
    """Literal check of the walk conditions against the two target edges."""
    terms = walk.terms
    ks = walk.index_seq
    m = len(terms) - 1
    if m < 0 or len(ks) != m + 2:
        return False
    if ks[0] != 1 or ks[-1] != 2 or any(k == 0 for k in ks):
        return False
    for i, (sign, simplex) in enumerate(terms):
        if sign not in (1, -1):
            return False
        if ks[i] == ks[i + 1]:
            return False
        if simplex.support != tuple(sorted({0, ks[i], ks[i + 1]})):
            return False
    first = _signed_boundary(*terms[0]).part((0, 1))
    if first != Chain(1, ((f01, 1),)):
        return False
    last = _signed_boundary(*terms[m]).part((0, 2))
    if last != Chain(1, ((f02, -1),)):
        return False
    for i in range(m):
        j = ks[i + 1]
        tele = (_signed_boundary(*terms[i]).part((0, j))
                + _signed_boundary(*terms[i + 1]).part((0, j)))
        if tele:
            return False
    return True


def _check_walk_rep(wr: WalkRepresentation) -> None:
    pts = wr.points
    if len(pts) < 2 or len(pts) % 2:
        raise MalformedWalkError("point sequence must have even positive length")
    n = len(pts) // 2 - 1
    if pts[0] != wr.rep.a:
        raise MalformedWalkError("d_0 is not the initial point")
    if pts[-1] != wr.rep.c:
        raise MalformedWalkError("d_{2n+1} is not the representation's third point")
    if not 0 <= wr.pivot <= n:
        raise MalformedWalkError("pivot index out of range")
    if wr.pivot == 0 and wr.rep.a_prime != wr.rep.a:
        raise MalformedWalkError("pivot 0 requires coinciding endpoints")
    if pts[2 * wr.pivot] != wr.rep.a_prime:
        raise MalformedWalkError("pivot entry is not the terminal point")
    for i in range(n + 1):
        triple = [pts[2 * i], pts[2 * i + 1], wr.apex]
        for x in range(3):
            for y in range(x + 1, 3):
                d = sd(triple[x], triple[y])
                if d.tag == EXACT and d.value.is_rational():
                    raise MalformedWalkError(
                        f"pair block {i} is not independent from the apex")
    evens = {2 * i for i in range(n + 1)} - {2 * wr.pivot}
    odds = {2 * i + 1 for i in range(n)}
    sources = [p for p, _ in wr.matching]
    targets = [q for _, q in wr.matching]
    if sorted(sources) != sorted(evens) or sorted(targets) != sorted(odds):
        raise MalformedWalkError("matching is not a bijection between pair blocks")
    for p, q in wr.matching:
        if star_compare(sd(pts[p], pts[p + 1]), sd(pts[q + 1], pts[q])) != 0:
            raise MalformedWalkError("matched pairs carry different distance types")
    if star_compare(sd(pts[2 * wr.pivot], pts[2 * wr.pivot + 1]),
                    sd(wr.rep.a_prime, wr.rep.c)) != 0:
        raise MalformedWalkError("pivot pair does not carry the terminal distance type")


def walk_representation(walk: ChainWalk) -> WalkRepresentation:
    """Extract and re-verify the representation data of a verified walk.

    Handles the shapes the search emits: a single filling simplex, the
    two-simplex cone subwalk, and the odd telescoping normal form over the
    support (0, 1, 2).
    """
    terms = walk.terms
    if len(terms) == 1:
        shell = shell_from_chain(boundary(walk.as_chain()))
        if shell is None:
            raise MalformedWalkError("single-simplex walk does not bound a shell")
        rep = literal_representation(shell)
        if rep.a_prime != rep.a:
            raise MalformedWalkError("single-simplex walk with non-coinciding endpoints")
        wr = WalkRepresentation(rep, rep.b, (rep.a, rep.c), 0, ())
        _check_walk_rep(wr)
        return wr
    if (len(terms) == 2 and terms[0][1].support[:2] == (0, 1)
            and terms[1][1].support[0] == 0):
        t0, t1 = terms[0][1], terms[1][1]
        a, apex_b, d = t0.tops
        a_p, c, _ = t1.tops
        rep = Representation(a, apex_b, c, a_p)
        wr = WalkRepresentation(rep, apex_b, (a, d, a_p, c), 1, ((0, 1),))
        _check_walk_rep(wr)
        return wr
    if len(terms) % 2 == 1 and all(s.support == (0, 1, 2) for _, s in terms):
        n = len(terms) // 2
        evens = []
        odds = []
        for i in range(n):
            evens.append(terms[2 * i][1].tops[0])
            if terms[2 * i + 1][1].tops[2] != terms[2 * i][1].tops[2]:
                raise MalformedWalkError("odd point disagrees across a pair block")
            odds.append(terms[2 * i][1].tops[2])
        evens.append(terms[2 * n][1].tops[0])
        for i in range(n):
            if terms[2 * i + 1][1].tops[0] != evens[i + 1]:
                raise MalformedWalkError("even point disagrees across a junction")
        c = terms[2 * n][1].tops[2]
        apex = terms[0][1].tops[1]
        rep = Representation(evens[0], apex, c, evens[n])
        pts = []
        for i in range(n):
            pts += [evens[i], odds[i]]
        pts += [evens[n], c]
        wr = WalkRepresentation(rep, apex, tuple(pts), n,
                                tuple((2 * i, 2 * i + 1) for i in range(n)))
        _check_walk_rep(wr)
        return wr
    raise MalformedWalkError("walk shape not supported by representation extraction")


def _independent_pair(x: Point, y: Point) -> bool:
    d = sd(x, y)
    return not (d.tag == EXACT and d.value.is_rational())


def _fill_walk(shell: Shell1, rep: Representation) -> Optional[ChainWalk]:
    """Length-1 walk: a single simplex whose faces are the shell's own edges.

    Requires the recovered representation to close up literally (terminal
    point equal to the initial point)."""
    if rep.a_prime != rep.a:
        return None
    try:
        simplex = make_simplex2((0, 1, 2), (rep.a, rep.b, rep.c),
                                shell.vertex_objects,
                                shared={(0, 1): shell.e01, (0, 2): shell.e02,
                                        (1, 2): shell.e12})
    except (PreconditionError, UsageError):
        return None
    walk = ChainWalk(((1, simplex),), (1, 2))
    if not verify_chain_walk(walk, shell.e01, shell.e02):
        return None
    if boundary(walk.as_chain()) != shell.as_chain():
        return None
    return walk


def _apex_candidates(rep: Representation) -> list[Point]:
    """Iota variants of the representation's second point."""
    b = rep.b
    out = [b]
    for delta in (Fraction(1, 4), Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 2),
                  Fraction(1, 8), Fraction(-1, 8), Fraction(1), Fraction(-1),
                  Fraction(2), Fraction(-2)):
        out.append(b.nudged(delta))
    return out


def _normal_walk(shell: Shell1, rep: Representation, n: int,
                 ctx: PointContext, attempts_budget: int = 400) -> Optional[ChainWalk]:
    """Telescoping walk of 2n+1 simplices over the support (0, 1, 2).

    One apex point carries all middle tops; it must realize the two inner
    edge types against the representation's endpoints and stay independent
    from every pair point, so a few iota perturbations of the literal second
    point are tried.
    """
    t01, t12, t02 = shell.sd_types()
    a, _, c, a_p = rep.points()
    odds = [ctx.fresh_generic() for _ in range(n)]
    interior_candidates = [a, a_p, a.nudged(1), a.nudged(-1)]
    v0, v1, v2 = shell.vertex_objects

    def evens_ok(evens: list[Point]) -> bool:
        for i in range(n):
            if star_compare(sd(evens[i], odds[i]), sd(evens[i + 1], odds[i])) != 0:
                return False
            if not _independent_pair(evens[i], odds[i]):
                return False
        return True

    def apex_ok(evens: list[Point], apex: Point) -> bool:
        for i in range(n):
            if not (_independent_pair(evens[i], apex)
                    and _independent_pair(odds[i], apex)):
                return False
        return _independent_pair(evens[n], apex)

    def assemble(evens: list[Point], apex: Point) -> Optional[ChainWalk]:
        try:
            terms: list[tuple[int, Simplex2]] = []
            h_prev: Optional[Edge1] = None
            for i in range(n):
                g_i = Edge1((0, 2), (v0, v2), (evens[i], odds[i]))
                k_i = Edge1((1, 2), (v1, v2), (apex, odds[i]))
                e_faces = {(0, 2): g_i, (1, 2): k_i,
                           (0, 1): shell.e01 if i == 0 else h_prev}
                even_simplex = make_simplex2((0, 1, 2), (evens[i], apex, odds[i]),
                                             (v0, v1, v2), shared=e_faces)
                h_next = Edge1((0, 1), (v0, v1), (evens[i + 1], apex))
                odd_simplex = make_simplex2((0, 1, 2), (evens[i + 1], apex, odds[i]),
                                            (v0, v1, v2),
                                            shared={(0, 1): h_next, (0, 2): g_i,
                                                    (1, 2): k_i})
                terms += [(1, even_simplex), (-1, odd_simplex)]
                h_prev = h_next
            final = make_simplex2((0, 1, 2), (evens[n], apex, c),
                                  (v0, v1, v2),
                                  shared={(0, 1): h_prev, (0, 2): shell.e02,
                                          (1, 2): shell.e12})
            terms.append((1, final))
        except (PreconditionError, UsageError):
            return None
        walk = ChainWalk(tuple(terms), tuple([1, 2] * (n + 1))[:2 * n + 2])
        if not verify_chain_walk(walk, shell.e01, shell.e02):
            return None
        if boundary(walk.as_chain()) != shell.as_chain():
            return None
        return walk

    apexes = [y for y in _apex_candidates(rep)
              if star_compare(sd(a, y), t01) == 0
              and star_compare(sd(y, c), t12) == 0]
    attempts = 0
    for interior in itertools.product(interior_candidates, repeat=max(0, n - 1)):
        evens = [a, *interior, a_p]
        if not evens_ok(evens):
            continue
        for apex in apexes:
            attempts += 1
            if attempts > attempts_budget:
                return None
            if not apex_ok(evens, apex):
                continue
            walk = assemble(evens, apex)
            if walk is not None:
                return walk
    return None


def search_walk(shell: Shell1, n_max: int, ctx: PointContext) -> Optional[ChainWalk]:
    """Bounded brute-force walk search; sound (results re-verify), not complete.

    Tries walks of length 2n+1 for n up to n_max, drawing interior points
    from the shell's own points and fresh generics.
    """
    if n_max < 0:
        raise UsageError("n_max must be nonnegative")
    if shell.support != (0, 1, 2):
        raise UsageError("walks thread the indices 1 and 2 around 0; "
                         "rename the shell onto the support (0, 1, 2) first")
    rep = literal_representation(shell)
    walk = _fill_walk(shell, rep)
    if walk is not None:
        return walk
    for n in range(1, n_max + 1):
        walk = _normal_walk(shell, rep, n, ctx)
        if walk is not None:
            return walk
    return None


def walk_parameter(walk: ChainWalk) -> int:
    """The n with |walk| = 2n+1 for normal shapes; block count otherwise."""
    return max(0, (walk.length() - 1) // 2)


def witness_subwalk(witness: Chain) -> ChainWalk:
    """The walk inside a cone witness: its two simplices incident to index 0.

    The witness chain has supports (i, j, apex), (j, k, apex), (i, k, apex)
    over a shell support (i, j, k) with i = 0; the first and last terms
    thread the walk 1 -> apex -> 2.
    """
    items = witness.items()
    if len(items) != 3 or witness.dim != 2:
        raise UsageError("witness subwalk expects a 3-term 2-chain")
    supports = sorted({s for simplex, _ in items for s in simplex.support})
    if len(supports) != 4 or supports[0] != 0:
        raise UsageError("witness chain does not sit over a coned shell support")
    _, j, k, apex = supports
    first = last = None
    for simplex, coeff in items:
        if simplex.support == (0, j, apex):
            first = (coeff, simplex)
        elif simplex.support == (0, k, apex):
            last = (coeff, simplex)
    if first is None or last is None or first[0] != 1 or last[0] != -1:
        raise UsageError("witness chain does not contain the expected cone faces")
    return ChainWalk((first, last), (j, apex, k))


def d_e_upper_bound(a: Point, b: Point, n_max: int,
                    ctx: PointContext) -> int | float:
    """Upper bound on the endpoint-equivalence distance, or infinity.

    Infinity when the bracket is nonzero; 0 for literally equal points;
    otherwise the least walk parameter within the bound certifying a
    canonical shell with endpoints (a, b)."""
    if n_max < 0:
        raise UsageError("n_max must be nonnegative")
    if a == b:
        return 0
    if not bracket(a, b).is_zero():
        return math.inf
    shell = bracket_shell(a, b, ctx)
    rep = literal_representation(shell)
    if _fill_walk(shell, rep) is not None:
        return 0
    for n in range(1, n_max + 1):
        if _normal_walk(shell, rep, n, ctx) is not None:
            return n
    return math.inf
