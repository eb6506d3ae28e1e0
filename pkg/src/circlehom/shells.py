"""Shells, holonomy, boundary decisions, witness chains, and the bracket group.

The boundary criterion is holonomy membership in Z*: a shell bounds exactly
when the star-sum of its edge distances (with the outer edge negated) lies
inside Z*, equivalently when its endpoints are Lascar equivalent.  All
positive decisions here come with explicit 2-chains whose boundaries are
re-verified before being returned; construction bookkeeping is never
trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circle import (Point, PointContext, Translation, point_at, point_before,
                     sd)
from .errors import (EndpointMismatchError, PreconditionError, UsageError,
                     VerificationError)
from .simplices import (Chain, Edge1, Shell1, Simplex2, boundary,
                        make_simplex2)
from .star import (EXACT, RealValue, StarSet, StarValue, in_z_star,
                   mod_z_reduce, neg_star, star_compare, star_sort, sum_star,
                   to_real_mod_z)


@dataclass(frozen=True)
class Representation:
    """Quadruple (a, b, c, a') presenting a shell's three edge types.

    The pairs (a,b), (b,c), (a',c) must each be independent; (a, a') is the
    endpoint pair and may well be interalgebraic.
    """

    a: Point
    b: Point
    c: Point
    a_prime: Point

    def __post_init__(self):
        for x, y, label in ((self.a, self.b, "(a, b)"),
                            (self.b, self.c, "(b, c)"),
                            (self.a_prime, self.c, "(a', c)")):
            d = sd(x, y)
            if d.tag == EXACT and d.value.is_rational():
                raise PreconditionError(f"representation pair {label} is not independent")

    @property
    def endpoint_pair(self) -> tuple[Point, Point]:
        return (self.a, self.a_prime)

    def points(self) -> tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.a_prime)


@dataclass(frozen=True)
class H1Element:
    """Element of the first homology group, realized as R/Z at desk scale."""

    value: RealValue  # reduced into [0, 1)

    @staticmethod
    def of(value: RealValue) -> "H1Element":
        return H1Element(value.reduce_mod_1())

    def __add__(self, other: "H1Element") -> "H1Element":
        return H1Element.of(self.value + other.value)

    def __neg__(self) -> "H1Element":
        return H1Element.of(-self.value)

    def __sub__(self, other: "H1Element") -> "H1Element":
        return self + (-other)

    def is_zero(self) -> bool:
        return self.value.is_zero()


def bracket(a: Point, b: Point) -> H1Element:
    """Homology class of any shell with endpoint pair (a, b)."""
    return H1Element.of(to_real_mod_z(sd(a, b)))


def e_relation(a: Point, b: Point) -> bool:
    """Endpoint equivalence: the bracket vanishes."""
    return bracket(a, b).is_zero()


def psi(t: Translation, base: Point) -> H1Element:
    """Image of an automorphism under the canonical epimorphism.

    Defined as the bracket of (base, t(base)); the value does not depend on
    the chosen base point.
    """
    return bracket(base, t(base))


def representation_equiv(r0: Representation, r1: Representation) -> bool:
    """Both quadruples present the same shell: matching edge distance types."""
    return (star_compare(sd(r0.a, r0.b), sd(r1.a, r1.b)) == 0
            and star_compare(sd(r0.b, r0.c), sd(r1.b, r1.c)) == 0
            and star_compare(sd(r0.a_prime, r0.c), sd(r1.a_prime, r1.c)) == 0)


def make_shell(rep: Representation,
               support: tuple[int, int, int] = (0, 1, 2),
               vertices: Optional[tuple[Point, Point, Point]] = None) -> Shell1:
    """Shell with edges [a b], [b c], [a' c]; the vertex at the low index
    keeps a as its object while the outer edge attaches a', which is where
    nonzero holonomy lives."""
    i, j, k = support
    if not 0 <= i < j < k:
        raise UsageError(f"bad shell support {support}")
    va, vb, vc = vertices if vertices is not None else (rep.a, rep.b, rep.c)
    e01 = Edge1((i, j), (va, vb), (rep.a, rep.b))
    e12 = Edge1((j, k), (vb, vc), (rep.b, rep.c))
    e02 = Edge1((i, k), (va, vc), (rep.a_prime, rep.c))
    return Shell1(e01, e12, e02)


def literal_representation(shell: Shell1) -> Representation:
    """Recover a representation, preferring the stored image points.

    When the stored images chain up (as they do for shells built from
    representations and for boundaries of constructed simplices) the stored
    quadruple is returned; otherwise missing links are completed canonically
    at unit iota steps.
    """
    a = shell.e01.images[0]
    b = shell.e01.images[1]
    if shell.e12.images[0] == b:
        c = shell.e12.images[1]
    else:
        c = point_at(b, shell.e12.sd_type)
    if shell.e02.images[1] == c:
        a_prime = shell.e02.images[0]
    else:
        a_prime = point_before(c, shell.e02.sd_type)
    return Representation(a, b, c, a_prime)


def shell_holonomy(shell: Shell1) -> StarSet:
    """Star-sum of the edge distances with the outer edge negated."""
    t01, t12, t02 = shell.sd_types()
    return sum_star([t01, t12, neg_star(t02)])


def reduced_holonomy(shell: Shell1) -> StarSet:
    return frozenset(mod_z_reduce(v) for v in shell_holonomy(shell))


def is_boundary(shell: Shell1) -> bool:
    """Holonomy criterion: the shell bounds iff its holonomy lies inside Z*."""
    return all(in_z_star(v) for v in shell_holonomy(shell))


def shell_class(shell: Shell1) -> H1Element:
    member = next(iter(shell_holonomy(shell)))
    return H1Element.of(to_real_mod_z(member))


def _verify_boundary(chain: Chain, expected: Chain, what: str) -> None:
    if boundary(chain) != expected:
        raise VerificationError(f"{what}: constructed chain fails its boundary equation")


def witness_boundary(shell: Shell1, ctx: PointContext) -> Optional[Chain]:
    """Explicit 3-term 2-chain with the given shell as boundary, or None.

    The witness cones the shell off a fresh generic point d; freshness makes
    the two attachments of the endpoint pair at d carry equal distance types
    whenever the shell bounds at all.  The boundary equation is re-verified
    before returning.
    """
    if not is_boundary(shell):
        return None
    rep = literal_representation(shell)
    a, b, c, a_prime = rep.points()
    v0, v1, v2 = shell.vertex_objects
    base = shell.support
    apex = max(base) + 1
    d = ctx.fresh_generic()
    s0, s1, s2 = base
    a0 = make_simplex2((s0, s1, apex), (a, b, d), (v0, v1, d),
                       shared={(0, 1): shell.e01})
    a1 = make_simplex2((s1, s2, apex), (b, c, d), (v1, v2, d),
                       shared={(0, 1): shell.e12, (0, 2): a0.face(1, 2)})
    a2 = make_simplex2((s0, s2, apex), (a_prime, c, d), (v0, v2, d),
                       shared={(0, 1): shell.e02, (0, 2): a0.face(0, 2),
                               (1, 2): a1.face(1, 2)})
    witness = Chain(2, ((a0, 1), (a1, 1), (a2, -1)))
    _verify_boundary(witness, shell.as_chain(), "witness_boundary")
    return witness


# -- representations with prescribed endpoints --------------------------------


def _pick(base: Fraction, constraint: Optional[int]) -> Fraction:
    return base if constraint is None else base + constraint


def _solve_iotas(ia: Fraction, iap: Fraction,
                 r1: Optional[int], r2: Optional[int],
                 r3: Optional[int]) -> tuple[Fraction, Fraction]:
    """Find iota coefficients (ib, ic) realizing three sign constraints.

    r1 constrains sign(ib - ia), r2 constrains sign(ic - ib), r3 constrains
    sign(ic - iap); None means unconstrained.  Exact-rational edge types are
    impossible, so equality constraints never occur.
    """
    if r2 is None:
        return _pick(ia, r1), _pick(iap, r3)
    if r1 is None:
        ic = _pick(iap, r3)
        return ic - r2, ic
    if r3 is None:
        ib = _pick(ia, r1)
        return ib, ib + r2
    # all three constrained: pick ic = ib + r2*delta, so ib must sit on side
    # r1 of ia and on side r3 of iap - r2*delta; choose delta to make the two
    # open half-lines overlap
    if r1 == r3:
        bound2 = iap - r2
        ib = max(ia, bound2) + 1 if r1 > 0 else min(ia, bound2) - 1
        return ib, ib + r2
    gap = r1 * (iap - ia)
    if r1 != r2:
        delta = max(Fraction(1), 1 - gap)
    else:
        if gap <= 0:
            raise VerificationError("iota constraint system unexpectedly infeasible")
        delta = gap / 2
    bound2 = iap - r2 * delta
    lo, hi = (ia, bound2) if r1 > 0 else (bound2, ia)
    assert lo < hi
    ib = (lo + hi) / 2
    return ib, ib + r2 * delta


def _tag_constraint(t: StarValue) -> Optional[int]:
    return None if t.tag == EXACT else t.tag


def rep_with_endpoints(shell: Shell1, a: Point, a_prime: Point) -> Representation:
    """Representation of the shell with the prescribed endpoint pair.

    Exists exactly when sd(a, a') lies in the shell's reduced holonomy set;
    the interior points are solved from the three sign constraints the edge
    types impose on the iota coefficients.
    """
    t01, t12, t02 = shell.sd_types()
    b_angle = (a.angle + t01.value).reduce_mod_1()
    c_angle = (b_angle + t12.value).reduce_mod_1()
    if (a_prime.angle + t02.value).reduce_mod_1() != c_angle:
        raise EndpointMismatchError(
            "prescribed endpoints are not angle-compatible with the shell's edge types")
    ib, ic = _solve_iotas(a.iota, a_prime.iota,
                          _tag_constraint(t01), _tag_constraint(t12),
                          _tag_constraint(t02))
    b = Point(b_angle, ib)
    c = Point(c_angle, ic)
    rep = Representation(a, b, c, a_prime)
    if (star_compare(sd(a, b), t01) != 0 or star_compare(sd(b, c), t12) != 0
            or star_compare(sd(a_prime, c), t02) != 0):
        raise VerificationError("solved representation does not realize the edge types")
    return rep


# -- re-vertexing --------------------------------------------------------------


def revertex_shell(shell: Shell1, new_v0: Point) -> Shell1:
    """Same edges and images, with the vertex object at the low index replaced."""
    e01 = Edge1(shell.e01.support, (new_v0, shell.e01.vertices[1]), shell.e01.images)
    e02 = Edge1(shell.e02.support, (new_v0, shell.e02.vertices[1]), shell.e02.images)
    return Shell1(e01, shell.e12, e02)


def revertex_witness(shell: Shell1, new_v0: Point,
                     ctx: PointContext) -> tuple[Chain, Shell1]:
    """2-chain whose boundary is shell - revertexed(shell).

    Two equal-defect edge dipoles (the two low-index edges with old and new
    vertex objects) are transported onto fresh apexes, where an apex shifted
    by the difference of the two attachment points lets them cancel exactly.
    """
    if shell.support != (0, 1, 2):
        raise UsageError("revertexing expects the canonical support (0, 1, 2)")
    star = revertex_shell(shell, new_v0)
    w0, bv, cv = shell.vertex_objects
    p1, p2 = shell.e01.images
    r1, r2 = shell.e02.images
    d = ctx.fresh_generic()
    e = ctx.fresh_generic()
    e_shift = Point.make(e.angle + r1.angle - p1.angle, e.iota + r1.iota - p1.iota)

    edge_k = Edge1((0, 3), (w0, d), (p1, d))
    edge_k_star = Edge1((0, 3), (new_v0, d), (p1, d))
    edge_l = Edge1((1, 3), (bv, d), (p2, d))
    edge_m = Edge1((0, 3), (w0, d), (r1, d))
    edge_m_star = Edge1((0, 3), (new_v0, d), (r1, d))
    edge_n = Edge1((2, 3), (cv, d), (r2, d))
    edge_x = Edge1((0, 4), (w0, e), (p1, e))
    edge_x_star = Edge1((0, 4), (new_v0, e), (p1, e))
    edge_h = Edge1((3, 4), (d, e), (d, e))
    edge_h2 = Edge1((3, 4), (d, e), (d, e_shift))

    u1 = Simplex2((0, 1, 3), (p1, p2, d), (shell.e01, edge_k, edge_l))
    u2 = Simplex2((0, 1, 3), (p1, p2, d), (star.e01, edge_k_star, edge_l))
    v1 = Simplex2((0, 2, 3), (r1, r2, d), (shell.e02, edge_m, edge_n))
    v2 = Simplex2((0, 2, 3), (r1, r2, d), (star.e02, edge_m_star, edge_n))
    w1 = Simplex2((0, 3, 4), (p1, d, e), (edge_k, edge_x, edge_h))
    w2 = Simplex2((0, 3, 4), (p1, d, e), (edge_k_star, edge_x_star, edge_h))
    w3 = Simplex2((0, 3, 4), (r1, d, e_shift), (edge_m, edge_x, edge_h2))
    w4 = Simplex2((0, 3, 4), (r1, d, e_shift), (edge_m_star, edge_x_star, edge_h2))

    beta = Chain(2, ((u1, 1), (u2, -1), (v1, -1), (v2, 1),
                     (w1, 1), (w2, -1), (w3, -1), (w4, 1)))
    _verify_boundary(beta, shell.as_chain() - star.as_chain(), "revertex_witness")
    return beta, star


# -- the two-shell constructions -----------------------------------------------


def _connector(shell: Shell1, rep: Representation, mid: Shell1,
               bb: Point, cc: Point) -> Chain:
    """Four 2-simplices whose boundary is shell - mid.

    ``mid`` is a shell over support (0, 3, 4) with edges attaching (a, bb),
    (bb, cc), (a', cc); ``rep`` presents ``shell`` with the same endpoint
    pair (a, a').
    """
    w0, w1, w2 = shell.vertex_objects
    bv = mid.e01.vertices[1]
    cv = mid.e12.vertices[1]
    a01 = make_simplex2((0, 1, 3), (rep.a, rep.b, bb), (w0, w1, bv),
                        shared={(0, 1): shell.e01, (0, 2): mid.e01})
    a12 = make_simplex2((1, 2, 3), (rep.b, rep.c, bb), (w1, w2, bv),
                        shared={(0, 1): shell.e12, (0, 2): a01.face(1, 2)})
    bk = make_simplex2((2, 3, 4), (rep.c, bb, cc), (w2, bv, cv),
                       shared={(0, 1): a12.face(1, 2), (1, 2): mid.e12})
    a02 = make_simplex2((0, 2, 4), (rep.a_prime, rep.c, cc), (w0, w2, cv),
                        shared={(0, 1): shell.e02, (0, 2): mid.e02,
                                (1, 2): bk.face(0, 2)})
    return Chain(2, ((a01, 1), (a12, 1), (bk, -1), (a02, -1)))


def _common_endpoint_type(s0: Shell1, s1: Shell1) -> StarValue:
    common = reduced_holonomy(s0) & reduced_holonomy(s1)
    if not common:
        raise EndpointMismatchError(
            "shells admit no common endpoint pair (reduced holonomies are disjoint)")
    return star_sort(common)[0]


def equalize_shells(s0: Shell1, s1: Shell1, ctx: PointContext) -> Chain:
    """2-chain whose boundary is s0 - s1, for shells with a common endpoint pair.

    Both shells are rendered as cones over a fresh independent pair hanging
    off the shared endpoints; the two cones share their outer faces, so the
    difference telescopes.  If the shells disagree on the vertex object at
    the low index, a re-vertexing certificate is prepended.
    """
    if s0.support != (0, 1, 2) or s1.support != (0, 1, 2):
        raise UsageError("equalize_shells expects shells over the support (0, 1, 2)")
    t = _common_endpoint_type(s0, s1)
    v0 = s0.vertex_objects[0]
    if s1.vertex_objects[0] != v0:
        beta, s1w = revertex_witness(s1, v0, ctx)
    else:
        beta, s1w = Chain(2), s1
    a = s0.e01.images[0]
    a_prime = point_at(a, t)
    rep0 = rep_with_endpoints(s0, a, a_prime)
    rep1 = rep_with_endpoints(s1w, a, a_prime)
    bb = ctx.fresh_generic()
    cc = ctx.fresh_generic()
    mid = Shell1(Edge1((0, 3), (v0, bb), (a, bb)),
                 Edge1((3, 4), (bb, cc), (bb, cc)),
                 Edge1((0, 4), (v0, cc), (a_prime, cc)))
    alpha = (_connector(s0, rep0, mid, bb, cc)
             - _connector(s1w, rep1, mid, bb, cc)
             - beta)
    _verify_boundary(alpha, s0.as_chain() - s1.as_chain(), "equalize_shells")
    return alpha


def compose_shells(s0: Shell1, s1: Shell1,
                   ctx: PointContext) -> tuple[Shell1, Chain]:
    """Shell with the concatenated endpoint pair plus a verified 2-chain.

    Given endpoint pairs (a, a') and (a', a'') with the shared point literally
    equal, returns a shell s with endpoint pair (a, a'') over support (0,1,2)
    and a 2-chain whose boundary is s0 + s1 - s, so the classes add.
    """
    if s0.support != (0, 1, 2) or s1.support != (0, 1, 2):
        raise UsageError("compose_shells expects shells over the support (0, 1, 2)")
    rep0 = literal_representation(s0)
    rep1 = literal_representation(s1)
    if rep0.a_prime != rep1.a:
        raise EndpointMismatchError(
            "endpoint chaining mismatch: terminal point of the first shell is "
            "not the initial point of the second")
    v0 = s0.vertex_objects[0]
    if s1.vertex_objects[0] != v0:
        beta, s1w = revertex_witness(s1, v0, ctx)
    else:
        beta, s1w = Chain(2), s1
    a, a_mid, a_end = rep0.a, rep0.a_prime, rep1.a_prime
    d = ctx.fresh_generic()
    e = ctx.fresh_generic()

    f03 = Edge1((0, 3), (v0, d), (a, d))
    f03p = Edge1((0, 3), (v0, d), (a_mid, d))
    g04 = Edge1((0, 4), (v0, e), (a_mid, e))
    g04p = Edge1((0, 4), (v0, e), (a_end, e))
    h34 = Edge1((3, 4), (d, e), (d, e))

    w1_0, w2_0 = s0.vertex_objects[1], s0.vertex_objects[2]
    a01 = make_simplex2((0, 1, 3), (a, rep0.b, d), (v0, w1_0, d),
                        shared={(0, 1): s0.e01, (0, 2): f03})
    a12 = make_simplex2((1, 2, 3), (rep0.b, rep0.c, d), (w1_0, w2_0, d),
                        shared={(0, 1): s0.e12, (0, 2): a01.face(1, 2)})
    a02 = make_simplex2((0, 2, 3), (a_mid, rep0.c, d), (v0, w2_0, d),
                        shared={(0, 1): s0.e02, (0, 2): f03p,
                                (1, 2): a12.face(1, 2)})
    w1_1, w2_1 = s1w.vertex_objects[1], s1w.vertex_objects[2]
    b01 = make_simplex2((0, 1, 4), (a_mid, rep1.b, e), (v0, w1_1, e),
                        shared={(0, 1): s1w.e01, (0, 2): g04})
    b12 = make_simplex2((1, 2, 4), (rep1.b, rep1.c, e), (w1_1, w2_1, e),
                        shared={(0, 1): s1w.e12, (0, 2): b01.face(1, 2)})
    b02 = make_simplex2((0, 2, 4), (a_end, rep1.c, e), (v0, w2_1, e),
                        shared={(0, 1): s1w.e02, (0, 2): g04p,
                                (1, 2): b12.face(1, 2)})
    bridge = make_simplex2((0, 3, 4), (a_mid, d, e), (v0, d, e),
                           shared={(0, 1): f03p, (0, 2): g04, (1, 2): h34})
    alpha7 = Chain(2, ((a01, 1), (a12, 1), (a02, -1),
                       (b01, 1), (b12, 1), (b02, -1), (bridge, -1)))

    mid = Shell1(f03, h34, g04p)
    b_star = ctx.fresh_generic()
    c_star = ctx.fresh_generic()
    rep_t = Representation(a, b_star, c_star, a_end)
    target = make_shell(rep_t, (0, 1, 2), vertices=(v0, b_star, c_star))
    gamma = _connector(target, rep_t, mid, d, e)

    alpha = alpha7 + beta - gamma
    _verify_boundary(alpha, s0.as_chain() + s1.as_chain() - target.as_chain(),
                     "compose_shells")
    return target, alpha


def bracket_shell(a: Point, b: Point, ctx: PointContext) -> Shell1:
    """Canonical shell with endpoint pair (a, b), over fresh interior points."""
    f = ctx.fresh_generic()
    g = ctx.fresh_generic()
    return make_shell(Representation(a, f, g, b))
