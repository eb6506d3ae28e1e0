from fractions import Fraction

import pytest

from circlehom import (EXACT, Chain, EndpointMismatchError,
                       H1Element, Representation, StarValue,
                       Translation, boundary, bracket, bracket_shell,
                       compose_shells, e_relation, equalize_shells,
                       is_boundary, lascar_equivalent,
                       literal_representation, make_shell,
                       point_at, psi, rational, reduced_holonomy,
                       rep_with_endpoints, representation_equiv, revertex_shell,
                       revertex_witness, rotate, sd, shell_class,
                       shell_holonomy, star_compare, sum_star, symbol,
                       to_real_mod_z, witness_boundary)
from circlehom.simplices import is_shell, translate_shell
from circlehom.star import neg_star


@pytest.fixture
def points(ctx):
    return {
        "p0": ctx.point(0),
        "a1": ctx.symbol_point("a1"),
        "a2": ctx.symbol_point("a2"),
        "half": ctx.point(Fraction(1, 2)),
        "iota": ctx.point(0, iota=1),
    }


def test_make_shell_types(ctx, points, basis):
    rep = Representation(points["p0"], points["a1"], points["a2"], points["half"])
    shell = make_shell(rep)
    t01, t12, t02 = shell.sd_types()
    # oracle: plain angle arithmetic
    assert t01 == sd(points["p0"], points["a1"])
    assert t12 == sd(points["a1"], points["a2"])
    assert t02 == sd(points["half"], points["a2"])
    assert is_shell(shell.as_chain())


def test_trivial_representation_gives_zero_holonomy(ctx, points):
    rep = Representation(points["p0"], points["a1"], points["a2"], points["p0"])
    shell = make_shell(rep)
    holonomy = shell_holonomy(shell)
    assert all(v.value.is_zero() for v in holonomy)
    assert is_boundary(shell)


def test_equivalent_representations_share_types(ctx, points):
    rep = Representation(points["p0"], points["a1"], points["a2"], points["half"])
    t = Translation(symbol(ctx.basis, "a3"), Fraction(1))
    moved = Representation(*(t(p) for p in rep.points()))
    assert representation_equiv(rep, moved)
    assert make_shell(rep).sd_types() == tuple(
        s for s in make_shell(moved).sd_types())
    changed = Representation(points["p0"], ctx.fresh_generic(),
                             points["a2"], points["half"])
    assert not representation_equiv(rep, changed)
    assert representation_equiv(rep, rep)


def test_holonomy_examples(ctx, points, basis):
    rep = Representation(points["p0"], points["a1"], points["a2"], points["half"])
    shell = make_shell(rep)
    holonomy = shell_holonomy(shell)
    # oracle: expand the star rules over the three edge types
    t01, t12, t02 = shell.sd_types()
    assert holonomy == sum_star([t01, t12, neg_star(t02)])
    assert {v.value.q0 for v in holonomy} == {Fraction(1, 2)}
    half = StarValue(rational(basis, Fraction(1, 2)), EXACT)
    assert all(to_real_mod_z(v) == to_real_mod_z(half) for v in holonomy)
    # every member matches the endpoint distance modulo integers
    from circlehom import equiv_z
    endpoint = sd(rep.a, rep.a_prime)
    assert all(equiv_z(v, endpoint) for v in holonomy)
    # invariance under translation of every point
    t = Translation(symbol(basis, "a4"), Fraction(-2))
    assert shell_holonomy(translate_shell(t, shell)) == holonomy


def test_is_boundary_examples(ctx, points):
    bounding = make_shell(Representation(points["p0"], points["a1"],
                                         points["a2"], points["iota"]))
    assert is_boundary(bounding)
    assert shell_class(bounding).is_zero()
    blocked = make_shell(Representation(points["p0"], points["a1"],
                                        points["a2"], points["half"]))
    assert not is_boundary(blocked)
    assert shell_class(blocked) == H1Element.of(rational(ctx.basis, Fraction(1, 2)))


def test_boundary_iff_lascar(ctx, points):
    for terminal in (points["p0"], points["iota"], points["half"],
                     ctx.point(Fraction(1, 3), iota=2), points["p0"].nudged(-3)):
        shell = make_shell(Representation(points["p0"], points["a1"],
                                          points["a2"], terminal))
        assert is_boundary(shell) == lascar_equivalent(points["p0"], terminal)


def test_witness_boundary(ctx, points):
    shell = make_shell(Representation(points["p0"], points["a1"],
                                      points["a2"], points["iota"]))
    witness = witness_boundary(shell, ctx)
    assert witness is not None
    assert witness.length() == 3
    assert {s.support for s, _ in witness.items()} == {(0, 1, 3), (1, 2, 3), (0, 2, 3)}
    assert boundary(witness) == shell.as_chain()

    trivial = make_shell(Representation(points["p0"], points["a1"],
                                        points["a2"], points["p0"]))
    assert boundary(witness_boundary(trivial, ctx)) == trivial.as_chain()

    blocked = make_shell(Representation(points["p0"], points["a1"],
                                        points["a2"], points["half"]))
    assert witness_boundary(blocked, ctx) is None


def test_bracket_laws(ctx, points):
    a, b, c = points["p0"], points["a1"], points["half"]
    assert bracket(a, rotate(a, Fraction(1, 2))) == H1Element.of(
        rational(ctx.basis, Fraction(1, 2)))
    assert bracket(a, a).is_zero()
    assert bracket(a, b) + bracket(b, c) == bracket(a, c)
    assert -bracket(a, b) == bracket(b, a)


def test_e_relation(ctx, points):
    a = points["p0"]
    assert e_relation(a, a.nudged(1))
    assert e_relation(a, a)
    assert not e_relation(a, rotate(a, Fraction(1, 2)))
    assert e_relation(a, a.nudged(1)) == lascar_equivalent(a, a.nudged(1))


def test_psi(ctx, points):
    basis = ctx.basis
    a = points["a1"]
    t_third = Translation(rational(basis, Fraction(1, 3)))
    assert psi(t_third, a) == H1Element.of(rational(basis, Fraction(1, 3)))
    assert psi(Translation.identity(basis), a).is_zero()
    u = Translation(symbol(basis, "a2"), Fraction(2))
    assert psi(t_third.compose(u), a) == psi(t_third, a) + psi(u, a)
    assert psi(u, a) == psi(u, points["half"])
    # infinitesimal translations land in the kernel
    t_iota = Translation(rational(basis, 0), Fraction(1))
    assert psi(t_iota, a).is_zero()
    assert psi(Translation(rational(basis, 2), Fraction(-5)), a).is_zero()


def test_rep_with_endpoints(ctx, points):
    shell = make_shell(Representation(points["p0"], points["a1"],
                                      points["a2"], points["half"]))
    t = next(iter(reduced_holonomy(shell)))
    a = ctx.point(Fraction(1, 7), iota=2)
    rep = rep_with_endpoints(shell, a, point_at(a, t))
    assert rep.a == a
    assert star_compare(sd(rep.a, rep.b), shell.e01.sd_type) == 0
    assert star_compare(sd(rep.b, rep.c), shell.e12.sd_type) == 0
    assert star_compare(sd(rep.a_prime, rep.c), shell.e02.sd_type) == 0
    with pytest.raises(EndpointMismatchError):
        rep_with_endpoints(shell, a, rotate(a, Fraction(1, 5)))


def test_equalize_shells(ctx, points):
    endpoint = points["p0"], ctx.point(Fraction(1, 3))
    s0 = make_shell(Representation(endpoint[0], points["a1"], points["a2"], endpoint[1]))
    s1 = make_shell(Representation(endpoint[0], ctx.fresh_generic(),
                                   ctx.fresh_generic(), endpoint[1]))
    alpha = equalize_shells(s0, s1, ctx)
    assert alpha.length() == 8
    assert alpha.support() <= frozenset({0, 1, 2, 3, 4})
    assert boundary(alpha) == s0.as_chain() - s1.as_chain()

    same = equalize_shells(s0, s0, ctx)
    assert boundary(same) == Chain(1)

    other_class = make_shell(Representation(endpoint[0], ctx.fresh_generic(),
                                            ctx.fresh_generic(),
                                            ctx.point(Fraction(2, 3))))
    with pytest.raises(EndpointMismatchError):
        equalize_shells(s0, other_class, ctx)


def test_equalize_bridges_vertex_mismatch(ctx, points):
    endpoint = points["p0"], ctx.point(Fraction(1, 3))
    s0 = make_shell(Representation(endpoint[0], points["a1"], points["a2"], endpoint[1]))
    rep1 = Representation(endpoint[0], ctx.fresh_generic(), ctx.fresh_generic(),
                          endpoint[1])
    s1 = make_shell(rep1, vertices=(ctx.fresh_generic(), rep1.b, rep1.c))
    alpha = equalize_shells(s0, s1, ctx)
    assert boundary(alpha) == s0.as_chain() - s1.as_chain()


def test_compose_shells(ctx, points):
    a = points["p0"]
    a_mid = ctx.point(Fraction(1, 3))
    a_end = ctx.point(Fraction(5, 6))
    s0 = make_shell(Representation(a, points["a1"], points["a2"], a_mid))
    s1 = make_shell(Representation(a_mid, ctx.fresh_generic(),
                                   ctx.fresh_generic(), a_end))
    target, chain = compose_shells(s0, s1, ctx)
    assert boundary(chain) == s0.as_chain() + s1.as_chain() - target.as_chain()
    # oracle: bracket addition
    assert shell_class(target) == bracket(a, a_mid) + bracket(a_mid, a_end)
    assert shell_class(target) == H1Element.of(rational(ctx.basis, Fraction(5, 6)))
    rep = literal_representation(target)
    assert rep.a == a and rep.a_prime == a_end


def test_compose_trivial_second_shell(ctx, points):
    a = points["p0"]
    a_mid = ctx.point(Fraction(1, 3))
    s0 = make_shell(Representation(a, points["a1"], points["a2"], a_mid))
    s1 = make_shell(Representation(a_mid, ctx.fresh_generic(),
                                   ctx.fresh_generic(), a_mid))
    target, chain = compose_shells(s0, s1, ctx)
    assert shell_class(target) == shell_class(s0)
    assert boundary(chain) == s0.as_chain() + s1.as_chain() - target.as_chain()


def test_compose_requires_literal_chaining(ctx, points):
    a = points["p0"]
    s0 = make_shell(Representation(a, points["a1"], points["a2"],
                                   ctx.point(Fraction(1, 3))))
    s1 = make_shell(Representation(ctx.point(Fraction(1, 3), iota=5),
                                   ctx.fresh_generic(), ctx.fresh_generic(),
                                   ctx.point(Fraction(1, 2))))
    with pytest.raises(EndpointMismatchError):
        compose_shells(s0, s1, ctx)


def test_revertex_witness(ctx, points):
    shell = make_shell(Representation(points["p0"], points["a1"],
                                      points["a2"], points["half"]))
    new_v0 = ctx.fresh_generic()
    beta, star = revertex_witness(shell, new_v0, ctx)
    assert star == revertex_shell(shell, new_v0)
    assert boundary(beta) == shell.as_chain() - star.as_chain()
    assert beta.length() == 8


def test_bracket_shell_realizes_classes(ctx, points):
    a = points["p0"]
    for value in (Fraction(1, 2), Fraction(3, 4)):
        b = rotate(a, value)
        shell = bracket_shell(a, b, ctx)
        assert shell_class(shell) == H1Element.of(rational(ctx.basis, value))
        assert shell.support == (0, 1, 2)


def test_literal_representation_of_simplex_boundary(ctx):
    from circlehom import chain_of, make_simplex2, shell_from_chain
    tops = tuple(ctx.fresh_generic() for _ in range(3))
    simplex = make_simplex2((0, 1, 2), tops)
    shell = shell_from_chain(boundary(chain_of(simplex)))
    rep = literal_representation(shell)
    # a simplex boundary closes up on itself
    assert rep.a == rep.a_prime
    assert (rep.a, rep.b, rep.c) == tops
    assert is_boundary(shell)
