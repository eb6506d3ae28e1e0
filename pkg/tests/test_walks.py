import math
from fractions import Fraction

import pytest

from circlehom import (ChainWalk, Representation, UsageError, boundary,
                       bracket, d_e_upper_bound, is_boundary, make_shell,
                       make_simplex2, rotate, sd, search_walk, shell_class,
                       star_compare, verify_chain_walk,
                       walk_parameter, walk_representation, witness_boundary,
                       witness_subwalk)
from circlehom.simplices import Chain, translate_simplex
from circlehom.circle import Translation
from circlehom.star import rational


@pytest.fixture
def shells(ctx):
    p0 = ctx.point(0)
    a1 = ctx.symbol_point("a1")
    a2 = ctx.symbol_point("a2")
    return {
        "trivial": make_shell(Representation(p0, a1, a2, p0)),
        "iota": make_shell(Representation(p0, a1, a2, p0.nudged(1))),
        "half": make_shell(Representation(p0, a1, a2, ctx.point(Fraction(1, 2)))),
    }


def test_single_simplex_walk(ctx, shells):
    walk = search_walk(shells["trivial"], 3, ctx)
    assert walk is not None and walk.length() == 1
    assert verify_chain_walk(walk, shells["trivial"].e01, shells["trivial"].e02)
    assert boundary(walk.as_chain()) == shells["trivial"].as_chain()
    wr = walk_representation(walk)
    assert wr.pivot == 0
    assert len(wr.points) == 2


def test_iota_shell_needs_length_three(ctx, shells):
    walk = search_walk(shells["iota"], 3, ctx)
    assert walk is not None and walk.length() == 3
    assert boundary(walk.as_chain()) == shells["iota"].as_chain()
    wr = walk_representation(walk)
    assert wr.pivot == 1
    assert len(wr.points) == 4
    # the representation's endpoint bracket matches the walked shell's class
    endpoint_class = bracket(wr.rep.a, wr.rep.a_prime)
    assert endpoint_class == shell_class(shells["iota"])


def test_blocked_shell_finds_nothing(ctx, shells):
    for bound in (0, 1, 2, 3):
        assert search_walk(shells["half"], bound, ctx) is None
    with pytest.raises(UsageError):
        search_walk(shells["half"], -1, ctx)


def test_search_requires_canonical_support(ctx):
    p0 = ctx.point(0)
    shell = make_shell(Representation(p0, ctx.symbol_point("a1"),
                                      ctx.symbol_point("a2"), p0),
                       support=(0, 2, 5))
    with pytest.raises(UsageError):
        search_walk(shell, 3, ctx)


def test_witness_subwalk_verifies(ctx, shells):
    witness = witness_boundary(shells["iota"], ctx)
    walk = witness_subwalk(witness)
    assert walk.index_seq == (1, 3, 2)
    assert verify_chain_walk(walk, shells["iota"].e01, shells["iota"].e02)
    wr = walk_representation(walk)
    assert wr.pivot == 1
    assert star_compare(sd(wr.points[0], wr.points[1]),
                        sd(wr.points[2], wr.points[1])) == 0


def test_broken_telescoping_rejected(ctx, shells):
    walk = search_walk(shells["iota"], 3, ctx)
    assert walk is not None and walk.length() == 3
    sign1, middle = walk.terms[1]
    # rebuild the middle simplex with a private copy of its outer face
    replacement = make_simplex2(middle.support, middle.tops,
                                (middle.faces[0].vertices[0],
                                 middle.faces[0].vertices[1],
                                 middle.faces[1].vertices[1]),
                                shared={(0, 1): middle.face(0, 1),
                                        (1, 2): middle.face(1, 2)})
    broken = ChainWalk((walk.terms[0], (sign1, replacement), walk.terms[2]),
                       walk.index_seq)
    assert not verify_chain_walk(broken, shells["iota"].e01, shells["iota"].e02)


def test_walk_verification_is_translation_invariant(ctx, shells):
    walk = search_walk(shells["iota"], 3, ctx)
    t = Translation(rational(ctx.basis, Fraction(2, 7)), Fraction(3))
    moved = ChainWalk(tuple((s, translate_simplex(t, x)) for s, x in walk.terms),
                      walk.index_seq)
    assert verify_chain_walk(moved, translate_simplex(t, shells["iota"].e01),
                             translate_simplex(t, shells["iota"].e02))


def test_walk_agrees_with_boundary_criterion(ctx):
    p0 = ctx.point(0)
    for terminal in (p0, p0.nudged(2), ctx.point(Fraction(1, 2)),
                     ctx.point(Fraction(1, 6), iota=1)):
        shell = make_shell(Representation(p0, ctx.fresh_generic(),
                                          ctx.fresh_generic(), terminal))
        walk = search_walk(shell, 3, ctx)
        assert (walk is not None) == is_boundary(shell)
        if walk is not None:
            assert boundary(walk.as_chain()) == shell.as_chain()


def test_walk_found_when_interior_meets_terminal(ctx):
    # the second point sits at an exact rational distance from the terminal
    # point, so the telescoping walk cannot reuse it verbatim as its apex;
    # the search must fall back to a perturbed apex
    a = ctx.point(0)
    b = ctx.point(Fraction(1, 6), iota=1)
    c = ctx.point(Fraction(1, 6), iota=2)
    a_p = a.nudged(1)
    assert sd(a_p, b).tag == 0 and sd(a_p, b).value.is_rational()
    shell = make_shell(Representation(a, b, c, a_p))
    assert is_boundary(shell)
    walk = search_walk(shell, 3, ctx)
    assert walk is not None
    assert boundary(walk.as_chain()) == shell.as_chain()
    wr = walk_representation(walk)
    assert wr.apex != b


def test_d_e_bounds(ctx):
    a = ctx.point(Fraction(1, 5), iota=1)
    assert d_e_upper_bound(a, a, 3, ctx) == 0
    assert d_e_upper_bound(a, a.nudged(1), 3, ctx) == 1
    assert math.isinf(d_e_upper_bound(a, rotate(a, Fraction(1, 2)), 3, ctx))
    # triangle-like inequality with slack 8 on finite bounds
    b, c = a.nudged(2), a.nudged(-1)
    dab = d_e_upper_bound(a, b, 3, ctx)
    dac = d_e_upper_bound(a, c, 3, ctx)
    dcb = d_e_upper_bound(c, b, 3, ctx)
    assert dab <= dac + dcb + 8


def test_walk_parameter(ctx, shells):
    assert walk_parameter(search_walk(shells["trivial"], 3, ctx)) == 0
    assert walk_parameter(search_walk(shells["iota"], 3, ctx)) == 1
