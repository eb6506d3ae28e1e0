from fractions import Fraction

import pytest

from circlehom import EXACT, PointContext, StarValue, rational, symbol


@pytest.fixture
def ctx():
    return PointContext()


@pytest.fixture
def basis(ctx):
    return ctx.basis


def star(basis, value, tag=EXACT):
    """Shorthand: rational star value from a fraction-like."""
    return StarValue(rational(basis, Fraction(value)), tag)


def alpha(basis, name, tag=EXACT):
    return StarValue(symbol(basis, name), tag)


@pytest.fixture
def mk_star(basis):
    return lambda value, tag=EXACT: star(basis, value, tag)


@pytest.fixture
def mk_alpha(basis):
    return lambda name: alpha(basis, name)
