import pytest
import sympy as sp
from hypothesis import given

from oracles import from_sympy, to_sympy
from strategies import gaussian
from vertex_algebroids.scalars import I, ONE, ZERO, GaussianRational, Q, parse_scalar, sqrt_if_square


@given(gaussian(), gaussian(), gaussian())
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(gaussian(nonzero=True))
def test_inverse(x):
    assert x * x.inv() == ONE
    assert ONE / x == x.inv()


@given(gaussian(), gaussian())
def test_matches_sympy(x, y):
    assert from_sympy(to_sympy(x) * to_sympy(y)) == x * y
    assert from_sympy(to_sympy(x) - to_sympy(y)) == x - y


@given(gaussian())
def test_text_round_trip(x):
    assert parse_scalar(str(x)) == x


@pytest.mark.parametrize(
    "text, value",
    [
        ("1/2-3i", GaussianRational(GaussianRational(1).re / 2, -3)),
        ("i", I),
        ("-i", -I),
        ("-4", GaussianRational(-4)),
        ("2/3i", GaussianRational(0, 1) * Q("2/3")),
        (" 1 + i ", ONE + I),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "x", "1/0", "1+", "i i", "1.5"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_scalar(bad)


@given(gaussian())
def test_sqrt_of_square(x):
    r = sqrt_if_square(x * x)
    assert r is not None and r * r == x * x


@pytest.mark.parametrize("x", ["2", "-3", "3/2", "1+i", "i"])
def test_non_squares(x):
    assert sqrt_if_square(x) is None
    # sympy agrees the root is irrational
    root = sp.sqrt(to_sympy(Q(x)))
    assert not (sp.nsimplify(sp.re(sp.expand_complex(root))).is_rational and sp.nsimplify(sp.im(sp.expand_complex(root))).is_rational)


def test_known_roots():
    assert sqrt_if_square("-4") == 2 * I
    assert sqrt_if_square("2i") == ONE + I
    assert sqrt_if_square("9/4") == Q("3/2")
