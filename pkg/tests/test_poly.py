from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plane_syzygy.poly import (Poly, PolySyntaxError, X, Y, Z, det3, format_poly, grevlex_key,
                               monomials_of_degree, parse_poly, partial_derivative)

from conftest import polys


def test_parse_nodal_cubic():
    f = parse_poly("xyz+x^3+y^3")
    assert f == X * Y * Z + X ** 3 + Y ** 3
    assert f.degree == 3 and f.is_homogeneous()


def test_parse_products_and_powers():
    f = parse_poly("(x^2+y^2)^2-4xy^2z")
    assert f == (X ** 2 + Y ** 2) ** 2 - 4 * X * Y ** 2 * Z
    assert parse_poly("2*x*y") == parse_poly("2xy") == parse_poly("2 x y")
    assert parse_poly("-(x-y)") == Y - X
    assert parse_poly("x^3/2") == X ** 3 * Fraction(1, 2)


def test_parse_zero():
    assert parse_poly("0").is_zero()
    assert parse_poly("x - x").is_zero()
    assert parse_poly("0").degree is None


@pytest.mark.parametrize("text, pos", [("x^2 + 1.5y", 6), ("x + w", 4), ("x^y", 2), ("(x+y", 4), ("x +", 3), ("", 0)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert info.value.position == pos
    assert "^" in info.value.annotated().splitlines()[-1]


def test_division_only_by_constants():
    with pytest.raises(PolySyntaxError):
        parse_poly("x/y")
    with pytest.raises(PolySyntaxError):
        parse_poly("x/0")


def test_printing():
    assert str(parse_poly("xyz+x^3+y^3")) == "x^3 + y^3 + xyz"
    assert str(Poly()) == "0"
    assert str(parse_poly("x/2 - 3")) == "(1/2)x - 3"
    assert str(-X) == "-x"


def test_grevlex_order():
    # x^2 > xy > y^2 > xz > yz > z^2
    assert monomials_of_degree(2) == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    assert grevlex_key((0, 3, 0)) > grevlex_key((1, 0, 2))
    assert len(monomials_of_degree(5)) == 21


def test_derivatives():
    f = parse_poly("x^5-y^2z^3-xz^4")
    assert partial_derivative(f, "x") == parse_poly("5x^4 - z^4")
    assert partial_derivative(f, "y") == parse_poly("-2yz^3")
    assert partial_derivative(f, "z") == parse_poly("-3y^2z^2 - 4xz^3")
    with pytest.raises(ValueError):
        partial_derivative(f, "w")


@given(polys())
def test_euler_relation_on_homogeneous_parts(p):
    for k, h in p.homogeneous_parts().items():
        euler = X * h.diff(0) + Y * h.diff(1) + Z * h.diff(2)
        assert euler == h * k


@given(polys())
def test_print_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@given(polys(), polys(), polys())
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@given(polys(), polys())
def test_division_identity(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert (a * b).exact_div(b) == a


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (X ** 2 + Y).exact_div(X)


def test_det3():
    # det[(x,y,z); (1,0,0); (0,1,0)] = z
    one, zero = Poly.const(1), Poly()
    assert det3((one, zero, zero), (zero, one, zero)) == Z
    r1 = (parse_poly("-xy^2"), parse_poly("x^2y"), parse_poly("-x^2z+y^2z"))
    assert det3(r1, r1).is_zero()


@given(polys(max_degree=2), st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)))
def test_evaluate_matches_substitute(p, pt):
    consts = tuple(Poly.const(v) for v in pt)
    assert p.substitute(consts) == p.evaluate(pt)
