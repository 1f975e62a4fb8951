import itertools

import pytest
from hypothesis import given, settings, strategies as st

from plane_syzygy.classify import resolution_hilbert
from plane_syzygy.invariants import JacobianData
from plane_syzygy.poly import Poly, X, Y, Z, parse_poly
from plane_syzygy.resolution import (CurveInputError, check_curve, jacobian, jacobian_syzygies, minimal_resolution,
                                     minimalize)
from plane_syzygy.groebner import ModVec, syzygies


CASES = [
    ("xyz+x^3+y^3", (2, 2, 2, 2), (5, 5)),
    ("x^5-y^2z^3-xz^4", (2, 4, 4), (10,)),
    ("(x^2+y^2)^2-4xy^2z", (2, 2, 3), (7,)),
    ("(x^2+y^2)^3-4x^2y^2z^2", (3, 4, 4, 4), (10, 10)),
    ("x(x^2+xy+z^2)", (1, 1), ()),
    ("x^3+y^3+z^3", (2, 2, 2), (6,)),
]


@pytest.mark.parametrize("text, dl, el", CASES)
def test_resolution_shape(text, dl, el):
    res = minimal_resolution(parse_poly(text))
    assert res.d_list == dl
    assert res.e_list == el
    assert res.m == len(dl)


@pytest.mark.parametrize("text, dl, el", CASES)
def test_generators_are_syzygies(text, dl, el):
    f = parse_poly(text)
    J = jacobian(f)
    res = minimal_resolution(f)
    for r, dj in zip(res.syzygies.generators, res.d_list):
        assert r.dot(J).is_zero()
        assert all(c.is_zero() or c.degree == dj for c in r.components)
    a1, a2 = res.matrices()
    for col in range(len(res.second)):
        for i in range(3):
            entry = Poly()
            for j in range(res.m):
                entry = entry + a1[i][j] * a2[j][col]
            assert entry.is_zero()


def truncated_hilbert(d, dl, el, k):
    def b(n):
        return (n + 2) * (n + 1) // 2 if n >= 0 else 0

    return b(k) - 3 * b(k - d + 1) + sum(b(k - d - dj + 1) for dj in dl) - sum(b(k - e) for e in el)


@pytest.mark.parametrize("text, dl, el", CASES)
def test_hilbert_function_from_resolution(text, dl, el):
    f = parse_poly(text)
    M = JacobianData(f).milnor(3 * f.degree)
    for k in range(3 * f.degree + 1):
        assert M[k] == truncated_hilbert(f.degree, dl, el, k)
    # the polynomial form agrees once every binomial argument is >= -2
    for k in range(max(el, default=2 * f.degree) - 2, max(el, default=2 * f.degree) + 4):
        assert M[k] == resolution_hilbert(f.degree, dl, el, k)


def test_koszul_relations_are_in_the_span():
    # smooth cubic: AR(f) is generated by the three Koszul relations
    f = parse_poly("x^3+y^3+z^3")
    syz = jacobian_syzygies(f)
    assert syz.degrees == (2, 2, 2)
    assert syz.mdr == 2


def test_minimalize_drops_redundant_generators():
    a = ModVec([X, Y], (0, 0))
    b = ModVec([Y, Z], (0, 0))
    kept = minimalize([a, b, a * Z + b * X, a * Poly.const(2)])
    assert kept == [a, b]
    assert len(minimalize(syzygies([X, Y, Z]))) == 3


@pytest.mark.parametrize("perm", list(itertools.permutations([X, Y, Z])))
def test_variable_permutation_invariance(perm):
    f = parse_poly("x^5-y^2z^3-xz^4")
    g = f.substitute(perm)
    assert minimal_resolution(g).d_list == (2, 4, 4)
    assert JacobianData(g).tau() == 8


@given(st.integers(-3, 3).filter(bool), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=15, deadline=None)
def test_linear_change_of_coordinates(a, b, c):
    # x -> a x + b y + c z is invertible for a != 0
    f = parse_poly("(x^2+y^2)^2-4xy^2z")
    g = f.substitute((X * a + Y * b + Z * c, Y, Z))
    res = minimal_resolution(g)
    assert res.d_list == (2, 2, 3)
    assert JacobianData(g).tau() == 5


@pytest.mark.parametrize("text, msg", [
    ("x^2+y^2", "degree"),
    ("x^3+y^2", "homogeneous"),
    ("x^2y(x+y+z)", "reduced"),
    ("(x+y)^2(x^3+y^3+z^3)", "reduced"),
    ("0", "zero"),
])
def test_rejected_inputs(text, msg):
    with pytest.raises(CurveInputError, match=msg):
        check_curve(parse_poly(text))
    with pytest.raises(CurveInputError):
        minimal_resolution(parse_poly(text))
