import pytest

from plane_syzygy.bourbaki import (bourbaki_ideal, bourbaki_map, coprime, dprime_search, exact_sequence_defect,
                                   koszul_syzygies, refined_bound, subideal_degree, unique_relation)
from plane_syzygy.groebner import ideal, same_ideal
from plane_syzygy.invariants import JacobianData
from plane_syzygy.poly import Poly, X, Y, Z, parse_poly
from plane_syzygy.resolution import jacobian, jacobian_syzygies

SEXTIC = parse_poly("(x^2+y^2)^3-4x^2y^2z^2")
SEXTIC_R = [tuple(parse_poly(t) for t in r) for r in [
    ("-xy^2", "x^2y", "-x^2z+y^2z"),
    ("-3y^4", "3xy^3-4xyz^2", "-3x^3z-9xy^2z+4xz^3"),
    ("-3x^3y+4xyz^2", "3x^4", "9x^2yz+3y^3z-4yz^3"),
    ("4xy^2z", "0", "3x^4+6x^2y^2+3y^4-4y^2z^2"),
]]

BITANGENT = parse_poly("x(x^4+xy^3+xz^3+y^2z^2)")
BITANGENT_R = [tuple(parse_poly(t) for t in r) for r in [
    ("0", "-2y^2z-3xz^2", "3xy^2+2yz^2"),
    ("-6xy^3+6xz^3", "10x^3y+4y^4+yz^3", "-10x^3z-y^3z-4z^4"),
    ("-3x^2y^2-2xyz^2", "5x^4+2xy^3+y^2z^2+2xz^3", "0"),
    ("-6xy^2z-9x^2z^2", "4y^3z+6xyz^2", "15x^4-y^2z^2+6xz^3"),
]]


def proportional(p, q):
    lm = q.leading_monomial()
    return p == q * (p.coefficient(lm) / q.coefficient(lm))


@pytest.mark.parametrize("f, rs", [(SEXTIC, SEXTIC_R), (BITANGENT, BITANGENT_R)])
def test_given_vectors_are_syzygies(f, rs):
    J = jacobian(f)
    for r in rs:
        assert sum((a * b for a, b in zip(r, J)), Poly()).is_zero()


def test_sextic_bourbaki_generators():
    r1 = SEXTIC_R[0]
    assert bourbaki_map(r1, r1, SEXTIC).is_zero()
    g = [bourbaki_map(r, r1, SEXTIC) for r in SEXTIC_R[1:]]
    for gi, want in zip(g, ["-3yz", "3xz", "3xy"]):
        assert proportional(gi, parse_poly(want))
    assert ideal(g).degree() == 3


def test_bitangent_subideal_is_a_larger_complete_intersection():
    r1 = BITANGENT_R[0]
    g2, g3, g4 = (bourbaki_map(r, r1, BITANGENT) for r in BITANGENT_R[1:])
    assert proportional(g2, parse_poly("y^3-z^3"))
    # a cubic: y times the conic 3xy + 2z^2
    assert proportional(g3, parse_poly("y(3xy+2z^2)"))
    assert coprime(g2, g3)
    assert subideal_degree([g2, g3]) == (True, 9)
    assert ideal([g2, g3, g4]).degree() == 7


def test_bourbaki_map_rejects_non_syzygies():
    with pytest.raises(ValueError):
        bourbaki_map((X ** 4, Poly(), Poly()), SEXTIC_R[0], SEXTIC)


def test_engine_bourbaki_ideal_matches_given_one():
    syz = jacobian_syzygies(SEXTIC)
    bd = bourbaki_ideal(SEXTIC, syz)
    assert bd.gen_degrees == (3 + 4 - 6 + 1,) * 3
    assert bd.degree == 3
    assert not bd.is_complete_intersection
    assert same_ideal(bd.ideal, ideal([Y * Z, X * Z, X * Y]))


def test_koszul_syzygies_lie_in_ar():
    J = jacobian(BITANGENT)
    for k in koszul_syzygies(BITANGENT):
        assert k.dot(J).is_zero()


@pytest.mark.parametrize("text", ["(x^2+y^2)^2-4xy^2z", "x^5-y^2z^3-xz^4", "(x^2+y^2)^3-4x^2y^2z^2",
                                  "x(x^4+xy^3+xz^3+y^2z^2)"])
def test_exact_sequence_dimensions(text):
    f = parse_poly(text)
    syz = jacobian_syzygies(f)
    bd = bourbaki_ideal(f, syz)
    assert exact_sequence_defect(f, syz, bd, JacobianData(f).J) == []


def test_bourbaki_needs_non_free_curve():
    f = parse_poly("x(x^2+xy+z^2)")
    with pytest.raises(ValueError):
        bourbaki_ideal(f, jacobian_syzygies(f))


def test_unique_relation_double_folium():
    f = parse_poly("(x^2+y^2)^2-4xy^2z")
    syz = jacobian_syzygies(f)
    rel = unique_relation(f, syz)
    assert rel.degrees == (2, 2, 1)
    assert rel.alpha_consistent and rel.alpha != 0
    assert rel.pairwise_coprime
    assert rel.h[0].leading_coefficient() == 1


def test_unique_relation_needs_three_generators():
    with pytest.raises(ValueError):
        unique_relation(SEXTIC, jacobian_syzygies(SEXTIC))


def test_refined_bound_arithmetic():
    # d = 6, exponents (3, 4, 4, 4), d' = 4: 15 < tau = 16, strict as m = 4
    assert refined_bound(6, 3, 4, 4) == 15
    # d' = d - 1 recovers the classical lower bound (d-1)(d-d1-1)
    assert refined_bound(5, 3, 4, 4) == 4 * 1


@pytest.mark.parametrize("text, dprime", [("(x^2+y^2)^3-4x^2y^2z^2", 4), ("x(x^4+xy^3+xz^3+y^2z^2)", 4),
                                          ("x^5-y^2z^3-xz^4", 4)])
def test_dprime(text, dprime):
    f = parse_poly(text)
    syz = jacobian_syzygies(f)
    dp = dprime_search(f, syz, bourbaki_ideal(f, syz), seed=3)
    assert dp.d_prime == dprime
    assert dp.certificate_seed is not None
    assert JacobianData(f).tau() >= dp.bound
