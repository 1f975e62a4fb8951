"""Bourbaki ideals of non-free curves.

Fix a syzygy r1 of minimal degree.  For any r in AR(f) the determinant
Delta(r) = det[(x, y, z); r1; r] is divisible by f, and v(r) = Delta(r)/f is
S-linear in r with v(r1) = 0.  The images of the remaining minimal generators
span the Bourbaki ideal B(C, r1).
"""

import random
from dataclasses import dataclass

from gmpy2 import mpq

from .groebner import ModVec, ideal, krull_dimension, syzygies
from .poly import Poly, det3, monomials_of_degree
from .resolution import jacobian, minimalize


def koszul_syzygies(f):
    """(k^x, k^y, k^z) = ((0, f_z, -f_y), (-f_z, 0, f_x), (f_y, -f_x, 0))."""
    fx, fy, fz = jacobian(f)
    sh = (f.degree - 1,) * 3
    zero = Poly()
    return (ModVec([zero, fz, -fy], sh), ModVec([-fz, zero, fx], sh), ModVec([fy, -fx, zero], sh))


def bourbaki_map(r, r1, f):
    """v(r) = det[(x, y, z); r1; r] / f; raises ValueError if f does not divide."""
    delta = det3(tuple(r1), tuple(r))
    q, rem = delta.divmod(f)
    if not rem.is_zero():
        raise ValueError("determinant not divisible by f: r or r1 is not a Jacobian syzygy")
    return q


def coprime(p, q):
    """Homogeneous forms in three variables share no factor iff dim S/(p, q) <= 1."""
    return krull_dimension(ideal([p, q])) <= 1


@dataclass(frozen=True)
class BourbakiData:
    r1: ModVec
    generators: tuple
    gen_degrees: tuple
    ideal: object
    degree: int
    is_complete_intersection: bool
    minimal_generators: int


def bourbaki_ideal(f, syz):
    d = f.degree
    if len(syz) < 3:
        raise ValueError("Bourbaki ideal needs a non-free curve (m >= 3)")
    r1 = syz.generators[0]
    d1 = syz.degrees[0]
    gens = tuple(bourbaki_map(r, r1, f) for r in syz.generators[1:])
    degs = tuple(dj + d1 - d + 1 for dj in syz.degrees[1:])
    for g, k in zip(gens, degs):
        if g.is_zero() or g.degree != k:
            raise AssertionError("Bourbaki generator has the wrong degree")
    B = ideal(gens)
    nmin = len(minimalize([ModVec([g]) for g in gens]))
    ci = nmin == 2 and krull_dimension(B) <= 1
    return BourbakiData(r1, gens, degs, B, B.degree(), ci, nmin)


def subideal_degree(polys):
    """(is_complete_intersection, degree) for the ideal of two forms, degree None if not 0-dim."""
    I = ideal(polys)
    if krull_dimension(I) > 1:
        return False, None
    return len(polys) == 2, I.degree()


def exact_sequence_defect(f, syz, bd, jac, kmax=None):
    """Degrees k where dim AR(f)_k != dim S_(k-d1) + dim B_(k+d1-d+1); empty when exact."""
    d = f.degree
    d1 = syz.degrees[0]
    kmax = 2 * d if kmax is None else kmax

    def n(k):
        return (k + 2) * (k + 1) // 2 if k >= 0 else 0

    bad = []
    for k in range(kmax + 1):
        j = k + d - 1
        ar = 3 * n(k) - (n(j) - jac.graded_dimension(j))
        kb = k + d1 - d + 1
        b = n(kb) - bd.ideal.graded_dimension(kb) if kb >= 0 else 0
        if ar != n(k - d1) + b:
            bad.append(k)
    return bad


@dataclass(frozen=True)
class RelationData:
    h: tuple
    degrees: tuple
    alpha: object
    alpha_consistent: bool
    pairwise_coprime: bool


def _proportion(p, q):
    """alpha with p == alpha * q, or None."""
    if q.is_zero():
        return None if not p.is_zero() else mpq(0)
    lm = q.leading_monomial()
    alpha = p.coefficient(lm) / q.coefficient(lm)
    return alpha if p == q * alpha else None


def unique_relation(f, syz, bd=None):
    """The generator (h1, h2, h3) of the relations among r1, r2, r3 of a 3-syzygy curve."""
    if len(syz) != 3:
        raise ValueError(f"unique relation needs a 3-syzygy curve, got m={len(syz)}")
    rel = minimalize(syzygies(list(syz.generators)))
    if len(rel) != 1:
        raise ValueError("relations among the generators are not cyclic")
    h = tuple(rel[0].components)
    lc = h[0].leading_coefficient()
    h = tuple(p / lc for p in h)
    combo = [Poly()] * 3
    for c, r in zip(h, syz.generators):
        combo = [a + c * b for a, b in zip(combo, r.components)]
    if any(not p.is_zero() for p in combo):
        raise AssertionError("relation does not vanish")
    if bd is None:
        bd = bourbaki_ideal(f, syz)
    g2, g3 = bd.generators
    a2 = _proportion(h[1], g3)
    a3 = _proportion(h[2], -g2)
    consistent = a2 is not None and a2 == a3 and a2 != 0
    cop = all(not p.is_zero() for p in h) and all(coprime(h[i], h[j]) for i, j in ((0, 1), (0, 2), (1, 2)))
    degs = tuple(p.degree for p in h)
    return RelationData(h, degs, a2 if consistent else None, consistent, cop)


def refined_bound(d, d1, d2, dprime):
    return (d - 1) * (d - d1 - 1) + d1 * d1 - (d1 - (d - 1 - d2)) * (d1 - (d - 1 - dprime))


@dataclass(frozen=True)
class DPrimeData:
    d_prime: object
    bound: object
    certificate_seed: object


def _piece(gens, k):
    """Spanning set of B_k: monomial multiples of the generators."""
    out = []
    for g in gens:
        if g.degree <= k:
            for u in monomials_of_degree(k - g.degree):
                out.append(g.mul_monomial(u))
    return out


def _certificate(g2, piece, seed, tries=8):
    # a random member of the linear system meeting g2 properly
    for s in range(seed, seed + tries):
        rng = random.Random(s)
        g = Poly()
        for p in piece:
            g = g + p * mpq(rng.randint(-50, 50), rng.randint(1, 7))
        if not g.is_zero() and coprime(g2, g):
            return s
    return None


def dprime_search(f, syz, bd, seed=0):
    """Smallest d' in [d3, min(d_m, d-1)] whose piece B_(d1+d'-d+1) has a finite base locus."""
    d = f.degree
    dl = syz.degrees
    if len(dl) < 3:
        raise ValueError("d' is defined only for m >= 3")
    d1, d2 = dl[0], dl[1]
    for dp in range(dl[2], min(dl[-1], d - 1) + 1):
        k = d1 + dp - d + 1
        piece = _piece(bd.generators, k)
        if piece and krull_dimension(ideal(piece)) <= 1:
            cert = _certificate(bd.generators[0], piece, seed)
            if cert is None:
                raise AssertionError("finite base locus but no coprime member found")
            return DPrimeData(dp, refined_bound(d, d1, d2, dp), cert)
    return DPrimeData(None, None, None)
