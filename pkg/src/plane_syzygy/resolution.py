"""Minimal graded free resolution of the Milnor algebra S/J_f.

The resolution has the shape

    0 -> (+) S(-e_i) -> (+) S(1-d-d_j) -> S^3(1-d) -> S

and is computed by iterated syzygies followed by minimalization.  Only the
degrees are canonical; the generator vectors depend on choices.
"""

import random
from dataclasses import dataclass, field

import sympy

from .groebner import FreeModule, ModVec, SubmoduleGB, _Engine, _vec_to_dict, ideal, krull_dimension, syzygies
from .poly import Poly


class CurveInputError(ValueError):
    """The polynomial does not define an admissible plane curve."""


def minimalize(gens):
    """Minimal generating subset of a graded submodule, ascending by degree.

    ``gens`` is a SubmoduleGB (its reduced basis is used) or a list of
    homogeneous ModVecs sharing the same shifts.
    """
    vecs = gens.reduced_basis if isinstance(gens, SubmoduleGB) else list(gens)
    vecs = [v for v in vecs if not v.is_zero()]
    if not vecs:
        return []
    module = FreeModule(vecs[0].shifts)
    eng = _Engine(module)
    kept = []
    order = sorted(range(len(vecs)), key=lambda i: (vecs[i].degree, i))
    for i in order:
        v = vecs[i]
        eng.run(v.degree)
        r = eng.reduce(_vec_to_dict(module, v))
        if r:
            kept.append(v)
            eng.add_generator(_vec_to_dict(module, v))
    return kept


@dataclass(frozen=True)
class SyzygyBasis:
    generators: tuple
    degrees: tuple

    @property
    def mdr(self):
        return self.degrees[0]

    def __len__(self):
        return len(self.generators)


@dataclass(frozen=True)
class ResolutionData:
    d: int
    d_list: tuple
    e_list: tuple
    syzygies: SyzygyBasis
    second: tuple = field(repr=False)   # columns of F3 -> F2, as ModVecs of length m

    @property
    def m(self):
        return len(self.d_list)

    @property
    def epsilons(self):
        return tuple(e - (self.d + self.d_list[j + 2] - 1) for j, e in enumerate(self.e_list))

    @property
    def f2_shifts(self):
        return tuple(self.d + dj - 1 for dj in self.d_list)

    def matrices(self):
        """The maps F2 -> F1 (3 x m) and F3 -> F2 (m x (m-2)) as nested lists."""
        a1 = [[r[i] for r in self.syzygies.generators] for i in range(3)]
        a2 = [[s[j] for s in self.second] for j in range(self.m)]
        return a1, a2


def jacobian(f):
    return [f.diff(0), f.diff(1), f.diff(2)]


def check_curve(f):
    """Raise CurveInputError unless ``f`` is a reduced homogeneous form of degree >= 3."""
    if not isinstance(f, Poly):
        raise TypeError("expected a Poly")
    if f.is_zero():
        raise CurveInputError("the zero polynomial does not define a curve")
    if not f.is_homogeneous():
        raise CurveInputError("polynomial is not homogeneous")
    if f.degree < 3:
        raise CurveInputError(f"degree {f.degree} < 3")
    if krull_dimension(ideal(jacobian(f))) > 1:
        raise CurveInputError("polynomial is not reduced (singular locus is not finite)")


def _sorted_by_degree(vecs):
    return sorted(vecs, key=lambda v: v.degree)


def jacobian_syzygies(f, _checked=False):
    """Minimal generators r_1..r_m of AR(f), sorted by degree."""
    if not _checked:
        check_curve(f)
    d = f.degree
    J = jacobian(f)
    gens = _sorted_by_degree(minimalize(syzygies(J)))
    for r in gens:
        if r.dot(J):
            raise AssertionError("syzygy engine produced a non-syzygy")
    return SyzygyBasis(tuple(gens), tuple(r.degree - (d - 1) for r in gens))


def _generic_rank(rows, point):
    def val(p):
        v = p.evaluate(point)
        return sympy.Rational(int(v.numerator), int(v.denominator))

    return sympy.Matrix([[val(p) for p in row] for row in rows]).rank()


def minimal_resolution(f, seed=0):
    """Minimal free resolution of S/J_f with its exactness verified."""
    check_curve(f)
    d = f.degree
    J = jacobian(f)
    syz = jacobian_syzygies(f, _checked=True)
    m = len(syz)
    second = _sorted_by_degree(minimalize(syzygies(list(syz.generators))))
    e_list = tuple(s.degree for s in second)
    if second:
        third = syzygies(second)
        if len(third):
            raise AssertionError("third syzygy module is not zero")
    for s in second:
        combo = [Poly()] * 3
        for c, r in zip(s.components, syz.generators):
            combo = [a + c * b for a, b in zip(combo, r.components)]
        if any(not p.is_zero() for p in combo):
            raise AssertionError("composite F3 -> F1 is not zero")

    res = ResolutionData(d, syz.degrees, e_list, syz, tuple(second))
    _verify(res, J, seed)
    return res


def _verify(res, J, seed):
    m = res.m
    if len(res.e_list) != m - 2:
        raise AssertionError(f"rank mismatch: m={m} but {len(res.e_list)} relations")
    # minimality: no nonzero constant in F3 -> F2; F2 -> F1 whenever d_1 > 0
    for s in res.second:
        if any(c.is_constant() and not c.is_zero() for c in s.components):
            raise AssertionError("F3 -> F2 has a constant entry")
    if res.d_list[0] > 0:
        for r in res.syzygies.generators:
            if any(c.is_constant() and not c.is_zero() for c in r.components):
                raise AssertionError("F2 -> F1 has a constant entry")
    rng = random.Random(seed)
    point = tuple(rng.randint(-97, 97) for _ in range(3))
    a1, a2 = res.matrices()
    if _generic_rank([J], point) != 1 or _generic_rank(a1, point) != 2:
        raise AssertionError("resolution is not exact (F2 -> F1 rank)")
    if m > 2 and _generic_rank(a2, point) != m - 2:
        raise AssertionError("resolution is not exact (F3 -> F2 rank)")
