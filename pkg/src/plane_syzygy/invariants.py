"""Hilbert functions of M(f) = S/J_f and N(f) = I_f/J_f, and the numbers read off them."""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .groebner import ideal, saturate_max_ideal
from .resolution import check_curve, jacobian


@dataclass(frozen=True)
class HilbertTable:
    values: tuple
    eventual_value: int

    def __getitem__(self, k):
        if k < 0:
            return 0
        if k >= len(self.values):
            return self.eventual_value
        return self.values[k]

    @property
    def maximum(self):
        return max(self.values) if self.values else 0

    @property
    def initial_degree(self):
        """Smallest k with a nonzero value, or None."""
        for k, v in enumerate(self.values):
            if v:
                return k
        return None


@dataclass(frozen=True)
class Thresholds:
    ct: int
    st: int
    reg: int
    T: int


def window(d):
    return 3 * d - 4


def smooth_hilbert(d, k):
    """Coefficient of t^k in (1 - t^(d-1))^3 / (1 - t)^3."""
    total = 0
    for i in range(4):
        j = k - i * (d - 1)
        if j >= 0:
            total += (-1) ** i * comb(3, i) * comb(j + 2, 2)
    return total


class JacobianData:
    """Groebner bases of J_f and its saturation, shared by all table computations."""

    def __init__(self, f, checked=False):
        if not checked:
            check_curve(f)
        self.f = f
        self.d = f.degree
        self.J = ideal(jacobian(f))
        self._sat = None

    @property
    def saturation(self):
        if self._sat is None:
            self._sat = saturate_max_ideal(self.J)
        return self._sat

    def tau(self):
        return self.J.graded_dimension(max(self.J.stable_degree(), 0))

    def milnor(self, kmax=None):
        kmax = window(self.d) if kmax is None else kmax
        return HilbertTable(tuple(self.J.graded_dimension(k) for k in range(kmax + 1)), self.tau())

    def jacobian_module(self, kmax=None):
        kmax = window(self.d) if kmax is None else kmax
        I = self.saturation
        vals = tuple(self.J.graded_dimension(k) - I.graded_dimension(k) for k in range(kmax + 1))
        return HilbertTable(vals, 0)

    def thresholds(self):
        d = self.d
        T = 3 * d - 6
        tau = self.tau()
        # beyond this degree m(f)_k is certainly constant
        top = max(self.J.stable_degree(), T + 2)
        vals = [self.J.graded_dimension(k) for k in range(top + 1)]
        ct = None
        for k, v in enumerate(vals):
            if v != smooth_hilbert(d, k):
                ct = k - 1
                break
        if ct is None:
            ct = T + 1
        st = top
        while st > 0 and vals[st - 1] == tau:
            st -= 1
        return Thresholds(ct, st, st - 1, T)


@lru_cache(maxsize=64)
def _data(f):
    return JacobianData(f)


def tjurina_number(f):
    return _data(f).tau()


def milnor_hilbert(f, kmax=None):
    return _data(f).milnor(kmax)


def jacobian_module_hf(f, kmax=None):
    return _data(f).jacobian_module(kmax)


def thresholds(f):
    return _data(f).thresholds()


def nu(table):
    return table.maximum


def sigma(table):
    return table.initial_degree
