import pytest
from hypothesis import assume, given, settings

from plane_syzygy import oracle
from plane_syzygy.invariants import (JacobianData, jacobian_module_hf, milnor_hilbert, nu, sigma, smooth_hilbert,
                                     thresholds, tjurina_number, window)
from plane_syzygy.poly import parse_poly

from conftest import is_reduced_curve, singular_curves


@pytest.mark.parametrize("text, tau", [
    ("x^3+y^3+z^3", 0),
    ("xyz+x^3+y^3", 1),
    ("(x^2+y^2)^2-4xy^2z", 5),
    ("x^5-y^2z^3-xz^4", 8),
    ("xyz(x+y-2z)(x-3y+z)(-5x+y+z)(x+y+z)", 24),
    ("x^2y^2+z^4", 6),
])
def test_tjurina_numbers(text, tau):
    assert tjurina_number(parse_poly(text)) == tau


def test_smooth_hilbert_series():
    # (1 + t + t^2)^3 for d = 4
    assert [smooth_hilbert(4, k) for k in range(8)] == [1, 3, 6, 7, 6, 3, 1, 0]
    assert sum(smooth_hilbert(5, k) for k in range(20)) == 64


def test_smooth_curve_tables():
    f = parse_poly("x^4+y^4+z^4")
    M = milnor_hilbert(f)
    assert list(M.values) == [smooth_hilbert(4, k) for k in range(window(4) + 1)]
    # the saturation of J_f is S, so N(f) = M(f)
    N = jacobian_module_hf(f)
    assert N.values[:7] == M.values[:7]
    assert nu(N) == 7 and sigma(N) == 0
    th = thresholds(f)
    # ct never fails for a smooth curve; the sentinel is T + 1
    assert th.ct == th.T + 1 == 7
    assert th.st == 3 * 4 - 5


def test_bolza_thresholds():
    f = parse_poly("x^5-y^2z^3-xz^4")
    th = thresholds(f)
    assert (th.ct, th.st, th.reg, th.T) == (5, 8, 7, 9)
    M = milnor_hilbert(f)
    assert M[50] == 8


def test_sextic_tables():
    f = parse_poly("(x^2+y^2)^3-4x^2y^2z^2")
    N = jacobian_module_hf(f)
    assert N.maximum == 3
    T = 3 * 6 - 6
    assert [N[k] for k in range(T + 1)] == [N[T - k] for k in range(T + 1)]
    assert N[T + 1] == 0


@pytest.mark.parametrize("text", ["xyz+x^3+y^3", "x^5-y^2z^3-xz^4", "x^6+y^6-x^2z^4", "x(x^3+xy^2+z^3)"])
def test_tables_match_oracle(text):
    f = parse_poly(text)
    jd = JacobianData(f)
    K = window(f.degree)
    M, N = oracle.tables(f, K)
    assert list(jd.milnor(K).values) == M
    assert list(jd.jacobian_module(K).values) == N


@given(singular_curves(degrees=(4,)))
@settings(max_examples=12, deadline=None)
def test_random_singular_quartics_match_oracle(f):
    assume(is_reduced_curve(f))
    jd = JacobianData(f)
    M, N = oracle.tables(f, window(4))
    assert list(jd.milnor().values) == M
    assert list(jd.jacobian_module().values) == N
    assert jd.tau() >= 1


@given(singular_curves())
@settings(max_examples=20, deadline=None)
def test_jacobian_module_is_self_dual(f):
    assume(is_reduced_curve(f))
    jd = JacobianData(f)
    N = jd.jacobian_module()
    T = 3 * f.degree - 6
    assert all(N[k] == N[T - k] for k in range(T + 1))
    assert jd.milnor()[3 * f.degree] == jd.tau()
