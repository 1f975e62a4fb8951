from hypothesis import strategies as st

from plane_syzygy.poly import Poly, monomials_of_degree


@st.composite
def homogeneous(draw, degree=None, max_degree=4, max_terms=5, coeff=5):
    k = draw(st.integers(0, max_degree)) if degree is None else degree
    mons = monomials_of_degree(k)
    chosen = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=max_terms, unique=True))
    cs = draw(st.lists(st.integers(-coeff, coeff).filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return Poly(dict(zip(chosen, cs)))


@st.composite
def polys(draw, max_degree=3, max_terms=6, coeff=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        a, b, c = (draw(st.integers(0, max_degree)) for _ in range(3))
        terms[(a, b, c)] = draw(st.integers(-coeff, coeff))
    return Poly(terms)


@st.composite
def singular_curves(draw, degrees=(4, 5), coeff=3):
    """Forms with a double point at (0:0:1): no monomial of x,y-degree below 2."""
    d = draw(st.sampled_from(degrees))
    mons = [m for m in monomials_of_degree(d) if m[0] + m[1] >= 2]
    chosen = draw(st.lists(st.sampled_from(mons), min_size=3, max_size=7, unique=True))
    cs = draw(st.lists(st.integers(-coeff, coeff).filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return Poly(dict(zip(chosen, cs)))


def is_reduced_curve(f):
    from plane_syzygy.resolution import CurveInputError, check_curve

    try:
        check_curve(f)
    except CurveInputError:
        return False
    return True


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
