"""Built-in curve corpus with expected invariants, and parameterized families."""

import json
from dataclasses import dataclass, field

from .poly import Poly, X, Y, Z, parse_poly

RATIONAL = "all_components_rational"
LINES = "line_arrangement"
CUSPIDAL = "nearly_cuspidal"


@dataclass(frozen=True)
class CurveRecord:
    name: str
    f_text: str
    meta: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    stress: bool = False

    def poly(self):
        return parse_poly(self.f_text)

    def to_dict(self):
        out = {"name": self.name, "f": self.f_text}
        if self.meta:
            out["meta"] = dict(self.meta)
        if self.expected:
            out["expected"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.expected.items()}
        return out


def record_from_dict(obj):
    if not isinstance(obj, dict):
        raise ValueError("curve record must be a JSON object")
    text = obj.get("f", obj.get("f_text"))
    if not isinstance(text, str):
        raise ValueError("curve record needs a string field 'f'")
    name = obj.get("name", "")
    meta = obj.get("meta") or {}
    expected = obj.get("expected") or {}
    if not isinstance(meta, dict) or not isinstance(expected, dict):
        raise ValueError("'meta' and 'expected' must be objects")
    expected = {k: (tuple(v) if isinstance(v, list) else v) for k, v in expected.items()}
    return CurveRecord(str(name), text, dict(meta), expected)


def load_records(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise ValueError("input must be a JSON array of curve records")
    return [record_from_dict(x) for x in data]


# -- families --------------------------------------------------------------


def _linear_forms(count):
    forms = [X, Y, X + Y, X - Y]
    c = 2
    while len(forms) < count:
        forms.append(X + Y * c)
        forms.append(X - Y * c)
        c += 1
    return forms[:count]


def thom_sebastiani(multiplicities):
    """g(x, y) + z^d with g a product of distinct linear forms to the given powers."""
    ks = [int(k) for k in multiplicities]
    m = len(ks)
    if m < 2 or min(ks) < 1:
        raise ValueError("need at least two factors with positive multiplicities")
    if max(ks) < 2:
        raise ValueError("all multiplicities 1 gives a smooth curve; need a repeated factor")
    d = sum(ks)
    if d < 3:
        raise ValueError("degree must be at least 3")
    g = Poly.const(1)
    for ell, k in zip(_linear_forms(m), ks):
        g = g * ell ** k
    f = g + Z ** d
    name = "thom-sebastiani-" + "-".join(str(k) for k in ks)
    expected = {
        "exponents": (m - 1, d - 1, d - 1),
        "tau": (d - 1) * (d - m),
        "nu": (m - 1) ** 2,
        "ct": d + m - 3,
        "st": 2 * d + m - 5,
        "minimal_tjurina": True,
    }
    # d1 + d2 = d + m - 2, and d2 = d3
    expected["verdict"] = "nearly-free" if m == 2 else "3-syzygy"
    return CurveRecord(name, str(f), {}, expected)


def two_branch(k):
    """x^d + (x^2 + y^2)^k z with d = 2k + 1."""
    k = int(k)
    if k < 2:
        raise ValueError("two-branch family needs k >= 2")
    d = 2 * k + 1
    expected = {
        "exponents": (2, d - 2, d - 1),
        "tau": d * d - 4 * d + 5,
        "sigma": d - 2,
        "nu": 2,
        "verdict": "plus-one-generated",
        "n_values": {str(d - 2): 1, str(2 * d - 4): 1},
    }
    return CurveRecord(f"two-branch-k{k}", f"x^{d}+(x^2+y^2)^{k}z", {RATIONAL: True}, expected)


def large_nu(n):
    """x^(2n+1) + (x^n + y^n)^2 z: plus-one generated with nu = n."""
    n = int(n)
    if n < 3:
        raise ValueError("large-nu family needs n >= 3")
    d = 2 * n + 1
    ex = (n, n + 1, 2 * n)
    tau = (d - 1) * sum(ex) - (ex[0] * ex[1] + ex[0] * ex[2] + ex[1] * ex[2])
    expected = {"exponents": ex, "nu": n, "tau": tau, "verdict": "plus-one-generated"}
    return CurveRecord(f"large-nu-{n}", f"x^{d}+(x^{n}+y^{n})^2z", {RATIONAL: True}, expected)


def nearly_cuspidal(r):
    """x^(r-1) y^(r-1) z + x^d + y^d with d = 2r - 1."""
    r = int(r)
    if r < 3:
        raise ValueError("nearly-cuspidal family needs r >= 3")
    d = 2 * r - 1
    expected = {
        "exponents": (r, r, r, r),
        "tau": 3 * r * r - 6 * r + 1,
        "nu": 2,
        "verdict": "m-syzygy",
        "nu2_shape": "four-syzygy",
    }
    text = f"x^{r - 1}y^{r - 1}z+x^{d}+y^{d}"
    return CurveRecord(f"nearly-cuspidal-r{r}", text, {RATIONAL: True, CUSPIDAL: True}, expected)


FAMILIES = {
    "thom-sebastiani": (thom_sebastiani, "multiplicities"),
    "two-branch": (two_branch, "k"),
    "large-nu": (large_nu, "n"),
    "nearly-cuspidal": (nearly_cuspidal, "r"),
}


def family(name, **params):
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    fn, key = FAMILIES[name]
    if key not in params:
        raise ValueError(f"family {name} needs parameter {key}")
    return fn(params[key])


# -- corpus ----------------------------------------------------------------


def _rec(name, text, meta=None, **expected):
    return CurveRecord(name, text, meta or {}, expected)


def _fermat_plus_line(d):
    return _rec(f"fermat-plus-line-d{d}", f"x(x^{d - 1}+y^{d - 1}+z^{d - 1})", {RATIONAL: d == 3},
                exponents=(d - 2, d - 1, d - 1), tau=d - 1, minimal_tjurina=True)


def _tangent_line(d, verdict, exponents):
    return _rec(f"tangent-line-d{d}", f"x(x^{d - 1}+xy^{d - 2}+z^{d - 1})", {RATIONAL: d == 3},
                exponents=exponents, tau=2 * d - 3, verdict=verdict)


def corpus(include_stress=False):
    recs = [
        _rec("nodal-cubic", "xyz+x^3+y^3", {RATIONAL: True},
             exponents=(2, 2, 2, 2), tau=1, nu=2, nu2_shape="four-syzygy"),
        _rec("seven-lines", "xyz(x+y-2z)(x-3y+z)(-5x+y+z)(x+y+z)", {RATIONAL: True, LINES: True},
             exponents=(4, 4, 4), tau=24, verdict="3-syzygy"),
        _rec("quartic-a5", "(y^2-xz)^2+y^2z^2+z^4", {RATIONAL: True},
             exponents=(2, 2, 3), tau=5, verdict="plus-one-generated"),
        _rec("double-folium", "(x^2+y^2)^2-4xy^2z", {RATIONAL: True},
             exponents=(2, 2, 3), tau=5, verdict="plus-one-generated"),
        _rec("limacon", "(x^2+y^2-2xz)^2-(x^2+y^2)z^2", {RATIONAL: True},
             exponents=(2, 2, 3), tau=5, verdict="plus-one-generated"),
        _rec("bolza", "x^5-y^2z^3-xz^4", {RATIONAL: False},
             exponents=(2, 4, 4), tau=8, ct=5, st=8, verdict="3-syzygy"),
        _rec("butterfly", "x^6+y^6-x^2z^4", {RATIONAL: False},
             exponents=(4, 5, 5), tau=5, verdict="3-syzygy"),
        _rec("sextic-genus-one", "(x^2+y^2)^3-4x^2y^2z^2", {RATIONAL: False},
             exponents=(3, 4, 4, 4), e_list=(10, 10), tau=16, nu=3, bourbaki_degree=3, d_prime=4),
        _rec("five-lines-generic", "xyz(x-2y-3z)(x+y+z)", {RATIONAL: True, LINES: True},
             exponents=(3, 3, 3, 3), tau=10, nu=2, nu2_shape="four-syzygy"),
        _rec("seven-lines-a", "xyz(x-z)(y-z)(x+y)(x+y+z)", {RATIONAL: True, LINES: True},
             exponents=(4, 4, 4, 4), tau=25, nu=2, nu2_shape="four-syzygy"),
        _rec("nine-lines", "xyz(x-z)(y-z)(x+y)(x+y+z)(x-y)(x-y-z)", {RATIONAL: True, LINES: True},
             exponents=(5, 5, 5, 5), tau=46, nu=2, nu2_shape="four-syzygy"),
        _rec("seven-lines-b", "xyz(x+y+z)(x+z)(y+z)(x-y+2z)", {RATIONAL: True, LINES: True},
             exponents=(3, 4, 5), tau=25, nu=2, verdict="plus-one-generated", nu2_shape="plus-one"),
        _rec("line-plus-quartic", "(x+y)(x^4-x^3y+x^2y^2-xy^3+y^4+x^3z-x^2yz+xy^2z)", {},
             exponents=(3, 3, 3, 3), tau=10, nu=2, nu2_shape="four-syzygy"),
        _rec("cuspidal-quintic", "z(x^2+y^2+xy)^2+x^5+y^5", {RATIONAL: True, CUSPIDAL: True},
             exponents=(3, 3, 3, 3), tau=10, nu=2, nu2_shape="four-syzygy"),
        _rec("cuspidal-nonic", "z(x^2+y^2+xy)^4+x^9+y^9", {RATIONAL: True, CUSPIDAL: True},
             exponents=(5, 5, 5, 5), tau=46, nu=2, nu2_shape="four-syzygy"),
        large_nu(3),
        _fermat_plus_line(4),
        _fermat_plus_line(5),
        _fermat_plus_line(6),
        _tangent_line(3, "free", (1, 1)),
        _tangent_line(4, "plus-one-generated", (2, 2, 3)),
        _tangent_line(5, "3-syzygy", (3, 3, 4)),
        _rec("line-plus-bitangent", "x(x^4+xy^3+xz^3+y^2z^2)", {},
             exponents=(3, 4, 4, 4), tau=6, bourbaki_degree=7, verdict="m-syzygy"),
        two_branch(2),
        two_branch(3),
        thom_sebastiani((2, 2)),
        thom_sebastiani((2, 2, 1)),
        nearly_cuspidal(3),
    ]
    if include_stress:
        recs.append(CurveRecord("degree-12-rational", "(x^2+y^2)^6-3(x^11+y^11)z", {RATIONAL: True},
                                {"exponents": (6, 7, 8, 10)}, stress=True))
    return recs


def compare_expected(analysis, expected):
    """List of (key, expected, actual) for every mismatching expectation."""
    a = analysis
    actual = {
        "tau": a.tau,
        "exponents": tuple(a.res.d_list),
        "e_list": tuple(a.res.e_list),
        "m": a.res.m,
        "nu": a.nu,
        "sigma": a.sigma,
        "ct": a.thresholds.ct,
        "st": a.thresholds.st,
        "verdict": a.classification.verdict,
        "nu2_shape": a.classification.nu2_shape,
        "minimal_tjurina": a.classification.minimal_tjurina,
        "bourbaki_degree": a.bourbaki.degree if a.bourbaki else None,
        "d_prime": a.dprime.d_prime if a.dprime else None,
    }
    bad = []
    for key, want in expected.items():
        if key == "n_values":
            for k, v in want.items():
                if a.N[int(k)] != v:
                    bad.append((f"n_{k}", v, a.N[int(k)]))
            continue
        if key not in actual:
            bad.append((key, want, "unknown expectation key"))
            continue
        got = actual[key]
        if isinstance(want, list):
            want = tuple(want)
        if got != want:
            bad.append((key, want, got))
    return bad
