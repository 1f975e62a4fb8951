"""Classification of curves by their syzygies, and the audit of known identities.

Every audit check reads a finished analysis and returns ``(status, details)``
with status ``pass``, ``fail`` or ``not-applicable``.  Failures are data; a
check never raises on a well-formed analysis.
"""

from dataclasses import dataclass

SMOOTH = "smooth"
FREE = "free"
NEARLY_FREE = "nearly-free"
PLUS_ONE = "plus-one-generated"
THREE_SYZYGY = "3-syzygy"
M_SYZYGY = "m-syzygy"

PASS, FAIL, NA = "pass", "fail", "not-applicable"


class ClassificationError(AssertionError):
    """Resolution shape and exponent arithmetic disagree."""


@dataclass(frozen=True)
class Classification:
    verdict: str
    exponents: tuple
    is_plus_one: bool
    minimal_tjurina: bool
    nu2_shape: object = None

    @property
    def label(self):
        names = {SMOOTH: "Smooth", FREE: "Free", NEARLY_FREE: "NearlyFree",
                 PLUS_ONE: "PlusOneGenerated", THREE_SYZYGY: "ThreeSyzygy"}
        if self.verdict == SMOOTH:
            return "Smooth"
        args = self.exponents[:2] if self.verdict == NEARLY_FREE else self.exponents
        e = ",".join(str(x) for x in args)
        if self.verdict == M_SYZYGY:
            return f"MSyzygy({len(args)}, ({e}))"
        return f"{names[self.verdict]}({e})"


def nu2_shape(d, d_list, tau, nu):
    """Which of the two possible shapes a curve with nu = 2 has; None if nu != 2."""
    if nu != 2:
        return None
    d1 = d_list[0]
    if tuple(d_list) == (d1, d - d1, d - d1 + 1) and tau == (d - 1) ** 2 - d1 * (d - d1 - 1) - 2:
        return "plus-one"
    if len(d_list) == 4 and len(set(d_list)) == 1 and d == 2 * d1 - 1 and tau == 3 * d1 * d1 - 6 * d1 + 1:
        return "four-syzygy"
    return "neither"


def classify(res, tau, nu=None):
    d, dl, m = res.d, tuple(res.d_list), res.m
    d1 = dl[0]
    s = dl[0] + dl[1]
    # verdict from the shape of the resolution
    if m == 2:
        shape = FREE
    elif m == 3 and res.epsilons == (1,):
        shape = PLUS_ONE
    elif m == 3:
        shape = THREE_SYZYGY
    else:
        shape = M_SYZYGY
    # verdict from exponent arithmetic alone
    if s == d - 1:
        arith = FREE
    elif s == d:
        arith = PLUS_ONE
    elif s > d:
        arith = THREE_SYZYGY if m == 3 else M_SYZYGY
    else:
        raise ClassificationError(f"d1 + d2 = {s} < d - 1 = {d - 1}")
    if shape != arith:
        raise ClassificationError(f"resolution says {shape}, exponents say {arith}")
    verdict = shape
    if tau == 0:
        if verdict != THREE_SYZYGY or dl != (d - 1,) * 3:
            raise ClassificationError("smooth curve without the Koszul resolution")
        verdict = SMOOTH
    elif verdict == PLUS_ONE and dl[1] == dl[2]:
        verdict = NEARLY_FREE
    is_plus_one = verdict in (PLUS_ONE, NEARLY_FREE)
    minimal = tau == (d - 1) * (d - d1 - 1)
    return Classification(verdict, dl, is_plus_one, minimal, nu2_shape(d, dl, tau, nu))


@dataclass(frozen=True)
class DPWRecord:
    bound: int
    equality: bool
    holds: bool
    strict_bound: object
    strict_holds: object


def dpw_report(d, d1, tau, is_line_arrangement=False):
    bound = (d - 1) * (d - d1 - 1)
    strict = bound + 2 * d1 - 1 if is_line_arrangement else None
    return DPWRecord(bound, tau == bound, tau >= bound, strict, None if strict is None else tau >= strict)


# -- audit ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    details: str


def _ok(cond, details):
    return (PASS if cond else FAIL), details


def _exps(a):
    return tuple(a.res.d_list)


def _meta(a, key):
    return (a.meta or {}).get(key)


def chk_exponent_bounds(a):
    d, dl, m = a.d, _exps(a), a.res.m
    msgs = [f"m={m} <= d+1={d + 1}", f"d_m={dl[-1]} <= 2d-4={2 * d - 4}"]
    ok = m <= d + 1 and dl[-1] <= 2 * d - 4
    if m >= 3:
        ok = ok and dl[0] + dl[1] >= d and dl[2] <= d - 1
        msgs += [f"d1+d2={dl[0] + dl[1]} >= d={d}", f"d3={dl[2]} <= d-1={d - 1}"]
    return _ok(ok, "; ".join(msgs))


def chk_three_syzygy_formulas(a):
    if a.res.m != 3:
        return NA, f"needs m=3, have m={a.res.m}"
    d, (d1, d2, d3) = a.d, _exps(a)
    e = a.res.e_list[0]
    tau = (d - 1) * (d1 + d2 + d3) - (d1 * d2 + d1 * d3 + d2 * d3)
    items = [(e == d1 + d2 + d3, f"e={e} vs d1+d2+d3={d1 + d2 + d3}"),
             (a.thresholds.st == d1 + d2 + d3 - 2, f"st={a.thresholds.st} vs {d1 + d2 + d3 - 2}"),
             (a.tau == tau, f"tau={a.tau} vs {tau}")]
    if a.tau == 0:
        items.append((True, "ct skipped: smooth curve agrees with itself in all degrees"))
    else:
        items.append((a.thresholds.ct == d - 2 + d1, f"ct={a.thresholds.ct} vs d-2+d1={d - 2 + d1}"))
    return _ok(all(c for c, _ in items), "; ".join(t for _, t in items))


def chk_epsilon(a):
    eps = a.res.epsilons
    d, dl = a.d, _exps(a)
    target = dl[0] + dl[1] - (d - 1)
    return _ok(all(x >= 1 for x in eps) and sum(eps) == target, f"epsilons={list(eps)}, sum should be {target}")


def chk_duality(a):
    T, n = a.thresholds.T, a.N
    bad = [k for k in range(T + 1) if n[k] != n[T - k]]
    bad += [k for k in range(T + 1, len(n.values)) if n[k] != 0]
    return _ok(not bad, f"T={T}" + (f"; asymmetric at {bad}" if bad else ""))


def chk_unimodality(a):
    T, n = a.thresholds.T, a.N
    half = T // 2
    up = all(n[k] <= n[k + 1] for k in range(half))
    down = all(n[k] >= n[k + 1] for k in range(half, T))
    return _ok(up and down, f"values up to T: {[n[k] for k in range(T + 1)]}")


def chk_nu_formula(a):
    if a.res.m != 3 or a.tau == 0:
        return NA, "needs a singular 3-syzygy curve"
    d, (d1, d2, d3) = a.d, _exps(a)
    if 2 * d1 > d:
        return NA, f"needs d1 <= d/2, have d1={d1}, d={d}"
    want = (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3))
    items = [(a.nu == want, f"nu={a.nu} vs {want}")]
    if a.classification.is_plus_one:
        th = a.thresholds
        items.append((a.nu == d3 - d2 + 1 <= d1, f"nu = d3-d2+1 = {d3 - d2 + 1} <= d1 = {d1}"))
        items.append((th.ct + th.st == th.T + a.nu + 1, f"ct+st={th.ct + th.st} vs T+nu+1={th.T + a.nu + 1}"))
    return _ok(all(c for c, _ in items), "; ".join(t for _, t in items))


def chk_sigma_formula(a):
    if a.res.m == 2:
        return _ok(a.sigma is None, "free curve: N(f)=0, sigma absent")
    want = 3 * (a.d - 1) - max(a.res.e_list)
    return _ok(a.sigma == want, f"sigma={a.sigma} vs 3(d-1)-e_max={want}")


def _hs_pattern(n, T):
    """(k3, k2) when n has the plus-one shape, else None."""
    k3 = next((k for k in range(T + 1) if n[k]), None)
    if k3 is None or k3 == 0 or k3 > T / 2:
        return None
    k = k3
    while k + 1 <= T / 2 and n[k + 1] == k + 1 - k3 + 1:
        k += 1
    k2 = k
    level = k2 - k3 + 1
    if any(n[j] != level for j in range(k2, T // 2 + 1)):
        return None
    return k3, k2


def chk_plus_one_hilbert_pattern(a):
    if a.res.m == 2 or a.tau == 0:
        return NA, "needs a singular non-free curve"
    n, T, d = a.N, a.thresholds.T, a.d
    pattern = _hs_pattern(n, T)
    if not a.classification.is_plus_one:
        return _ok(pattern is None, "not plus-one and N(f) does not have the plus-one shape"
                   if pattern is None else f"N(f) has the plus-one shape {pattern} but curve is not plus-one")
    d1, d2, d3 = _exps(a)
    k2, k3 = 2 * d - d2 - 3, 2 * d - d3 - 3
    want = [0 if k < k3 else (k - k3 + 1 if k <= k2 else d3 - d2 + 1) for k in range(T // 2 + 1)]
    have = [n[k] for k in range(T // 2 + 1)]
    ok = want == have and a.sigma == k3 and k2 == d + d1 - 3 and k2 <= T / 2
    return _ok(ok, f"k3={k3}, k2={k2}; expected {want}, have {have}")


def chk_nu2_dichotomy(a):
    if a.nu != 2:
        return NA, f"nu={a.nu}"
    shape = a.classification.nu2_shape
    return _ok(shape in ("plus-one", "four-syzygy"), f"shape={shape}, exponents={list(_exps(a))}, tau={a.tau}")


def chk_free_nu(a):
    v = a.classification.verdict
    items = [((v == FREE) == (a.nu == 0), f"free={v == FREE}, nu={a.nu}"),
             ((v == NEARLY_FREE) == (a.nu == 1), f"nearly free={v == NEARLY_FREE}")]
    if v == NEARLY_FREE:
        th = a.thresholds
        items.append((th.ct + th.st == th.T + 2, f"ct+st={th.ct + th.st} vs T+2={th.T + 2}"))
    return _ok(all(c for c, _ in items), "; ".join(t for _, t in items))


def _needs_bourbaki(a):
    if a.res.m < 3 or a.bourbaki is None:
        return NA, "needs a non-free curve"
    return None


def chk_bourbaki_degree(a):
    skip = _needs_bourbaki(a)
    if skip:
        return skip
    d, d1 = a.d, _exps(a)[0]
    want = (d - 1) ** 2 - d1 * (d - d1 - 1) - a.tau
    return _ok(a.bourbaki.degree == want, f"deg B={a.bourbaki.degree} vs (d-1)^2-d1(d-d1-1)-tau={want}")


def chk_bourbaki_sequence(a):
    skip = _needs_bourbaki(a)
    if skip:
        return skip
    return _ok(not a.sequence_defect, "graded dimensions agree for k=0..2d" if not a.sequence_defect
               else f"mismatch at k={a.sequence_defect}")


def chk_complete_intersection(a):
    skip = _needs_bourbaki(a)
    if skip:
        return skip
    bd = a.bourbaki
    ok = bd.is_complete_intersection == (a.res.m == 3)
    if bd.is_complete_intersection:
        g = bd.gen_degrees
        ok = ok and bd.degree == g[0] * g[1]
    return _ok(ok, f"CI={bd.is_complete_intersection}, m={a.res.m}, minimal generators={bd.minimal_generators}")


def chk_tau_formulas(a):
    if a.res.m != 3:
        return NA, f"needs m=3, have m={a.res.m}"
    d, (d1, d2, d3) = a.d, _exps(a)
    t1 = (d - 1) ** 2 - d1 * (d - d1 - 1) - (d3 - d2 + 1) - (d1 + d2 - d) * (d1 + d3 - d + 2)
    t2 = (d - 1) * (d - d1 - 1) + d1 * d1 - (d1 - (d - 1 - d2)) * (d1 - (d - 1 - d3))
    cap = (d - 1) ** 2 - d1 * (d - d1 - 1) - (d3 - d2 + 1)
    ok = a.tau == t1 == t2 and a.tau <= cap and (a.tau == cap) == a.classification.is_plus_one
    return _ok(ok, f"tau={a.tau}, formulas {t1}, {t2}; cap {cap}, plus-one={a.classification.is_plus_one}")


def chk_ci_bound(a):
    skip = _needs_bourbaki(a)
    if skip:
        return skip
    if not a.subideal_ci:
        return NA, "(g2, g3) share a factor for this choice of generators"
    d, (d1, d2, d3) = a.d, _exps(a)[:3]
    from .bourbaki import refined_bound

    bound = refined_bound(d, d1, d2, d3)
    ok = a.tau >= bound and (a.tau == bound) == (a.res.m == 3)
    return _ok(ok, f"tau={a.tau} >= {bound}; equality={a.tau == bound}, m={a.res.m}")


def chk_refined_bound(a):
    skip = _needs_bourbaki(a)
    if skip:
        return skip
    dp = a.dprime
    if dp is None or dp.d_prime is None:
        return FAIL, "no admissible d' found"
    ok = a.tau >= dp.bound and (a.tau == dp.bound) == (a.res.m == 3)
    if a.res.m == 3:
        ok = ok and dp.d_prime == _exps(a)[2]
    return _ok(ok, f"d'={dp.d_prime}, bound={dp.bound}, tau={a.tau}")


def chk_relation_coefficients(a):
    if a.res.m != 3 or a.relation is None:
        return NA, "needs m=3"
    r = a.relation
    return _ok(r.alpha_consistent, f"h2 = alpha g3 and h3 = -alpha g2 with alpha={r.alpha}")


def chk_unique_relation(a):
    if a.res.m != 3 or a.relation is None:
        return NA, "needs m=3"
    d, (d1, d2, d3) = a.d, _exps(a)
    want = (d2 + d3 - d + 1, d1 + d3 - d + 1, d1 + d2 - d + 1)
    r = a.relation
    ok = r.degrees == want and r.pairwise_coprime
    return _ok(ok, f"degrees {r.degrees} vs {want}; pairwise coprime={r.pairwise_coprime}")


def chk_rational_bound(a):
    if not _meta(a, "all_components_rational"):
        return NA, "rationality not asserted"
    return _ok(_exps(a)[-1] <= a.d - 1, f"d_m={_exps(a)[-1]} <= d-1={a.d - 1}")


def chk_rational_three_syzygy(a):
    if not _meta(a, "all_components_rational"):
        return NA, "rationality not asserted"
    if a.res.m != 3 or a.classification.is_plus_one:
        return NA, "needs a 3-syzygy curve that is not plus-one"
    return _ok(_exps(a)[2] <= a.d - 2, f"d3={_exps(a)[2]} <= d-2={a.d - 2}")


def resolution_hilbert(d, d_list, e_list, k):
    """Hilbert function of S/J_f read from the resolution shifts (polynomial binomials)."""

    def b(n):
        return (n + 2) * (n + 1) // 2

    return b(k) - 3 * b(k - d + 1) + sum(b(k - d - dj + 1) for dj in d_list) - sum(b(k - e) for e in e_list)


def chk_hilbert_tail(a):
    if a.res.m != 3:
        return NA, f"needs m=3, have m={a.res.m}"
    e = a.res.e_list[0]
    ks = range(e - 2, e + 4)
    bad = [k for k in ks if a.M[k] != resolution_hilbert(a.d, _exps(a), a.res.e_list, k)]
    return _ok(not bad, f"k in [{e - 2}, {e + 3}]" + (f"; mismatch at {bad}" if bad else ""))


def chk_dpw(a):
    d, dl, m = a.d, _exps(a), a.res.m
    rec = a.dpw
    items = [(rec.holds, f"tau={a.tau} >= {rec.bound}")]
    if rec.strict_bound is not None:
        items.append((rec.strict_holds, f"line arrangement: tau >= {rec.strict_bound}"))
    if m >= 3:
        items.append((rec.equality == (m == 3 and dl[1] == dl[2] == d - 1),
                      f"equality={rec.equality} iff 3-syzygy with d2=d3=d-1"))
    return _ok(all(c for c, _ in items), "; ".join(t for _, t in items))


CHECKS = {
    "CHK-exponent-bounds": chk_exponent_bounds,
    "CHK-three-syzygy-formulas": chk_three_syzygy_formulas,
    "CHK-epsilon": chk_epsilon,
    "CHK-duality": chk_duality,
    "CHK-unimodality": chk_unimodality,
    "CHK-nu-formula": chk_nu_formula,
    "CHK-sigma-formula": chk_sigma_formula,
    "CHK-plus-one-hilbert-pattern": chk_plus_one_hilbert_pattern,
    "CHK-nu2-dichotomy": chk_nu2_dichotomy,
    "CHK-free-nu": chk_free_nu,
    "CHK-bourbaki-degree": chk_bourbaki_degree,
    "CHK-bourbaki-sequence": chk_bourbaki_sequence,
    "CHK-complete-intersection": chk_complete_intersection,
    "CHK-tau-formulas": chk_tau_formulas,
    "CHK-ci-bound": chk_ci_bound,
    "CHK-refined-bound": chk_refined_bound,
    "CHK-relation-coefficients": chk_relation_coefficients,
    "CHK-unique-relation": chk_unique_relation,
    "CHK-rational-bound": chk_rational_bound,
    "CHK-rational-three-syzygy": chk_rational_three_syzygy,
    "CHK-hilbert-tail": chk_hilbert_tail,
    "CHK-dpw": chk_dpw,
}


def run_check(check_id, analysis):
    try:
        status, details = CHECKS[check_id](analysis)
    except Exception as exc:  # a check that cannot run is a failed check
        status, details = FAIL, f"check raised {type(exc).__name__}: {exc}"
    return Check(check_id, status, details)


def audit(analysis):
    return [run_check(cid, analysis) for cid in CHECKS]


def failures(report):
    return [c for c in report if c.status == FAIL]
