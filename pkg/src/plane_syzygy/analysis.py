"""Full analysis of one curve and its deterministic JSON report."""

import json
from dataclasses import dataclass, field, replace

from .bourbaki import bourbaki_ideal, coprime, dprime_search, exact_sequence_defect, subideal_degree, unique_relation
from .classify import audit, classify, dpw_report
from .invariants import JacobianData
from .poly import Poly, parse_poly
from .resolution import check_curve, minimal_resolution

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CurveAnalysis:
    name: str
    f: Poly
    d: int
    meta: dict
    res: object
    tau: int
    M: object
    N: object
    nu: int
    sigma: object
    thresholds: object
    classification: object
    dpw: object
    bourbaki: object = None
    subideal_ci: object = None
    subideal_degree: object = None
    dprime: object = None
    relation: object = None
    sequence_defect: tuple = ()
    audit: tuple = field(default=(), compare=False)

    def with_audit(self):
        return replace(self, audit=tuple(audit(self)))

    def failed_checks(self):
        return [c for c in self.audit if c.status == "fail"]


def analyze(f, name="", meta=None, run_audit=True):
    if isinstance(f, str):
        f = parse_poly(f)
    check_curve(f)
    meta = dict(meta or {})
    d = f.degree
    res = minimal_resolution(f)
    jd = JacobianData(f, checked=True)
    tau = jd.tau()
    M = jd.milnor()
    N = jd.jacobian_module()
    nu = N.maximum
    sigma = N.initial_degree
    th = jd.thresholds()
    cls = classify(res, tau, nu)
    dpw = dpw_report(d, res.d_list[0], tau, bool(meta.get("line_arrangement")))
    extra = {}
    if res.m >= 3:
        syz = res.syzygies
        bd = bourbaki_ideal(f, syz)
        g2, g3 = bd.generators[:2]
        ci = coprime(g2, g3)
        extra = dict(
            bourbaki=bd,
            subideal_ci=ci,
            subideal_degree=subideal_degree([g2, g3])[1] if ci else None,
            dprime=dprime_search(f, syz, bd),
            relation=unique_relation(f, syz, bd) if res.m == 3 else None,
            sequence_defect=tuple(exact_sequence_defect(f, syz, bd, jd.J)),
        )
    a = CurveAnalysis(name, f, d, meta, res, tau, M, N, nu, sigma, th, cls, dpw, **extra)
    return a.with_audit() if run_audit else a


def to_report(a):
    """Plain dict with a fixed field order; integers, strings, booleans and nulls only."""
    th = a.thresholds
    bd = a.bourbaki
    return {
        "schema_version": SCHEMA_VERSION,
        "curve": {"name": a.name, "f": str(a.f), "d": a.d},
        "invariants": {
            "m": a.res.m,
            "exponents": list(a.res.d_list),
            "e_list": list(a.res.e_list),
            "epsilons": list(a.res.epsilons),
            "tau": a.tau,
            "nu": a.nu,
            "sigma": a.sigma,
            "ct": th.ct,
            "st": th.st,
            "reg": th.reg,
            "T": th.T,
        },
        "hilbert": {"M": list(a.M.values), "N": list(a.N.values)},
        "classification": {
            "verdict": a.classification.verdict,
            "label": a.classification.label,
            "is_plus_one": a.classification.is_plus_one,
            "minimal_tjurina": a.classification.minimal_tjurina,
            "nu2_shape": a.classification.nu2_shape,
        },
        "bourbaki": None if bd is None else {
            "gen_degrees": list(bd.gen_degrees),
            "degree": bd.degree,
            "complete_intersection": bd.is_complete_intersection,
            "d_prime": a.dprime.d_prime,
            "refined_bound": a.dprime.bound,
            "subideal_complete_intersection": a.subideal_ci,
            "subideal_degree": a.subideal_degree,
        },
        "dpw": {"bound": a.dpw.bound, "equality": a.dpw.equality, "strict_bound": a.dpw.strict_bound},
        "audit": [{"id": c.id, "status": c.status, "details": c.details} for c in a.audit],
    }


def dumps(report):
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def format_text(a):
    r = to_report(a)
    inv = r["invariants"]
    lines = [
        f"curve {a.name or '(unnamed)'}: {r['curve']['f']}  (d={a.d})",
        f"  class      {a.classification.label}",
        f"  exponents  {inv['exponents']}   e_list {inv['e_list']}   epsilons {inv['epsilons']}",
        f"  tau={inv['tau']}  nu={inv['nu']}  sigma={inv['sigma']}  ct={inv['ct']}  st={inv['st']}  T={inv['T']}",
        f"  M(f)       {r['hilbert']['M']}",
        f"  N(f)       {r['hilbert']['N']}",
    ]
    if r["bourbaki"]:
        b = r["bourbaki"]
        lines.append(f"  Bourbaki   degrees {b['gen_degrees']}  deg {b['degree']}  CI {b['complete_intersection']}"
                     f"  d' {b['d_prime']}")
    counts = {}
    for c in a.audit:
        counts[c.status] = counts.get(c.status, 0) + 1
    lines.append("  audit      " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    for c in a.failed_checks():
        lines.append(f"  FAIL {c.id}: {c.details}")
    return "\n".join(lines)
