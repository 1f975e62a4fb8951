"""Command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 expectation or audit failure.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import oracle
from .analysis import analyze, dumps, format_text, to_report
from .corpus import FAMILIES, compare_expected, corpus, family, load_records, record_from_dict
from .invariants import JacobianData
from .poly import PolySyntaxError, parse_poly
from .resolution import CurveInputError

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2
DEFAULT_MAX_DEGREE = 12


class InputError(Exception):
    pass


def _parse(record, max_degree):
    try:
        f = parse_poly(record.f_text)
    except PolySyntaxError as exc:
        raise InputError(f"{record.name or 'input'}: {exc.annotated()}") from None
    if f.is_zero() or not f.is_homogeneous():
        raise InputError(f"{record.name or 'input'}: polynomial is not homogeneous: {record.f_text}")
    if max_degree is not None and f.degree > max_degree:
        raise InputError(f"{record.name or 'input'}: degree {f.degree} exceeds --max-degree {max_degree}")
    return f


def _work(args):
    """Analyze one record; runs in a worker process."""
    rec_dict, run_audit = args
    rec = record_from_dict(rec_dict)
    a = analyze(parse_poly(rec.f_text), rec.name, rec.meta, run_audit=run_audit)
    return rec.name, to_report(a), compare_expected(a, rec.expected), format_text(a)


def _run_records(records, run_audit, jobs):
    tasks = [(r.to_dict(), run_audit) for r in records]
    if jobs <= 1 or len(tasks) <= 1:
        results = [_work(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_work, tasks))
    return sorted(results, key=lambda r: r[0])


def _validate(records, max_degree):
    from .resolution import check_curve

    for r in records:
        f = _parse(r, max_degree)
        try:
            check_curve(f)
        except CurveInputError as exc:
            raise InputError(f"{r.name or 'input'}: {exc}") from None


def _emit(results, fmt, out):
    if fmt == "json":
        out.write(dumps([rep for _, rep, _, _ in results]))
    else:
        for name, rep, bad, text in results:
            out.write(text + "\n")
            for key, want, got in bad:
                out.write(f"  EXPECTATION {key}: expected {want}, got {got}\n")


def _status(results, check_audit):
    code = EXIT_OK
    for name, rep, bad, _ in results:
        if bad:
            code = EXIT_FAIL
        if check_audit and any(c["status"] == "fail" for c in rep["audit"]):
            code = EXIT_FAIL
    return code


def _default_jobs():
    return max(1, min(8, os.cpu_count() or 1))


def cmd_analyze(ns, out):
    if ns.poly is not None:
        records = [record_from_dict({"name": ns.name or "", "f": ns.poly})]
    elif ns.input is not None:
        records = load_records(ns.input)
    else:
        raise InputError("analyze needs --input FILE or --poly TEXT")
    _validate(records, ns.max_degree)
    results = _run_records(records, True, ns.jobs)
    _emit(results, ns.format, out)
    return _status(results, True)


def cmd_corpus(ns, out):
    records = corpus(include_stress=ns.include_stress)
    if ns.filter:
        records = [r for r in records if ns.filter in r.name]
        if not records:
            raise InputError(f"no corpus record matches {ns.filter!r}")
    results = _run_records(records, ns.audit, ns.jobs)
    _emit(results, ns.format, out)
    code = _status(results, ns.audit)
    if ns.format == "text":
        n_bad = sum(1 for _, _, bad, _ in results if bad)
        out.write(f"{len(results)} curves, {n_bad} with expectation mismatches\n")
    return code


def _family_params(items):
    params = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"parameter {item!r} is not of the form key=value")
        key, value = item.split("=", 1)
        if key == "multiplicities":
            params[key] = [int(v) for v in value.split(",") if v]
        else:
            params[key] = int(value)
    return params


def cmd_family(ns, out):
    try:
        rec = family(ns.name, **_family_params(ns.params))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _validate([rec], ns.max_degree)
    results = _run_records([rec], True, 1)
    _emit(results, ns.format, out)
    return _status(results, True)


def cmd_oracle(ns, out):
    records = load_records(ns.input)
    _validate(records, None)
    code = EXIT_OK
    rows = []
    for r in records:
        f = parse_poly(r.f_text)
        jd = JacobianData(f, checked=True)
        K = ns.max_degree
        M = list(jd.milnor(K).values)
        N = list(jd.jacobian_module(K).values)
        oM, oN = oracle.tables(f, K)
        diff = [k for k in range(K + 1) if M[k] != oM[k] or N[k] != oN[k]]
        if diff:
            code = EXIT_FAIL
        rows.append({"name": r.name, "f": r.f_text, "max_degree": K, "agree": not diff, "mismatch_degrees": diff,
                     "engine": {"M": M, "N": N}, "oracle": {"M": oM, "N": oN}})
    out.write(json.dumps(rows, indent=2) + "\n")
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="plane-syzygy", description="Syzygies and Jacobian modules of plane curves.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze curves from a JSON file of curve records")
    a.add_argument("--input", help="JSON array of {name, f, meta, expected} records")
    a.add_argument("--poly", help="a single polynomial instead of --input")
    a.add_argument("--name", help="name for --poly")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    a.add_argument("--jobs", type=int, default=_default_jobs())
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("corpus", help="run the built-in golden corpus")
    c.add_argument("--filter", help="substring of record names")
    c.add_argument("--audit", action="store_true", help="fail on any audit check failure")
    c.add_argument("--include-stress", action="store_true", help="add the degree-12 stress curve")
    c.add_argument("--format", choices=("json", "text"), default="text")
    c.add_argument("--jobs", type=int, default=_default_jobs())
    c.set_defaults(func=cmd_corpus)

    f = sub.add_parser("family", help="generate and analyze a member of a curve family")
    f.add_argument("name", choices=sorted(FAMILIES))
    f.add_argument("--params", nargs="*", metavar="KEY=VALUE",
                   help="k=3, n=4, r=3 or multiplicities=2,2,1")
    f.add_argument("--format", choices=("json", "text"), default="json")
    f.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    f.set_defaults(func=cmd_family)

    o = sub.add_parser("oracle", help="compare Hilbert tables with the linear-algebra oracle")
    o.add_argument("--input", required=True)
    o.add_argument("--max-degree", type=int, required=True, help="compare degrees 0..K")
    o.set_defaults(func=cmd_oracle)
    return p


def run_cli(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return ns.func(ns, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run_cli())
