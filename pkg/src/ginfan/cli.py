"""Command line: reproducible verification runs with JSON reports.

Exit codes: 0 all verdicts pass, 1 a mathematical check failed, 2 usage or
input error.  Every report embeds the parameters needed to rerun it; the
``results`` section is deterministic, ``timings`` are not.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import (EnumerationLimitError, GinfanError, IdealFormatError,
                     NoBasisError, PreconditionError, StabilityError)
from .family import (appendix_reduction, bound, check_separation, family_ideal,
                     omega_lambda, valid_n)
from .fan import refine
from .generic import (DEFAULT_HEIGHT, DEFAULT_SAMPLES, DEFAULT_SEED, SamplerConfig,
                      _stable, check_omega_cones, generic_degree_fan,
                      theorem_generic_experiment)
from .oracle import brute_component, default_limit
from .poly import degree_matrix, load_ideal

CHAIN_DMAX = 10


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _vertex_rows(component, strict=True):
    return [{"m": list(v.m), "omega": list(v.certificate), "strict": strict}
            for v in component.vertices]


# --------------------------------------------------------------------------
# commands; each returns (results, verdict_ok, csv_rows)


def cmd_verify_vertices(args):
    if args.dmax < 3:
        raise UsageError("--dmax must be at least 3")
    rows, ok = [], True
    for d in range(3, args.dmax + 1):
        for n in valid_n(d):
            rep = check_separation(d, n)
            sep = omega_lambda(d, n)
            ok &= rep.passed
            rows.append({"d": d, "n": n, "omega": list(sep.omega), "lambda": sep.lam,
                         "passed": rep.passed,
                         "violations": [list(v) for v in rep.violations],
                         "boundary": [list(v) for v in rep.boundary]})
    results = {"checked": len(rows), "failed": sum(not r["passed"] for r in rows),
               "cases": rows}
    flat = [{"d": r["d"], "n": r["n"], "passed": r["passed"],
             "boundary": len(r["boundary"])} for r in rows]
    return results, ok, flat


def cmd_verify_appendix(args):
    if args.dmax < 3:
        raise UsageError("--dmax must be at least 3")
    rows = []
    ok = True
    for d in range(3, args.dmax + 1):
        for n in range(d):
            ch = appendix_reduction(d, n)
            check_chain = d <= args.chain_dmax
            row = {"d": d, "n": n, "det_B": _num(ch.det_B), "det_E": _num(ch.det_E),
                   "det_B_nonzero": ch.det_B_nonzero, "unimodular_E": ch.unimodular_E,
                   "factors": [None if f is None else _num(f) for f in ch.factors],
                   "consistent": ch.consistent if check_chain else None,
                   "broken_steps": ch.broken_steps,
                   "formula_mismatches": ch.formula_mismatches}
            row["passed"] = (ch.det_B_nonzero and ch.unimodular_E
                             and (ch.consistent or not check_chain))
            ok &= row["passed"]
            rows.append(row)
    results = {
        "checked": len(rows),
        "det_B_zero": [[r["d"], r["n"]] for r in rows if not r["det_B_nonzero"]],
        "det_E_not_unimodular": [[r["d"], r["n"]] for r in rows if not r["unimodular_E"]],
        "inconsistent_chains": [[r["d"], r["n"]] for r in rows if r["consistent"] is False],
        "cases": rows,
    }
    flat = [{k: r[k] for k in ("d", "n", "det_B", "det_E", "consistent", "passed")}
            for r in rows]
    return results, ok, flat


def _config(args) -> SamplerConfig:
    return SamplerConfig(seed=args.seed, height=args.height, samples=args.samples)


def cmd_family_bound(args):
    if args.d < 3:
        raise UsageError("--d must be at least 3")
    cfg = _config(args)
    need = bound(args.d)
    try:
        res = _stable(family_ideal(args.d), args.d, cfg)
    except StabilityError as exc:
        return ({"degree": args.d, "bound": need, "agreement": False,
                 "error": str(exc), "diagnostics": exc.diagnostics}, False, [])
    comp = res.component
    om = check_omega_cones(comp, args.d)
    cones = [{"n": n, "omega": list(omega_lambda(args.d, n).omega), "m": list(m),
              "strict": s, "is_m_J": r}
             for n, m, s, r in zip(valid_n(args.d), om.located, om.strict, om.realizes_J)]
    results = {"degree": args.d, "count": comp.count, "bound": need,
               "agreement": res.agreement, "per_sample_counts": list(res.per_sample_counts),
               "vertices": _vertex_rows(comp), "omega_cones": cones,
               "omega_distinct": om.distinct, "omega_strict": om.all_strict}
    flat = [{"degree": args.d, "m": v["m"], "omega": v["omega"], "strict": v["strict"]}
            for v in results["vertices"]]
    return results, comp.count >= need, flat


def _load(path):
    try:
        return load_ideal(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except IdealFormatError as exc:
        raise UsageError(str(exc)) from None


def cmd_fan(args):
    I = _load(args.ideal)
    e = args.degree if args.degree is not None else I.min_degree
    if e < I.min_degree:
        raise UsageError(f"--degree must be at least {I.min_degree}")
    res = generic_degree_fan(I, e, _config(args))
    comp = res.component
    results = {"degree": e, "count": comp.count, "ideal_dim": comp.ideal_dim,
               "agreement": res.agreement, "per_sample_counts": list(res.per_sample_counts),
               "vertices": _vertex_rows(comp)}
    ok = res.agreement
    if not res.agreement:
        results["disagreements"] = {str(k): v for k, v in res.disagreements().items()}
    if args.brute:
        A, _ = degree_matrix(I.transform(res.used_matrices[0]), e)
        try:
            hull = brute_component(A, limit=args.limit)
        except EnumerationLimitError as exc:
            results["brute"] = {"skipped": str(exc)}
        else:
            equal = set(hull) == comp.point_set()
            results["brute"] = {"count": len(hull), "equal": equal,
                                "vertices": sorted(list(m) for m in hull)}
            ok &= equal
    flat = [{"degree": e, "m": v["m"], "omega": v["omega"], "strict": v["strict"]}
            for v in results["vertices"]]
    return results, ok, flat


def _degree_range(text):
    try:
        lo, hi = (int(t) for t in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError("expected LO..HI") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("LO must not exceed HI")
    return lo, hi


def cmd_refine(args):
    I = _load(args.ideal)
    lo, hi = args.degrees
    if lo < I.min_degree:
        raise UsageError(f"LO must be at least {I.min_degree}")
    cfg = _config(args)
    per_degree, comps, cumulative = [], [], []
    ok = True
    for e in range(lo, hi + 1):
        res = generic_degree_fan(I, e, cfg)
        ok &= res.agreement
        comps.append(res.component)
        ref = refine(comps)
        cumulative.append(ref.count)
        per_degree.append({"degree": e, "count": res.component.count,
                           "agreement": res.agreement, "cumulative": ref.count})
    monotone = all(a <= b for a, b in zip(cumulative, cumulative[1:]))
    final = refine(comps)
    results = {"degrees": [lo, hi], "per_degree": per_degree, "cumulative": cumulative,
               "count": final.count, "monotone": monotone,
               "vertices": [{"m": list(m), "omega": list(w), "strict": True}
                            for m, w in zip(final.vertices, final.certificates)]}
    return results, ok and monotone, per_degree


def cmd_random_q(args):
    if args.d < 3:
        raise UsageError("--d must be at least 3")
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    cfg = _config(args)
    rep = theorem_generic_experiment(args.d, args.trials, cfg, degenerate=args.degenerate)
    if args.degenerate:
        ok = rep["dimension_failures"] == args.trials
    else:
        need = args.trials if args.min_pass is None else args.min_pass
        ok = rep["passed"] >= need
    rep["pass_rate"] = f"{rep['passed']}/{rep['total']}"
    flat = [{"trial": r["trial"], "count": r.get("count"), "passed": r["passed"],
             "failure": r.get("failure")} for r in rep["trials"]]
    return rep, ok, flat


COMMANDS = {
    "verify-vertices": cmd_verify_vertices,
    "verify-appendix": cmd_verify_appendix,
    "family-bound": cmd_family_bound,
    "fan": cmd_fan,
    "refine": cmd_refine,
    "random-q": cmd_random_q,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--quiet", action="store_true", help="print the verdict only")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sampling.add_argument("--height", type=int, default=DEFAULT_HEIGHT)

    p = argparse.ArgumentParser(prog="ginfan", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ginfan {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-vertices", parents=[common],
                       help="check the separating lines omega(n), lambda(n)")
    s.add_argument("--dmax", type=int, required=True)

    s = sub.add_parser("verify-appendix", parents=[common],
                       help="replay the determinant reduction for B")
    s.add_argument("--dmax", type=int, required=True)
    s.add_argument("--chain-dmax", type=int, default=CHAIN_DMAX,
                   help="check factor consistency up to this d (default %(default)s)")

    s = sub.add_parser("family-bound", parents=[common, sampling],
                       help="generic degree-d component of I(d)")
    s.add_argument("--d", type=int, required=True)

    s = sub.add_parser("fan", parents=[common, sampling],
                       help="generic degree component of an ideal file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--degree", type=int)
    s.add_argument("--brute", action="store_true", help="cross-check by all minors")
    s.add_argument("--limit", type=int, default=None,
                   help="brute-force minor limit (default from $GINFAN_BRUTE_LIMIT "
                        f"or {default_limit()})")

    s = sub.add_parser("refine", parents=[common, sampling],
                       help="refine degree components over a degree range")
    s.add_argument("--ideal", required=True)
    s.add_argument("--degrees", type=_degree_range, required=True, metavar="LO..HI")

    s = sub.add_parser("random-q", parents=[common, sampling],
                       help="bound experiment on random dense ideals")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--trials", type=int, default=20)
    s.add_argument("--min-pass", type=int, default=None,
                   help="passes required for a pass verdict (default: all)")
    s.add_argument("--degenerate", action="store_true",
                   help="use ideals whose generators coincide (dimension failure)")
    return p


def _params(args) -> dict:
    out = {k: v for k, v in vars(args).items() if k not in ("command", "format", "quiet")}
    if "degrees" in out:
        out["degrees"] = f"{out['degrees'][0]}..{out['degrees'][1]}"
    return out


def run(argv=None) -> tuple[int, dict | None]:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        results, ok, flat = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ginfan {args.command}: error: {exc}", file=sys.stderr)
        return 2, None
    except (NoBasisError, PreconditionError) as exc:
        results, ok, flat = {"error": str(exc)}, False, []
    report = {"command": args.command, "params": _params(args), "results": results,
              "timings": {"total_s": round(time.perf_counter() - t0, 3)},
              "verdict": "pass" if ok else "fail"}
    _emit(args, report, flat)
    return (0 if ok else 1), report


def _emit(args, report, flat):
    if args.quiet:
        print(report["verdict"])
    elif args.format == "csv":
        buf = io.StringIO()
        if flat:
            w = csv.DictWriter(buf, fieldnames=list(flat[0]))
            w.writeheader()
            for row in flat:
                w.writerow({k: (" ".join(map(str, v)) if isinstance(v, list) else v)
                            for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    else:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")


def main(argv=None) -> int:
    try:
        code, _ = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else 2
    except GinfanError as exc:
        print(f"ginfan: {exc}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
