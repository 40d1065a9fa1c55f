"""Command line interface: ``germlab {invariants,newton,sectional,verify,oracle}``.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from germlab.milnor import GermError, MilnorAlgebra
from germlab.newton import NotConvenient, SupportSet, kushnirenko_report, newton_data
from germlab.oracle import OracleResourceLimit, oracle_dim, truncated_dim
from germlab.parsing import (
    CorpusError,
    GermSpec,
    ParseError,
    bundled_corpus_path,
    format_rational,
    parse_poly,
    read_corpus,
)
from germlab.report import analyze
from germlab.sectional import SectionPlan, multiplicity_bounds, sectional_profile

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    def default(o):
        if isinstance(o, Fraction):
            return format_rational(o)
        raise TypeError(type(o).__name__)

    return json.dumps(obj, sort_keys=True, indent=2, default=default)


def _specs(args) -> list:
    if args.poly is not None and args.corpus is not None:
        raise UsageError("give either --poly or --corpus, not both")
    if args.corpus is not None:
        return read_corpus(args.corpus)
    if args.poly is None:
        raise UsageError("--poly (with --vars) or --corpus is required")
    if not args.vars:
        raise UsageError("--vars is required with --poly")
    spec = GermSpec.from_dict({"name": args.name, "vars": args.vars.split(","), "poly": args.poly})
    return [spec]


def _plan(args) -> SectionPlan:
    return SectionPlan(samples=args.samples, seed=args.seed, coeff_bound=args.coeff_bound)


def _table(rows: list, headers: list) -> str:
    cells = [[str(h) for h in headers]] + [["" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _run_one(task):
    spec, checks, plan = task
    return analyze(spec, checks, plan)


def _analyses(specs, checks, plan, jobs):
    tasks = [(s, checks, plan) for s in specs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]


def cmd_invariants(args) -> int:
    specs = _specs(args)
    results = _analyses(specs, args.checks, _plan(args), args.jobs)
    if args.json:
        payload = [r.report.to_dict() for r in results]
        print(_dump(payload))
    else:
        rows = []
        for r in results:
            rep = r.report
            rows.append([rep.name, rep.status, rep.n, rep.m, rep.mu, rep.tau,
                         None if rep.ratio is None else format_rational(rep.ratio),
                         rep.filtration_dims, rep.theorem_ok, rep.equality_case])
        print(_table(rows, ["name", "status", "n", "m", "mu", "tau", "ratio", "d_i",
                            "theorem_ok", "equality"]))
        for r in results:
            if r.report.message:
                print(f"{r.report.name}: {r.report.message}", file=sys.stderr)
            for msg in r.failures:
                print(f"{r.report.name}: FAIL {msg}", file=sys.stderr)
    statuses = {r.report.status for r in results}
    if statuses & {"INPUT_ERROR", "NOT_ISOLATED"}:
        return EXIT_INPUT
    return EXIT_FAIL if any(r.failures for r in results) else EXIT_OK


def cmd_newton(args) -> int:
    specs = _specs(args)
    out, failed = [], False
    for spec in specs:
        f = spec.parse()
        data = newton_data(f)
        if not data.convenient:
            missing = [spec.vars[i] for i in SupportSet.of(f).missing_axes()]
            raise NotConvenient(missing, f"{spec.name}: NOT_CONVENIENT, no pure power of {', '.join(missing)}")
        try:
            alg = MilnorAlgebra(f)
            mu, tau = alg.mu, alg.tau
        except GermError as exc:
            raise UsageError(f"{spec.name}: {exc.status}: {exc}") from exc
        kr = kushnirenko_report(f, mu, tau, data)
        failed |= not (kr["mu_ge_nu"] and kr["tau_ge_nu_over_n"])
        out.append({"name": spec.name, "mu": mu, "tau": tau, **data.to_dict(), **kr})
    if args.json:
        print(_dump(out))
    else:
        rows = [[d["name"], ", ".join(f"V{q}={format_rational(v)}" for q, v in d["volumes"].items()),
                 d["nu"], d["mu"], d["tau"], d["mu_ge_nu"], d["mu_eq_nu"], d["tau_ge_nu_over_n"]]
                for d in out]
        print(_table(rows, ["name", "volumes", "nu", "mu", "tau", "mu>=nu", "mu=nu", "tau>=nu/n"]))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sectional(args) -> int:
    specs = _specs(args)
    plan = _plan(args)
    out, failed = [], False
    for spec in specs:
        f = spec.parse()
        try:
            alg = MilnorAlgebra(f)
            mu, tau = alg.mu, alg.tau
        except GermError as exc:
            raise UsageError(f"{spec.name}: {exc.status}: {exc}") from exc
        prof = sectional_profile(f, plan, mu)
        bounds = multiplicity_bounds(f, mu, tau)
        failed |= not (prof.log_convex and bounds["mu_ge_pow"] and bounds["tau_ge_pow_over_n"])
        out.append({"name": spec.name, "mu": mu, "tau": tau, **prof.to_dict(), **bounds})
    if args.json:
        print(_dump(out))
    else:
        rows = [[d["name"], d["m"], d["mu_i"], d["log_convex"], d["mu_ge_pow"], d["tau_ge_pow_over_n"]]
                for d in out]
        print(_table(rows, ["name", "m", "mu^i", "log_convex", "mu>=(m-1)^n", "tau>=(m-1)^n/n"]))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    path = args.corpus or bundled_corpus_path()
    specs = read_corpus(path)
    results = _analyses(specs, args.checks, _plan(args), args.jobs)
    if args.json:
        print(_dump([{**r.report.to_dict(), "verdict": "PASS" if r.passed else "FAIL",
                      "failures": r.failures} for r in results]))
    else:
        for r in results:
            verdict = "PASS" if r.passed else "FAIL"
            detail = "; ".join(r.failures or ([r.report.message] if r.report.message else []))
            print(f"{verdict}  {r.report.name:<24} mu={r.report.mu} tau={r.report.tau}"
                  + (f"  {detail}" if detail else ""))
        passed = sum(r.passed for r in results)
        print(f"{len(results)} germs, {passed} passed, {len(results) - passed} failed")
    if any(r.report.status == "INPUT_ERROR" for r in results):
        return EXIT_INPUT
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_oracle(args) -> int:
    if not args.vars or args.poly is None:
        raise UsageError("oracle needs --vars and --poly")
    variables = args.vars.split(",")
    if args.ideal == "gens":
        gens = [parse_poly(g, variables) for g in args.poly.split(";")]
    else:
        f = parse_poly(args.poly, variables)
        gens = f.gradient() + ([f] if args.ideal == "tjurina" else [])
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise UsageError("ideal has no nonzero generators")
    if args.degree is not None:
        result = {"degree_cap": args.degree, "dim_at_cap": truncated_dim(gens, args.degree)}
    else:
        dim = oracle_dim(gens)
        result = {"dim": dim}
    print(_dump(result) if args.json else "  ".join(f"{k}={v}" for k, v in result.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="germlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, corpus=True):
        p.add_argument("--vars", help="comma separated variable names, e.g. x,y,z")
        p.add_argument("--poly", help="polynomial expression")
        p.add_argument("--name", default="germ")
        if corpus:
            p.add_argument("--corpus", help="JSON-lines corpus file")
        p.add_argument("--json", action="store_true")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--samples", type=int, default=3)
        p.add_argument("--coeff-bound", type=int, default=20)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--checks", type=lambda s: s.split(","), default=["all"],
                       help="comma separated subset of algebra,newton,sectional,all")

    for name, func in [("invariants", cmd_invariants), ("newton", cmd_newton),
                       ("sectional", cmd_sectional), ("verify", cmd_verify)]:
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=func)
    p = sub.add_parser("oracle", help="brute-force truncated colength (debugging)")
    common(p, corpus=False)
    p.add_argument("--ideal", choices=["jacobian", "tjurina", "gens"], default="jacobian",
                   help="gens: --poly is a ';'-separated generator list")
    p.add_argument("--degree", type=int, help="report dim O/(I + m^D) for this D only")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (UsageError, ParseError, CorpusError, NotConvenient, OracleResourceLimit,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
