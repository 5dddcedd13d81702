"""Command-line front end.

Subcommands: search, km, approx, bench, approx-bench, verify-bounds,
worst-pair, worst-case. A config file of `key = value` lines may preset any
long flag (without the leading dashes); command-line flags win. Exit status
is 0 only when every correctness check passed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from typing import List, Optional

import mpmath

from .approx import ApproxRequest, approximate_unknown, best_approx_known
from .bench import (
    BenchRecord,
    TrialPlan,
    emit_csv,
    emit_plot_data,
    real_enclosure,
    run_approx_bench,
    run_search_bench,
)
from .bounds import (
    comparisons_coefficient,
    growth_rates,
    threshold,
    verify_tuple_inequality,
    worst_case_fraction,
    worst_pair,
)
from .km import km_search
from .oracles import RationalOracle, make_oracle
from .rational import Frac, parse_fraction
from .reference import REFERENCE_SEARCH_STATS
from .search import rational_search_bounded, rational_search_unbounded


def _parse_delta(text: str) -> Frac:
    t = text.strip().lower()
    if "e" in t and "/" not in t:
        mant, exp = t.split("e", 1)
        exp_i = int(exp)
        if mant not in ("1", "1.0", ""):
            raise ValueError("delta must look like 1e-K or a fraction p/q")
        if exp_i >= 0:
            return Frac(10**exp_i, 1)
        return Frac(1, 10**-exp_i)
    return parse_fraction(t)


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    presets = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" in line:
                key, value = line.split("=", 1)
            elif ":" in line:
                key, value = line.split(":", 1)
            else:
                raise ValueError(f"bad config line: {line!r}")
            presets[key.strip().replace("-", "_")] = value.strip()
    return presets


def cmd_search(args) -> int:
    oracle = RationalOracle(parse_fraction(args.hidden))
    if args.bound:
        result, trace = rational_search_bounded(oracle, args.bound)
    else:
        result, trace = rational_search_unbounded(oracle)
    print(f"result: {result}")
    print(f"queries: {trace.total_queries}")
    if args.trace:
        print("segment,x,d,m,queries")
        for i, seg in enumerate(trace.segments, 1):
            print(f"{i},{seg.x},{seg.d},{seg.m},{seg.queries}")
    return 0 if result == parse_fraction(args.hidden) else 1


def cmd_km(args) -> int:
    hidden = parse_fraction(args.hidden)
    oracle = RationalOracle(hidden)
    result, queries = km_search(oracle, args.bound)
    print(f"result: {result}")
    print(f"queries: {queries}")
    return 0 if result == hidden else 1


def cmd_approx(args) -> int:
    delta = _parse_delta(args.delta)
    oracle = make_oracle(args.target)
    t0 = time.perf_counter()
    result, queries = approximate_unknown(ApproxRequest(delta, oracle))
    elapsed = time.perf_counter() - t0
    print(f"result: {result}")
    print(f"queries: {queries}")
    print(f"time_s: {elapsed:.3e}")
    if args.verify:
        t = args.target.strip().lower()
        if t in ("pi", "e") or t.startswith("sqrt:"):
            lo, hi = real_enclosure(t, Frac(delta.num, 4 * delta.den))
        else:
            lo = hi = parse_fraction(args.target)
        check = best_approx_known(lo, hi, delta)
        ok = check == result
        print(f"verified: {'ok' if ok else f'MISMATCH vs {check}'}")
        return 0 if ok else 1
    return 0


def _emit_records(records: List[BenchRecord], args) -> None:
    if args.out:
        if args.format == "json":
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump([r.__dict__ for r in records], fh, indent=2, default=str)
        else:
            emit_csv(records, args.out)
        print(f"wrote {args.out}")
    if args.plot_out:
        emit_plot_data(records, args.plot_out)
        print(f"wrote {args.plot_out}")


def cmd_bench(args) -> int:
    plan = TrialPlan(trials=args.trials, seed=args.seed)
    records: List[BenchRecord] = []
    status = 0
    print("n,algorithm,max_queries,avg_queries,avg_time_s,trials,seed")
    for e in range(1, args.max_exp + 1):
        n = 10**e
        for rec in run_search_bench(plan, n):
            records.append(rec)
            print(
                f"{rec.n},{rec.algorithm},{rec.max_queries},"
                f"{rec.avg_queries:.2f},{rec.avg_time_s:.3e},{rec.trials},{rec.seed}"
            )
            if rec.failures:
                print(f"# {rec.failures} correctness failures!", file=sys.stderr)
                status = 1
            envelope = (
                2.5849 * math.log2(n) + 2
                if rec.algorithm == "csb"
                else math.ceil(2 * math.log2(n)) + 1
            )
            if rec.max_queries > envelope:
                print(
                    f"# {rec.algorithm} exceeded its query envelope at n={n}",
                    file=sys.stderr,
                )
                status = 1
    _emit_records(records, args)
    return status


def cmd_approx_bench(args) -> int:
    exps = range(1, args.max_delta_exp + 1)
    cells = run_approx_bench(exponents=exps, repeats=args.repeats)
    status = 0
    print("target,delta_exp,result,queries,ref_queries,avg_time_s,result_check")
    for c in cells:
        mark = "-" if c.result_ok is None else ("ok" if c.result_ok else "FAIL")
        refq = "-" if c.reference_queries is None else c.reference_queries
        print(
            f"{c.target},{c.exponent},{c.result},{c.queries},{refq},"
            f"{c.avg_time_s:.3e},{mark}"
        )
        if c.result_ok is False:
            status = 1
    return status


def cmd_verify_bounds(args) -> int:
    report = verify_tuple_inequality(args.vars, args.top, args.constant, args.mode)
    print(f"constant: {report.constant_c}")
    print(f"tuples checked: {report.tuples_checked}")
    print(f"violations: {len(report.violations)}")
    print(f"argmax tuple: {report.argmax_tuple}")
    print(f"max ratio: {report.max_ratio}")
    if args.out and report.violations:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(",".join(f"x{i+1}" for i in range(args.vars)) + "\n")
            for tup in report.violations:
                fh.write(",".join(map(str, tup)) + "\n")
        print(f"wrote {args.out}")
    return 0 if report.holds_everywhere else 1


def cmd_worst_pair(args) -> int:
    (a, b), coeff = worst_pair(args.max)
    print(f"argmax pair: ({a}, {b})")
    print(f"coefficient: {mpmath.nstr(coeff, 10)}")
    return 0


def cmd_worst_case(args) -> int:
    f = worst_case_fraction(args.a, args.b, args.k)
    print(f"fraction: {f}")
    phi_a, phi_b = growth_rates(args.a, args.b)
    print(f"growth per run pair: {mpmath.nstr(phi_a * phi_b, 10)}")
    print(f"coefficient: {mpmath.nstr(comparisons_coefficient(args.a, args.b), 10)}")
    if args.run_search:
        oracle = RationalOracle(f)
        result, trace = rational_search_unbounded(oracle)
        ratio = trace.total_queries / math.log2(f.den)
        print(f"search queries: {trace.total_queries}")
        print(f"queries per doubling: {ratio:.4f}")
        return 0 if result == f else 1
    return 0


def build_parser(presets: Optional[dict] = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbsearch",
        description="Rational identification and approximation from comparison queries.",
    )
    parser.add_argument("--config", help="key=value file presetting any flag")
    sub = parser.add_subparsers(dest="command", required=True)
    subparsers: List[argparse.ArgumentParser] = []
    real_add = sub.add_parser

    def add_parser(*a, **kw):
        p = real_add(*a, **kw)
        subparsers.append(p)
        return p

    sub.add_parser = add_parser

    p = sub.add_parser("search", help="identify a hidden rational in (0,1)")
    p.add_argument("--hidden", required=True, help="hidden fraction a/b")
    p.add_argument("--bound", type=int, default=None, help="denominator bound")
    p.add_argument("--trace", action="store_true", help="print per-segment CSV")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("km", help="two-phase grid search for a hidden rational")
    p.add_argument("--hidden", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_km)

    p = sub.add_parser("approx", help="best rational approximation of a target")
    p.add_argument("--target", required=True, help="pi | e | sqrt:D | a/b")
    p.add_argument("--delta", required=True, help="radius: 1e-K or p/q")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("bench", help="seeded random search benchmark")
    p.add_argument("--seed", type=int, default=TrialPlan.seed)
    p.add_argument("--trials", type=int, default=TrialPlan.trials)
    p.add_argument("--max-exp", type=int, default=6, help="n runs up to 10^this")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--plot-out", help="plot-data output path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("approx-bench", help="approximation sweep over all targets")
    p.add_argument("--max-delta-exp", type=int, default=15)
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=cmd_approx_bench)

    p = sub.add_parser("verify-bounds", help="exhaustive tuple inequality scan")
    p.add_argument("--vars", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--top", type=int, required=True)
    p.add_argument("--constant", default="2.5849", help="decimal constant")
    p.add_argument(
        "--mode", choices=("base_case", "inductive_step"), default="base_case"
    )
    p.add_argument("--out", help="CSV of violating tuples")
    p.set_defaults(func=cmd_verify_bounds)

    p = sub.add_parser("worst-pair", help="argmax of the per-doubling coefficient")
    p.add_argument("--max", type=int, default=1000)
    p.set_defaults(func=cmd_worst_pair)

    p = sub.add_parser("worst-case", help="alternating-run family instance")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--run-search", action="store_true")
    p.set_defaults(func=cmd_worst_case)

    if presets:
        parser.set_defaults(**presets)
        for sp in subparsers:
            known = {
                k: v
                for k, v in presets.items()
                if any(k == a.dest for a in sp._actions)
            }
            if known:
                sp.set_defaults(**known)
    return parser


def _coerce(value: str):
    low = value.lower()
    if low in ("true", "yes", "on"):
        return True
    if low in ("false", "no", "off"):
        return False
    try:
        return int(value)
    except ValueError:
        return value


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # config presets act as defaults, so explicit flags always win
    config_path = None
    if "--config" in argv:
        at = argv.index("--config")
        if at + 1 >= len(argv):
            print("--config needs a path", file=sys.stderr)
            return 2
        config_path = argv[at + 1]
        del argv[at : at + 2]
    presets = None
    if config_path:
        presets = {k: _coerce(v) for k, v in _load_config(config_path).items()}
    parser = build_parser(presets)
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
