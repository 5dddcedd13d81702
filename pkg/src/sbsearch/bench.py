"""Benchmark harness: seeded random search trials, approximation sweeps, and
CSV / plot-data emission.

The trial sampler runs on a splitmix64 generator (64-bit state, documented in
the README), so identical seeds reproduce identical fraction sequences within
this implementation. Time columns are wall-clock and never acceptance-gated.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import mpmath

from . import reference
from .approx import ApproxRequest, approximate_unknown, best_approx_known
from .km import km_search
from .oracles import RationalOracle, RealOracle, make_oracle
from .rational import Frac, parse_fraction
from .search import rational_search_bounded

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic PRNG: 64-bit state, splitmix64 update."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randbelow(self, span: int) -> int:
        """Uniform integer in [0, span)."""
        if span <= 0:
            raise ValueError("span must be positive")
        bits = span.bit_length()
        words = (bits + 63) // 64
        while True:
            v = 0
            for _ in range(words):
                v = (v << 64) | self.next64()
            v >>= words * 64 - bits
            if v < span:
                return v

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randbelow(hi - lo + 1)


@dataclass(frozen=True)
class TrialPlan:
    trials: int = 1000
    seed: int = 0x5B5EA2C4

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("need at least one trial")


@dataclass
class BenchRecord:
    n: int
    algorithm: str
    max_queries: int
    avg_queries: float
    avg_time_s: float
    trials: int
    seed: int
    failures: int = 0


def sample_fraction(rng: SplitMix64, n: int) -> Tuple[int, int]:
    """One trial input: b uniform on [2, n], then a uniform on [1, b-1].

    The raw pair is returned unreduced; algorithms see the reduced value
    through the oracle.
    """
    b = rng.randint(2, n)
    a = rng.randint(1, b - 1)
    return a, b


def run_search_bench(
    plan: TrialPlan, n: int, algorithms: Sequence[str] = ("km", "csb")
) -> List[BenchRecord]:
    """Benchmark the identification algorithms on shared random inputs.

    Each trial draws one fraction; every requested algorithm runs on its own
    oracle over that same fraction and its output is checked against the
    (reduced) input. A failed check aborts only that record's trial, flagged
    in the record.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    unknown = set(algorithms) - {"km", "csb"}
    if unknown:
        raise ValueError(f"unknown algorithms: {sorted(unknown)}")
    rng = SplitMix64(plan.seed)
    inputs = [sample_fraction(rng, n) for _ in range(plan.trials)]
    records = []
    for algo in algorithms:
        max_q = 0
        total_q = 0
        total_t = 0.0
        failures = 0
        for a, b in inputs:
            hidden = Frac(a, b)
            oracle = RationalOracle(hidden)
            t0 = time.perf_counter()
            if algo == "km":
                result, queries = km_search(oracle, n)
            else:
                result, trace = rational_search_bounded(oracle, n)
                queries = trace.total_queries
            total_t += time.perf_counter() - t0
            if result != hidden:
                failures += 1
                continue
            max_q = max(max_q, queries)
            total_q += queries
        ok = plan.trials - failures
        records.append(
            BenchRecord(
                n=n,
                algorithm=algo,
                max_queries=max_q,
                avg_queries=total_q / ok if ok else float("nan"),
                avg_time_s=total_t / plan.trials,
                trials=plan.trials,
                seed=plan.seed,
                failures=failures,
            )
        )
    return records


def real_enclosure(kind: str, width: Frac) -> Tuple[Frac, Frac]:
    """Certified rational enclosure of a supported constant, no wider than
    `width`. Used to drive the known-value verification oracle."""
    kind = kind.strip().lower()
    if kind.startswith("sqrt:"):
        d = int(kind.split(":", 1)[1])
        scale = 1
        while scale * scale * width.num * width.num < 4 * width.den * width.den:
            scale *= 10
        s = math.isqrt(d * scale * scale)
        return Frac(s, scale), Frac(s + 1, scale)
    const = {"pi": mpmath.pi, "e": mpmath.e}[kind]
    prec = 64
    while True:
        with mpmath.workprec(prec):
            approx = +const
            _, man, exp, _ = approx._mpf_
        man = int(man)
        if exp >= 0:
            return Frac(man << exp, 1), Frac((man + 1) << exp, 1)
        lo = Frac(man - 1, 1 << -exp)
        hi = Frac(man + 1, 1 << -exp)
        if (hi.num * lo.den - lo.num * hi.den) * width.den < width.num * hi.den * lo.den:
            return lo, hi
        prec *= 2


@dataclass
class ApproxCell:
    target: str
    exponent: int
    result: Frac
    queries: int
    avg_time_s: float
    expected: Optional[Frac]
    reference_queries: Optional[int]

    @property
    def result_ok(self) -> Optional[bool]:
        return None if self.expected is None else self.result == self.expected


def run_approx_bench(
    targets: Sequence[str] = reference.APPROX_TARGETS,
    exponents: Iterable[int] = range(1, 16),
    repeats: int = 1,
    verify: bool = True,
) -> List[ApproxCell]:
    """Approximate each target at radii 10^-i; check results against the
    frozen reference cells and the independent known-value oracle."""
    cells = []
    ref_cols = {t: i for i, t in enumerate(reference.APPROX_TARGETS)}
    for target in targets:
        for i in exponents:
            delta = Frac(1, 10**i)
            elapsed = 0.0
            for _ in range(max(1, repeats)):
                oracle = make_oracle(target)
                t0 = time.perf_counter()
                result, queries = approximate_unknown(ApproxRequest(delta, oracle))
                elapsed += time.perf_counter() - t0
            expected = None
            ref_q = None
            if target in ref_cols and i in reference.REFERENCE_BEST_APPROX:
                col = ref_cols[target]
                expected = parse_fraction(reference.REFERENCE_BEST_APPROX[i][col])
                ref_q = reference.REFERENCE_QUERY_COUNTS[i][col]
            if verify:
                t = target.strip().lower()
                if t in ("pi", "e") or t.startswith("sqrt:"):
                    lo, hi = real_enclosure(t, Frac(delta.num, 4 * delta.den))
                else:
                    lo = hi = parse_fraction(target)
                check = best_approx_known(lo, hi, delta)
                if check != result:
                    raise AssertionError(
                        f"verification mismatch for {target} at 1e-{i}: "
                        f"{result} vs {check}"
                    )
            cells.append(
                ApproxCell(
                    target=target,
                    exponent=i,
                    result=result,
                    queries=queries,
                    avg_time_s=elapsed / max(1, repeats),
                    expected=expected,
                    reference_queries=ref_q,
                )
            )
    return cells


CSV_HEADER = "n,algorithm,max_queries,avg_queries,avg_time_s,trials,seed"


def emit_csv(records: Sequence[BenchRecord], path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(CSV_HEADER + "\n")
            for r in records:
                fh.write(
                    f"{r.n},{r.algorithm},{r.max_queries},{r.avg_queries},"
                    f"{r.avg_time_s:.6e},{r.trials},{r.seed}\n"
                )
    except OSError as exc:
        raise OSError(f"cannot write benchmark CSV to {path!r}: {exc}") from exc


def emit_plot_data(records: Sequence[BenchRecord], path: str) -> None:
    """(log10 n, series value) rows, one series per algorithm/statistic."""
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("log10_n,series,value\n")
            for r in records:
                lg = math.log10(r.n)
                fh.write(f"{lg:.6f},{r.algorithm}_max,{r.max_queries}\n")
                fh.write(f"{lg:.6f},{r.algorithm}_avg,{r.avg_queries}\n")
    except OSError as exc:
        raise OSError(f"cannot write plot data to {path!r}: {exc}") from exc
