"""Benchmark harness: sampler, determinism, emission formats, CLI."""

import csv
import math

import pytest

from sbsearch.bench import (
    SplitMix64,
    TrialPlan,
    emit_csv,
    emit_plot_data,
    real_enclosure,
    run_approx_bench,
    run_search_bench,
    sample_fraction,
)
from sbsearch.cli import main as cli_main
from sbsearch.rational import Frac, compare


def test_splitmix_determinism():
    a = SplitMix64(42)
    b = SplitMix64(42)
    assert [a.next64() for _ in range(5)] == [b.next64() for _ in range(5)]
    assert SplitMix64(43).next64() != SplitMix64(42).next64()


def test_splitmix_big_spans():
    rng = SplitMix64(7)
    n = 10**25
    for _ in range(200):
        v = rng.randint(2, n)
        assert 2 <= v <= n


def test_sampler_marginals_chi_squared():
    # b should be uniform on [2, 100]: chi-squared within 3 sigma
    rng = SplitMix64(12345)
    counts = [0] * 101
    trials = 100_000
    for _ in range(trials):
        b = rng.randint(2, 100)
        counts[b] += 1
    cells = 99
    expected = trials / cells
    chi2 = sum((counts[b] - expected) ** 2 / expected for b in range(2, 101))
    # chi-squared with 98 dof: mean 98, sd ~ 14
    assert abs(chi2 - 98) < 3 * math.sqrt(2 * 98)


def test_sample_fraction_contract():
    rng = SplitMix64(1)
    for _ in range(500):
        a, b = sample_fraction(rng, 37)
        assert 2 <= b <= 37 and 1 <= a < b


def test_run_search_bench_deterministic_and_correct():
    plan = TrialPlan(trials=50, seed=99)
    r1 = run_search_bench(plan, 100)
    r2 = run_search_bench(plan, 100)
    assert [vars(x) for x in r1][0]["max_queries"] == [vars(x) for x in r2][0]["max_queries"]
    for rec in r1:
        assert rec.failures == 0
        assert rec.max_queries >= rec.avg_queries
        if rec.algorithm == "csb":
            assert rec.max_queries <= 2.5849 * math.log2(100) + 2
        else:
            assert rec.max_queries <= math.ceil(2 * math.log2(100)) + 1
    with pytest.raises(ValueError):
        run_search_bench(plan, 100, algorithms=("km", "bogus"))


def test_emit_csv_and_plot(tmp_path):
    plan = TrialPlan(trials=10, seed=5)
    records = run_search_bench(plan, 10)
    out = tmp_path / "bench.csv"
    emit_csv(records, str(out))
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["n", "algorithm", "max_queries", "avg_queries",
                       "avg_time_s", "trials", "seed"]
    assert len(rows) == 1 + len(records)
    emit_csv([], str(out))
    assert out.read_text().strip() == "n,algorithm,max_queries,avg_queries,avg_time_s,trials,seed"

    plot = tmp_path / "plot.csv"
    emit_plot_data(records, str(plot))
    lines = plot.read_text().splitlines()
    assert lines[0] == "log10_n,series,value"
    assert any(",km_avg," in ln for ln in lines)
    with pytest.raises(OSError):
        emit_csv(records, str(tmp_path / "missing" / "x.csv"))


def test_csv_byte_identical_modulo_time(tmp_path):
    plan = TrialPlan(trials=25, seed=77)
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(run_search_bench(plan, 1000), str(a))
    emit_csv(run_search_bench(plan, 1000), str(b))

    def strip_time(path):
        out = []
        for line in path.read_text().splitlines():
            cols = line.split(",")
            if len(cols) == 7 and cols[4] != "avg_time_s":
                cols[4] = "-"
            out.append(",".join(cols))
        return out

    assert strip_time(a) == strip_time(b)


def test_real_enclosure_tightness():
    for kind in ("pi", "e", "sqrt:2", "sqrt:5"):
        lo, hi = real_enclosure(kind, Frac(1, 10**9))
        assert compare(lo, hi) < 0
        width_num = hi.num * lo.den - lo.num * hi.den
        assert width_num * 10**9 <= hi.den * lo.den


def test_run_approx_bench_small():
    cells = run_approx_bench(targets=("sqrt:2",), exponents=(1, 2, 3), repeats=1)
    assert [c.result_ok for c in cells] == [True, True, True]
    assert all(c.queries > 0 for c in cells)


def test_cli_search_and_km(capsys):
    assert cli_main(["search", "--hidden", "9/14", "--trace"]) == 0
    out = capsys.readouterr().out
    assert "result: 9/14" in out and "segment,x,d,m,queries" in out
    assert cli_main(["km", "--hidden", "9/14", "--bound", "14"]) == 0
    assert "result: 9/14" in capsys.readouterr().out


def test_cli_approx_verify(capsys):
    assert cli_main(["approx", "--target", "pi", "--delta", "1e-2", "--verify"]) == 0
    out = capsys.readouterr().out
    assert "result: 22/7" in out and "verified: ok" in out


def test_cli_verify_bounds_and_worst(capsys):
    assert cli_main([
        "verify-bounds", "--vars", "2", "--top", "11",
        "--constant", "2.5849", "--mode", "base_case",
    ]) == 0
    assert "violations: 0" in capsys.readouterr().out
    assert cli_main(["worst-pair", "--max", "20"]) == 0
    assert "(8, 1)" in capsys.readouterr().out
    assert cli_main(["worst-case", "--a", "8", "--b", "1", "--k", "3",
                     "--run-search"]) == 0
    assert "queries per doubling" in capsys.readouterr().out


def test_cli_config_presets(tmp_path, capsys):
    cfg = tmp_path / "bench.cfg"
    cfg.write_text("trials = 5\nmax_exp = 1\nseed = 11\n")
    assert cli_main(["--config", str(cfg), "bench"]) == 0
    out = capsys.readouterr().out
    assert ",5,11" in out  # trials and seed columns reflect the presets


def test_cli_bench_exit_code(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code = cli_main(["bench", "--trials", "20", "--max-exp", "2",
                     "--seed", "3", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    assert out.exists()
