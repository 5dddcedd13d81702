"""Compressed tree search: segment subroutines, whole searches, traces."""

from math import gcd, log2

import pytest

from sbsearch.oracles import RationalOracle
from sbsearch.rational import Frac, LEFT, RIGHT, fraction_to_sb_path
from sbsearch.search import (
    EXHAUSTED,
    SearchBracket,
    exponential_search,
    rational_search_bounded,
    rational_search_unbounded,
    segment_binary_search,
)


def test_bracket_validation():
    with pytest.raises(ValueError):
        SearchBracket(Frac(1, 2), Frac(1, 3), LEFT)
    with pytest.raises(ValueError):
        SearchBracket(Frac(1, 3), Frac(2, 3), LEFT)  # determinant 1 required
    b = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    assert b.probe(1) == Frac(1, 2)
    assert b.probe(3) == Frac(1, 4)
    r = SearchBracket(Frac(1, 2), Frac(1, 1), RIGHT)
    assert r.probe(1) == Frac(2, 3)


def test_exponential_search_descends():
    # probes 1/2, 1/4, 1/8: the third is at or below the hidden 1/5
    oracle = RationalOracle(Frac(1, 5))
    bracket = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    i, hit = exponential_search(oracle, bracket)
    assert (i, hit) == (3, None)
    assert oracle.count == 3


def test_exponential_search_equal_shortcircuit():
    oracle = RationalOracle(Frac(1, 2))
    bracket = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    i, hit = exponential_search(oracle, bracket)
    assert hit == Frac(1, 2)
    assert oracle.count == 1


def test_exponential_search_right_after_first_segment():
    oracle = RationalOracle(Frac(9, 14))
    bracket = SearchBracket(Frac(1, 2), Frac(1, 1), RIGHT)
    i, hit = exponential_search(oracle, bracket)
    assert (i, hit) == (1, None)  # 2/3 >= 9/14 crosses immediately


def test_exponential_search_exhausted_under_cap():
    # hidden deeper than the cap allows: flagged, not mis-answered
    oracle = RationalOracle(Frac(1, 50))
    bracket = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    i, hit = exponential_search(oracle, bracket, cap=10)
    assert i is EXHAUSTED and hit is None


def test_segment_binary_forced():
    oracle = RationalOracle(Frac(1, 5))
    bracket = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    x, hit = segment_binary_search(oracle, bracket, 0, 1)
    assert (x, hit) == (1, None)
    assert oracle.count == 0


def test_segment_binary_finds_length():
    oracle = RationalOracle(Frac(1, 5))
    bracket = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    x, hit = segment_binary_search(oracle, bracket, 3, 7)
    assert x == 4
    assert hit == Frac(1, 5)  # probe at 4 steps is exactly 1/5
    with pytest.raises(ValueError):
        segment_binary_search(oracle, bracket, 3, 3)


def test_unbounded_examples():
    result, trace = rational_search_unbounded(RationalOracle(Frac(9, 14)))
    assert result == Frac(9, 14)
    assert trace.exponents() == (1, 1, 1, 3)

    result, trace = rational_search_unbounded(RationalOracle(Frac(1, 2)))
    assert result == Frac(1, 2)
    assert trace.total_queries == 1

    result, trace = rational_search_unbounded(RationalOracle(Frac(113, 355)))
    assert result == Frac(113, 355)
    assert trace.total_queries <= 2.5849 * log2(355)


def test_bounded_validation_and_equivalence():
    with pytest.raises(ValueError):
        rational_search_bounded(RationalOracle(Frac(1, 2)), 1)
    result, trace = rational_search_bounded(RationalOracle(Frac(1, 2)), 2)
    assert result == Frac(1, 2)
    assert trace.total_queries == 1
    # out-of-contract oracle is reported, not silently wrong
    with pytest.raises(ValueError):
        rational_search_bounded(RationalOracle(Frac(1, 50)), 10)


def test_bounded_saves_queries_on_deep_runs():
    unb = RationalOracle(Frac(1, 1000))
    _, tu = rational_search_unbounded(unb)
    bnd = RationalOracle(Frac(1, 1000))
    _, tb = rational_search_bounded(bnd, 1000)
    assert tb.total_queries < tu.total_queries


def test_bounded_matches_unbounded_exhaustively_b50():
    # identical results everywhere; clamping saves queries in aggregate
    # (per-instance the equality short-circuit can get lucky either way)
    count = 0
    total_unbounded = total_bounded = 0
    for b in range(2, 51):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            count += 1
            hidden = Frac(a, b)
            r1, t1 = rational_search_unbounded(RationalOracle(hidden))
            r2, t2 = rational_search_bounded(RationalOracle(hidden), 50)
            assert r1 == r2 == hidden
            total_unbounded += t1.total_queries
            total_bounded += t2.total_queries
    assert count == 774  # reduced fractions with denominator <= 50
    assert total_bounded <= total_unbounded


def test_trace_invariants_small_sweep():
    for b in range(2, 120):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            hidden = Frac(a, b)
            result, trace = rational_search_unbounded(RationalOracle(hidden))
            assert result == hidden
            d_prev = m_prev = 1
            for seg in trace.segments:
                assert seg.x >= 1
                assert seg.d == d_prev + seg.x * m_prev
                assert seg.m == d_prev + (seg.x - 1) * m_prev
                assert seg.d == seg.m + m_prev
                assert 2 * seg.m >= seg.d
                d_prev, m_prev = seg.d, seg.m
            assert d_prev == b
            # per-segment query budget: 2*floor(log2 x) + 1, final +1 slack
            for k, seg in enumerate(trace.segments):
                budget = 2 * (seg.x.bit_length() - 1) + 1
                if k == len(trace.segments) - 1:
                    budget += 1
                assert seg.queries <= budget
            assert trace.exponents() == fraction_to_sb_path(hidden).exponents()


def test_trace_total_is_oracle_count():
    oracle = RationalOracle(Frac(355, 452))
    _, trace = rational_search_unbounded(oracle)
    assert trace.total_queries == oracle.count
    assert sum(s.queries for s in trace.segments) == trace.total_queries
