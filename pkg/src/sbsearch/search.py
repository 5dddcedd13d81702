"""Compressed Stern-Brocot tree search for a hidden rational in (0,1).

One segment at a time: galloping probes at 1, 3, 7, ... repeated-mediant
steps bracket the segment length, a binary search pins it down, and the
bracketing pair flips direction. Probes use the per-run closed form
(t repeated mediants in one expression), never t individual mediants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .oracles import ComparisonOracle, ComparisonResult
from .rational import Frac, LEFT, RIGHT


@dataclass(frozen=True)
class SearchBracket:
    """Open interval (low, high) known to contain the hidden value, plus the
    direction the next run of steps moves the probe."""

    low: Frac
    high: Frac
    direction: str

    def __post_init__(self):
        if not self.high.is_infinite and not (self.low < self.high):
            raise ValueError(f"bracket requires low < high: {self.low}, {self.high}")
        det = self.high.num * self.low.den - self.low.num * self.high.den
        if det != 1:
            raise ValueError(f"bracket must be a Farey neighbor pair, det={det}")
        if self.direction not in (LEFT, RIGHT):
            raise ValueError(f"bad direction {self.direction!r}")

    def probe(self, t: int) -> Frac:
        """Fraction after t more steps in `direction` (t repeated mediants)."""
        if self.direction == LEFT:
            return Frac._raw(
                self.high.num + t * self.low.num, self.high.den + t * self.low.den
            )
        return Frac._raw(
            self.low.num + t * self.high.num, self.low.den + t * self.high.den
        )

    def step_cap(self, n: int) -> Optional[int]:
        """Largest step count whose probe denominator stays <= n."""
        anchor = self.low if self.direction == LEFT else self.high
        moving = self.high if self.direction == LEFT else self.low
        if anchor.den == 0:
            return None
        return (n - moving.den) // anchor.den


@dataclass
class Segment:
    x: int
    d: int
    m: int
    queries: int


@dataclass
class SearchTrace:
    """Per-segment record of one search: segment lengths, the denominator
    recurrences behind them, and the per-segment query spend."""

    segments: List[Segment] = field(default_factory=list)
    total_queries: int = 0

    def exponents(self) -> Tuple[int, ...]:
        return tuple(s.x for s in self.segments)


class Exhausted:
    """Marker result: the step cap was hit without the probe crossing."""

    def __repr__(self):
        return "Exhausted"


EXHAUSTED = Exhausted()


def _crossed(result: ComparisonResult, direction: str) -> bool:
    # LEFT probes descend toward the hidden value: crossing means
    # probe <= hidden. RIGHT mirrors.
    if direction == LEFT:
        return result in (ComparisonResult.LESS, ComparisonResult.EQUAL)
    return result in (ComparisonResult.GREATER, ComparisonResult.EQUAL)


def exponential_search(
    oracle: ComparisonOracle, bracket: SearchBracket, cap: Optional[int] = None
):
    """Gallop through step counts 2^i - 1 until the probe crosses the hidden
    value (or equals it: returns the hit fraction).

    Returns (i, hit) with hit None on a plain crossing, or (EXHAUSTED, None)
    if a step cap was exhausted without crossing.
    """
    i = 1
    while True:
        t = 2**i - 1
        clamped = cap is not None and t >= cap
        if clamped:
            t = cap
        probe = bracket.probe(t)
        result = oracle.compare(probe)
        if result is ComparisonResult.EQUAL:
            return i, probe
        if _crossed(result, bracket.direction):
            return i, None
        if clamped:
            return EXHAUSTED, None
        i += 1


def segment_binary_search(
    oracle: ComparisonOracle, bracket: SearchBracket, lo: int, hi: int
):
    """Minimal x in (lo, hi] whose probe crosses; the probe at hi is already
    known to cross and the probe at lo not to. Short-circuits on equality."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got {lo} >= {hi}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        probe = bracket.probe(mid)
        result = oracle.compare(probe)
        if result is ComparisonResult.EQUAL:
            return mid, probe
        if _crossed(result, bracket.direction):
            hi = mid
        else:
            lo = mid
    return hi, None


def _search(oracle: ComparisonOracle, bound: Optional[int]):
    bracket = SearchBracket(Frac(0, 1), Frac(1, 1), LEFT)
    trace = SearchTrace()
    d_prev, m_prev = 1, 1
    base = oracle.count
    while True:
        seg_start = oracle.count
        cap = bracket.step_cap(bound) if bound is not None else None
        if cap is not None and cap < 1:
            raise ValueError("hidden value has denominator above the stated bound")
        i, hit = exponential_search(oracle, bracket, cap)
        if i is EXHAUSTED:
            raise ValueError(
                "hidden value has denominator above the stated bound"
            )
        if hit is not None:
            x = min(2**i - 1, cap) if cap is not None else 2**i - 1
            _record(trace, x, d_prev, m_prev, oracle.count - seg_start)
            trace.total_queries = oracle.count - base
            return hit, trace
        lo = 2 ** (i - 1) - 1
        hi = 2**i - 1
        if cap is not None and hi > cap:
            hi = cap
        x, hit = segment_binary_search(oracle, bracket, lo, hi)
        if hit is not None:
            _record(trace, x, d_prev, m_prev, oracle.count - seg_start)
            trace.total_queries = oracle.count - base
            return hit, trace
        landed = bracket.probe(x)
        shy = bracket.probe(x - 1)
        d_prev, m_prev = _record(trace, x, d_prev, m_prev, oracle.count - seg_start)
        if bracket.direction == LEFT:
            bracket = SearchBracket(landed, shy, RIGHT)
        else:
            bracket = SearchBracket(shy, landed, LEFT)


def _record(trace: SearchTrace, x: int, d_prev: int, m_prev: int, queries: int):
    d = d_prev + x * m_prev
    m = d_prev + (x - 1) * m_prev
    trace.segments.append(Segment(x=x, d=d, m=m, queries=queries))
    return d, m


def rational_search_unbounded(oracle: ComparisonOracle) -> Tuple[Frac, SearchTrace]:
    """Identify a hidden rational in (0,1) exactly, with no denominator bound."""
    return _search(oracle, None)


def rational_search_bounded(
    oracle: ComparisonOracle, n: int
) -> Tuple[Frac, SearchTrace]:
    """Same as the unbounded search, but galloping probes are clamped so no
    queried fraction has denominator above n."""
    if n < 2:
        raise ValueError(f"bound must be at least 2, got {n}")
    return _search(oracle, n)
