"""Kwek-Mehlhorn rational search: binary-search a 1/n^2 grid cell, then
extract the unique small-denominator fraction from it without further queries.

The cell extraction doubles as a general smallest-denominator-in-interval
routine, which is also the verification oracle for approximation results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .oracles import ComparisonOracle, ComparisonResult
from .rational import Frac, compare


@dataclass(frozen=True)
class GridInterval:
    """Cell [mu/n^2, (mu+1)/n^2] of the denominator-bound grid."""

    mu: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"bound must be at least 2, got {self.n}")
        if not 0 <= self.mu < self.n * self.n:
            raise ValueError(f"cell index {self.mu} outside grid for n={self.n}")

    def low(self) -> Frac:
        return Frac(self.mu, self.n * self.n)

    def high(self) -> Frac:
        return Frac(self.mu + 1, self.n * self.n)


@dataclass(frozen=True)
class ExactHit:
    """A grid probe landed exactly on the hidden value."""

    value: Frac


def km_phase1(oracle: ComparisonOracle, n: int) -> Union[GridInterval, ExactHit]:
    """Binary search for the grid cell containing the hidden value.

    Returns ExactHit immediately if a probe compares equal.
    """
    if n < 2:
        raise ValueError(f"bound must be at least 2, got {n}")
    n2 = n * n
    lo, hi = 0, n2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        result = oracle.compare(Frac(mid, n2))
        if result is ComparisonResult.EQUAL:
            return ExactHit(Frac(mid, n2))
        if result is ComparisonResult.GREATER:
            hi = mid
        else:
            lo = mid
    return GridInterval(lo, n)


def smallest_denominator_in_interval(lo: Frac, hi: Frac) -> Frac:
    """The unique fraction of minimum denominator in the closed interval
    [lo, hi] (minimum numerator on denominator ties).

    Implemented as a compressed Stern-Brocot descent: runs of left or right
    steps are taken in one jump, so the cost is proportional to the continued
    fraction length of the endpoints.
    """
    if lo.is_infinite or hi.is_infinite:
        raise ValueError("interval endpoints must be finite")
    if compare(lo, hi) > 0:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if lo.num == 0:
        return Frac(0, 1)
    ln, ld = lo.num, lo.den
    hn, hd = hi.num, hi.den
    # bracketing pair (a/b, c/d) = (0/1, 1/0); node = mediant
    a, b, c, d = 0, 1, 1, 0
    while True:
        p, q = a + c, b + d
        if p * ld < ln * q:  # node < lo: jump right
            # smallest t with (a + t*c)/(b + t*d) >= lo
            num = ln * b - a * ld
            den = c * ld - ln * d
            t = -(-num // den)
            a, b = a + t * c, b + t * d
            # the landing node may already sit in [lo, hi]
            if a * hd <= hn * b:
                return Frac(a, b)
            # it overshot hi: its predecessor is the new left end
            a, b = a - c, b - d
            c, d = a + c, b + d  # overshooting node becomes the right end
        elif p * hd > hn * q:  # node > hi: jump left
            num = c * hd - hn * d
            den = hn * b - a * hd
            t = -(-num // den)
            c, d = c + t * a, d + t * b
            if ln * d <= c * ld:
                return Frac(c, d)
            c, d = c - a, d - b
            a, b = a + c, b + d
        else:
            return Frac(p, q)


def km_search(oracle: ComparisonOracle, n: int) -> Tuple[Frac, int]:
    """Identify a hidden rational with denominator <= n.

    Phase 2 spends no queries; one final query verifies the extracted
    fraction against the oracle (counted, like every comparison).
    """
    before = oracle.count
    located = km_phase1(oracle, n)
    if isinstance(located, ExactHit):
        return located.value, oracle.count - before
    result = smallest_denominator_in_interval(located.low(), located.high())
    oracle.compare(result)
    return result, oracle.count - before
