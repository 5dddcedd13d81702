"""Best rational approximation of an unknown positive real from comparison
queries alone: the smallest-denominator fraction within a radius delta.

The descent runs over the generalized tree spanning (0, inf). Each run finds
its length with galloping plus binary probes against the hidden value, then
shifted queries decide whether the run holds an in-range fraction; if the
shallow side is in range, a final binary search over shifted probes pins the
minimal-denominator one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .km import smallest_denominator_in_interval
from .oracles import ComparisonOracle, PrecisionExhausted
from .rational import Frac, compare


@dataclass(frozen=True)
class ApproxRequest:
    delta: Frac
    oracle: ComparisonOracle

    def __post_init__(self):
        if self.delta.is_infinite or self.delta.num == 0:
            raise ValueError("delta must be a positive finite rational")


def _shift(num: int, den: int, delta: Frac, sign: int) -> Tuple[int, int]:
    """(num/den) + sign*delta as an integer pair; may be negative."""
    return num * delta.den + sign * delta.num * den, den * delta.den


def _interval_min(lo: Tuple[int, int], hi: Tuple[int, int]) -> Frac:
    lo_f = Frac(0, 1) if lo[0] <= 0 else Frac(lo[0], lo[1])
    return smallest_denominator_in_interval(lo_f, Frac(hi[0], hi[1]))


def approximate_unknown(req: ApproxRequest) -> Tuple[Frac, int]:
    """Smallest-denominator fraction within [alpha - delta, alpha + delta].

    Returns (fraction, queries spent). Denominator ties are broken toward the
    smaller numerator, so an interval reaching zero or below yields 0/1.
    Every oracle comparison counts as one query; comparisons forced by
    alpha > 0 (a nonpositive probe value) are answered without the oracle.
    """
    oracle = req.oracle
    delta = req.delta
    base = oracle.count
    # tightest bounds implied by past answers: lb < alpha < ub (value pairs)
    bound_lo = (0, 1)
    bound_hi = None

    def sign_vs(num: int, den: int) -> int:
        """sign(alpha - num/den); free when the value is not positive."""
        nonlocal bound_lo, bound_hi
        if num <= 0:
            return 1
        s = -oracle.compare(Frac(num, den)).value
        if s > 0 and num * bound_lo[1] > bound_lo[0] * den:
            bound_lo = (num, den)
        elif s < 0 and (bound_hi is None or num * bound_hi[1] < bound_hi[0] * den):
            bound_hi = (num, den)
        return s

    def zero_in_range() -> bool:
        # 0 lies in [alpha - delta, alpha + delta] iff alpha <= delta;
        # answered from the accumulated bounds when they already decide it
        if bound_lo[0] * delta.den >= delta.num * bound_lo[1]:
            return False  # alpha > lb >= delta
        if bound_hi is not None and bound_hi[0] * delta.den <= delta.num * bound_hi[1]:
            return True  # alpha < ub <= delta
        return sign_vs(delta.num, delta.den) <= 0

    # u = node reached, v = node one step shy; probe(t) = u + t*v
    u = (1, 1)
    s0 = sign_vs(1, 1)
    if s0 == 0:
        return _interval_min(_shift(1, 1, delta, -1), _shift(1, 1, delta, +1)), (
            oracle.count - base
        )
    descending = s0 < 0  # alpha < 1: walk down the unit interval
    v = (0, 1) if descending else (1, 0)
    first_run = True

    def probe(t: int) -> Tuple[int, int]:
        return u[0] + t * v[0], u[1] + t * v[1]

    def crossed(s: int) -> bool:
        return s >= 0 if descending else s <= 0

    def in_range_far(num: int, den: int) -> bool:
        # candidate sits past alpha in travel direction; test the far edge
        if descending:  # f <= alpha: in range iff f + delta >= alpha
            return sign_vs(*_shift(num, den, delta, +1)) <= 0
        return sign_vs(*_shift(num, den, delta, -1)) >= 0

    def in_range_near(num: int, den: int) -> bool:
        # candidate sits short of alpha; test the near edge
        if descending:  # f > alpha: in range iff f - delta <= alpha
            return sign_vs(*_shift(num, den, delta, -1)) >= 0
        return sign_vs(*_shift(num, den, delta, +1)) <= 0

    def finish(num: int, den: int) -> Tuple[Frac, int]:
        if zero_in_range():
            return Frac(0, 1), oracle.count - base  # denominator 1, numerator 0
        return Frac._raw(num, den), oracle.count - base

    def exact_hit(t: int) -> Tuple[Frac, int]:
        # probe(t) equals alpha exactly; the minimum is now pure arithmetic
        an, ad = probe(t)
        best = _interval_min(_shift(an, ad, delta, -1), _shift(an, ad, delta, +1))
        return best, oracle.count - base

    while True:
        i = 1
        hit_t = None
        while True:
            t = 2**i - 1
            s = sign_vs(*probe(t))
            if s == 0:
                hit_t = t
                break
            if crossed(s):
                break
            i += 1
        if hit_t is not None:
            return exact_hit(hit_t)
        lo_t, hi_t = 2 ** (i - 1) - 1, 2**i - 1
        while hi_t - lo_t > 1:
            mid = (lo_t + hi_t) // 2
            s = sign_vs(*probe(mid))
            if s == 0:
                return exact_hit(mid)
            if crossed(s):
                hi_t = mid
            else:
                lo_t = mid
        x = hi_t

        fx = probe(x)
        fx1 = probe(x - 1)
        if x > 1 or first_run:
            fx1_in = fx1[1] > 0 and in_range_near(*fx1)
        else:
            fx1_in = False  # x == 1: the shy node is the previous run's
            # landing fraction, already tested out of range
        if fx1_in:
            # minimal z whose fraction is in range; the predicate is monotone
            # along the run and the z = zhi anchor is known in-range
            zlo = -1 if first_run else 0
            zhi = x - 1
            while zhi - zlo > 1:
                mid = (zlo + zhi) // 2
                if in_range_near(*probe(mid)):
                    zhi = mid
                else:
                    zlo = mid
            return finish(*probe(zhi))
        if in_range_far(*fx):
            return finish(*fx)
        u, v = fx, fx1
        descending = not descending
        first_run = False


def best_approx_known(value_lo: Frac, value_hi: Frac, delta: Frac) -> Frac:
    """Verification oracle for a KNOWN target: the smallest-denominator
    fraction within delta of a real enclosed by [value_lo, value_hi].

    The enclosure must be no wider than delta/2 so the answer is unambiguous;
    the certainly-covered interval [value_hi - delta, value_lo + delta] is
    searched. For an exactly known rational pass value_lo == value_hi.
    """
    if delta.is_infinite or delta.num == 0:
        raise ValueError("delta must be positive and finite")
    if value_lo.is_infinite or value_hi.is_infinite:
        raise ValueError("enclosure must be finite")
    if compare(value_lo, value_hi) > 0:
        raise ValueError("enclosure is empty")
    width_num = value_hi.num * value_lo.den - value_lo.num * value_hi.den
    width_den = value_hi.den * value_lo.den
    if 2 * width_num * delta.den > delta.num * width_den:
        raise ValueError("enclosure too wide for this delta")
    return _interval_min(
        _shift(value_hi.num, value_hi.den, delta, -1),
        _shift(value_lo.num, value_lo.den, delta, +1),
    )


def approx_query_count(req: ApproxRequest) -> int:
    """Run approximate_unknown and report only the query spend."""
    _, queries = approximate_unknown(req)
    return queries


__all__ = [
    "ApproxRequest",
    "approximate_unknown",
    "best_approx_known",
    "approx_query_count",
    "PrecisionExhausted",
]
