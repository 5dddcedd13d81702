"""Mechanized query-complexity analysis: the per-segment cost function, the
exhaustive tuple-inequality verifier behind the upper-bound constant, the
growth rates of alternating-run families, and the worst-pair scan.

Every verdict (inequality holds / is violated) is decided with exact integer
arithmetic: a comparison S <= c*log2(R) with rational c = cn/cd is settled by
comparing R^cn against 2^(S*cd), via cached integer thresholds. Transcendental
values only ever appear in reported decimal renderings, never in verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction as _Q
from typing import Dict, Iterator, List, Optional, Tuple

import mpmath

from .rational import LEFT, RIGHT, Frac, SBPath, sb_path_to_fraction


def G(x: int) -> int:
    """Per-segment query budget 2*floor(log2 x) + 1."""
    if x < 1:
        raise ValueError(f"segment length must be positive, got {x}")
    return 2 * (x.bit_length() - 1) + 1


def _as_ratio(c) -> Tuple[int, int]:
    """Exact rational (cn, cd) from a decimal string, Fraction, or int pair."""
    if isinstance(c, tuple):
        q = _Q(*c)
    elif isinstance(c, str):
        q = _Q(c)
    else:
        q = _Q(c)  # int or Fraction; floats are rejected below
    if isinstance(c, float):
        raise TypeError("pass the constant as a decimal string, not a float")
    if q <= 0:
        raise ValueError(f"constant must be positive, got {c}")
    return q.numerator, q.denominator


def _min_power_reaching(exp_num: int, base_exp: int) -> int:
    """Smallest integer m with m^base_exp >= 2^exp_num (both exponents > 0)."""
    est = 2.0 ** (exp_num / base_exp)
    m = max(1, int(est) - 2)
    while m**base_exp < (1 << exp_num):
        m += 1
    return m


def threshold(c, terms: int, mode: str = "base_case") -> int:
    """Product bound above which the relaxed segment inequality holds.

    base_case: 2*log2(P) + terms <= c*log2(P)      -> P >= 2^(terms/(c-2))
    inductive_step: 2*log2(P) + terms <= c*log2(P/2) -> P >= 2^((terms+c)/(c-2))

    Returns the exact ceiling, decided by integer power comparisons.
    """
    cn, cd = _as_ratio(c)
    if cn <= 2 * cd:
        raise ValueError("constant must exceed 2")
    if terms < 1:
        raise ValueError("need at least one segment term")
    denom = cn - 2 * cd
    if mode == "base_case":
        num = terms * cd
    elif mode == "inductive_step":
        num = terms * cd + cn
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _min_power_reaching(num, denom)


@dataclass
class TupleScanReport:
    num_vars: int
    top: int
    constant_c: str
    mode: str
    violations: List[Tuple[int, ...]] = field(default_factory=list)
    argmax_tuple: Optional[Tuple[int, ...]] = None
    max_ratio: str = ""
    tuples_checked: int = 0

    @property
    def holds_everywhere(self) -> bool:
        return not self.violations


def _rhs_pair(xs: Tuple[int, ...], mode: str) -> Tuple[int, int]:
    """Exact RHS of the segment inequality as (numerator, denominator).

    Both modes expand the denominator recurrences d_i = d_{i-1} + x*m_{i-1},
    m_i = d_{i-1} + (x-1)*m_{i-1} across the tuple. Base cases start from
    (d0, m0) = (1, 1); the inductive step replaces the inherited ratio
    m/d by its worst value 1/2, i.e. starts from (1, 1/2). Denominators stay
    powers of two, so the pair is kept as integers scaled by 2.
    """
    if mode == "base_case":
        d_num, m_num, scale = 1, 1, 1
    else:
        d_num, m_num, scale = 2, 1, 2
    for x in xs:
        d_num, m_num = d_num + x * m_num, d_num + (x - 1) * m_num
    g = math.gcd(d_num, scale)
    return d_num // g, scale // g


def _tuples_with_product_at_most(num_vars: int, top: int) -> Iterator[Tuple[int, ...]]:
    xs = [0] * num_vars

    def rec(i: int, remaining: int):
        if i == num_vars - 1:
            for x in range(1, remaining + 1):
                xs[i] = x
                yield tuple(xs)
            return
        for x in range(1, remaining + 1):
            xs[i] = x
            yield from rec(i + 1, remaining // x)

    yield from rec(0, top)


class _ExactLogThresholds:
    """For fixed rational c, caches min{R : S <= c*log2(R)} per integer S,
    separately for integer and half-integer R."""

    def __init__(self, cn: int, cd: int):
        self.cn, self.cd = cn, cd
        self._int_cache: Dict[int, int] = {}
        self._half_cache: Dict[int, int] = {}

    def holds(self, s: int, r_num: int, r_den: int) -> bool:
        """s <= c*log2(r_num/r_den) with r_den in {1, 2}."""
        if r_den == 1:
            t = self._int_cache.get(s)
            if t is None:
                t = self._int_cache[s] = _min_power_reaching(s * self.cd, self.cn)
            return r_num >= t
        t = self._half_cache.get(s)
        if t is None:
            # s <= c*log2(R/2)  <=>  R >= 2^((s*cd + cn)/cn)
            t = self._half_cache[s] = _min_power_reaching(s * self.cd + self.cn, self.cn)
        return r_num >= t


def verify_tuple_inequality(
    num_vars: int, top: int, c, mode: str = "base_case",
    collect_limit: int = 1000,
) -> TupleScanReport:
    """Scan every tuple with product <= top and check
    sum(G(x_i)) <= c * log2(RHS(tuple)).

    Violations are collected (up to collect_limit); the tuple maximizing
    sum(G)/log2(RHS) is reported along with the ratio's decimal rendering.
    """
    if not 1 <= num_vars <= 4:
        raise ValueError("the analysis covers 1 to 4 segments at a time")
    if top < 1:
        raise ValueError("top must be positive")
    if mode not in ("base_case", "inductive_step"):
        raise ValueError(f"unknown mode {mode!r}")
    cn, cd = _as_ratio(c)
    thresholds = _ExactLogThresholds(cn, cd)
    report = TupleScanReport(
        num_vars=num_vars, top=top, constant_c=str(_Q(cn, cd)), mode=mode
    )

    # argmax tracking: float prefilter, exact comparison among near-ties
    best: List[Tuple[Tuple[int, ...], int, int, int]] = []  # (xs, s, rn, rd)
    best_ratio = -1.0
    for xs in _tuples_with_product_at_most(num_vars, top):
        report.tuples_checked += 1
        s = sum(G(x) for x in xs)
        rn, rd = _rhs_pair(xs, mode)
        if not thresholds.holds(s, rn, rd):
            if len(report.violations) < collect_limit:
                report.violations.append(xs)
        ratio = s / (math.log2(rn) - (1 if rd == 2 else 0))
        if ratio > best_ratio + 1e-12:
            best_ratio = ratio
            best = [(xs, s, rn, rd)]
        elif ratio > best_ratio - 1e-12:
            best.append((xs, s, rn, rd))

    if best:
        champion = best[0]
        for cand in best[1:]:
            if _ratio_greater(cand, champion):
                champion = cand
        xs, s, rn, rd = champion
        report.argmax_tuple = xs
        with mpmath.workdps(30):
            val = s / (mpmath.log(mpmath.mpf(rn) / rd) / mpmath.log(2))
            report.max_ratio = mpmath.nstr(val, 12)
    return report


def _ratio_greater(a, b) -> bool:
    """Exact comparison s_a/log2(R_a) > s_b/log2(R_b) via cross powers."""
    _, sa, rna, rda = a
    _, sb, rnb, rdb = b
    # log2(R) > 0 required: R > 1 always holds for these polynomials
    lhs = (_Q(rnb, rdb)) ** sa
    rhs = (_Q(rna, rda)) ** sb
    return lhs > rhs


def growth_rates(a: int, b: int, dps: int = 60):
    """Asymptotic per-segment denominator growth factors of the family of
    alternating runs (a, b, a, b, ...), as a pair of mpmath floats."""
    if a < 1 or b < 1:
        raise ValueError("run lengths must be positive")
    with mpmath.workdps(dps):
        am, bm = mpmath.mpf(a), mpmath.mpf(b)
        root = mpmath.sqrt(4 * am * bm + am * am * bm * bm)
        phi_a = (2 - 2 * bm / am + am * bm + root) / (2 * (1 + bm - bm / am))
        phi_b = (2 - 2 * am / bm + am * bm + root) / (2 * (1 + am - am / bm))
        return +phi_a, +phi_b


def comparisons_coefficient(a: int, b: int, dps: int = 60):
    """(G(a) + G(b)) / log2(phi_a * phi_b): queries per doubling of the
    denominator along the alternating family."""
    with mpmath.workdps(dps):
        phi_a, phi_b = growth_rates(a, b, dps)
        return (G(a) + G(b)) / (mpmath.log(phi_a * phi_b) / mpmath.log(2))


def worst_pair(max_run: int = 1000) -> Tuple[Tuple[int, int], object]:
    """Argmax of comparisons_coefficient over 1 <= a, b <= max_run.

    Exact ties (the coefficient depends only on floor-log2 sums and the
    product a*b) are broken toward the larger first component, then the
    smaller second.
    """
    best_val = -1.0
    cands: List[Tuple[int, int]] = []
    for a in range(1, max_run + 1):
        ga = G(a)
        for b in range(1, a + 1):  # coefficient is symmetric in (a, b)
            m = a * b
            # phi_a*phi_b = (m + 2 + sqrt(m^2 + 4m)) / 2, so the coefficient
            # only needs G-sum and the product
            val = (ga + G(b)) / math.log2((m + 2 + math.sqrt(m * m + 4 * m)) / 2)
            if val > best_val + 1e-12:
                best_val = val
                cands = [(a, b)]
            elif val > best_val - 1e-12:
                cands.append((a, b))
    with mpmath.workdps(50):
        exact = [(comparisons_coefficient(a, b, 50), (a, b)) for a, b in cands]
        top = max(v for v, _ in exact)
        finalists = [ab for v, ab in exact if mpmath.fabs(v - top) < mpmath.mpf("1e-40")]
    pair = max(finalists, key=lambda ab: (ab[0], -ab[1]))
    return pair, comparisons_coefficient(*pair)


def worst_case_fraction(a: int, b: int, k: int) -> Frac:
    """Fraction addressed by k copies of the alternating run pair (a, b)
    on the unit-interval tree."""
    if min(a, b, k) < 1:
        raise ValueError("run lengths and repetitions must be positive")
    runs = []
    for _ in range(k):
        runs.append((LEFT, a))
        runs.append((RIGHT, b))
    return sb_path_to_fraction(SBPath(tuple(runs)))


BOUND_CONSTANTS = {
    "four_segment": ("16/log2(73)", lambda: 16 / mpmath.log(73, 2), "2.5849"),
    "two_segment": ("10/log2(13)", lambda: 10 / mpmath.log(13, 2), "2.7024"),
    "one_segment": ("5/log2(3)", lambda: 5 / mpmath.log(3, 2), "3.1547"),
    "lower_bound": (
        "8/log2(5+2*sqrt(6))",
        lambda: 8 / mpmath.log(5 + 2 * mpmath.sqrt(6), 2),
        "2.4189",
    ),
}


@dataclass(frozen=True)
class BoundConstant:
    """One of the named analysis constants, with exact-expression rendering."""

    tag: str

    def expression(self) -> str:
        return BOUND_CONSTANTS[self.tag][0]

    def value(self, dps: int = 30):
        with mpmath.workdps(dps):
            return +BOUND_CONSTANTS[self.tag][1]()

    def render(self, digits: int = 6) -> str:
        with mpmath.workdps(digits + 10):
            return mpmath.nstr(self.value(digits + 10), digits)

    def stated_4dp(self) -> str:
        return BOUND_CONSTANTS[self.tag][2]
