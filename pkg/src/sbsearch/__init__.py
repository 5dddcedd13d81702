"""Identification and best rational approximation of hidden numbers from
three-valued comparison queries, via compressed Stern-Brocot tree traversal.

Public surface: exact rational plumbing (`Frac`, continued fractions, tree
paths), counting oracles, the compressed tree search, the two-phase grid
search, interval approximation, the query-complexity verifier, and the
benchmark harness behind the `sbsearch` CLI.
"""

from .approx import (
    ApproxRequest,
    approx_query_count,
    approximate_unknown,
    best_approx_known,
)
from .bounds import (
    BoundConstant,
    G,
    TupleScanReport,
    comparisons_coefficient,
    growth_rates,
    threshold,
    verify_tuple_inequality,
    worst_case_fraction,
    worst_pair,
)
from .km import ExactHit, GridInterval, km_phase1, km_search, smallest_denominator_in_interval
from .oracles import (
    ComparisonResult,
    PrecisionExhausted,
    RationalOracle,
    RealOracle,
    make_oracle,
)
from .rational import (
    INF,
    ONE,
    ZERO,
    ContinuedFraction,
    Frac,
    SBPath,
    cf_to_sb_path,
    compare,
    fraction_to_sb_path,
    mediant,
    parse_continued_fraction,
    parse_fraction,
    parse_path,
    sb_path_to_fraction,
    to_continued_fraction,
)
from .search import (
    SearchBracket,
    SearchTrace,
    exponential_search,
    rational_search_bounded,
    rational_search_unbounded,
    segment_binary_search,
)

__version__ = "1.0.0"
