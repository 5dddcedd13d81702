"""Counting comparison oracles over hidden rationals and hidden reals.

Every oracle answers the exact sign of (hidden - beta) for a queried
fraction beta and bumps a query counter by exactly one per call. Real-valued
targets are backed by integer arithmetic (square roots) or certified interval
refinement (pi, e); no answer is ever a rounded guess.
"""

from __future__ import annotations

import enum
from typing import Union

import mpmath

from .rational import Frac, parse_fraction


class ComparisonResult(enum.Enum):
    LESS = -1      # beta < hidden
    EQUAL = 0
    GREATER = 1    # beta > hidden

    @classmethod
    def from_sign(cls, sign_hidden_minus_beta: int) -> "ComparisonResult":
        # sign(hidden - beta) > 0 means beta < hidden
        if sign_hidden_minus_beta > 0:
            return cls.LESS
        if sign_hidden_minus_beta < 0:
            return cls.GREATER
        return cls.EQUAL


class PrecisionExhausted(Exception):
    """The configured digit budget cannot separate beta from the target."""


class _CountingOracle:
    def __init__(self):
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def read_count(self) -> int:
        return self._count

    def reset_count(self) -> None:
        self._count = 0

    def compare(self, beta: Frac) -> ComparisonResult:
        if beta.is_infinite:
            raise ValueError("cannot query the infinity sentinel")
        self._count += 1
        return ComparisonResult.from_sign(self._sign(beta))

    def _sign(self, beta: Frac) -> int:
        raise NotImplementedError


class RationalOracle(_CountingOracle):
    """Hidden exact rational target."""

    def __init__(self, hidden: Union[Frac, str]):
        super().__init__()
        if isinstance(hidden, str):
            hidden = parse_fraction(hidden)
        if hidden.is_infinite:
            raise ValueError("hidden value must be finite")
        self._hidden = hidden

    def _sign(self, beta: Frac) -> int:
        lhs = self._hidden.num * beta.den
        rhs = beta.num * self._hidden.den
        return (lhs > rhs) - (lhs < rhs)


def _square_free(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class RealOracle(_CountingOracle):
    """Hidden real target: sqrt(d) for square-free d, pi, or e.

    sqrt comparisons are exact integer inequalities. pi and e are compared
    through certified enclosures, refined on demand up to a digit budget
    (default 10000); exceeding it raises PrecisionExhausted.
    """

    def __init__(self, kind: str, precision_budget: int = 10_000):
        super().__init__()
        kind = kind.strip().lower()
        self.kind = kind
        self.precision_budget = precision_budget
        if kind.startswith("sqrt:"):
            d = int(kind.split(":", 1)[1])
            if not _square_free(d):
                raise ValueError(f"sqrt target must be square-free, got {d}")
            self._d = d
            self._mp_const = None
        elif kind == "pi":
            self._d = None
            self._mp_const = mpmath.pi
        elif kind == "e":
            self._d = None
            self._mp_const = mpmath.e
        else:
            raise ValueError(f"unknown real target {kind!r}")

    def _enclosure(self, prec: int):
        """Certified dyadic enclosure (lo_man, hi_man, exp) of the constant:
        lo_man*2^exp <= alpha <= hi_man*2^exp."""
        with mpmath.workprec(prec):
            approx = +self._mp_const
            sign, man, exp, _ = approx._mpf_
        man = int(man)
        if sign:
            raise AssertionError("targets are positive")
        # round-nearest result is within one unit in the last place
        return man - 1, man + 1, exp

    def _sign(self, beta: Frac) -> int:
        if self._d is not None:
            # sign(sqrt(d) - p/q) = sign(d*q^2 - p^2) for p/q >= 0
            lhs = self._d * beta.den * beta.den - beta.num * beta.num
            return (lhs > 0) - (lhs < 0)
        p, q = beta.num, beta.den
        prec = 64
        max_prec = max(128, int(self.precision_budget * 3.33) + 64)
        while prec <= max_prec:
            lo_man, hi_man, exp = self._enclosure(prec)
            # compare q*alpha against p with exact integers
            if exp >= 0:
                lo_side = q * lo_man * (1 << exp)
                hi_side = q * hi_man * (1 << exp)
                p_side = p
            else:
                lo_side = q * lo_man
                hi_side = q * hi_man
                p_side = p << (-exp)
            if lo_side > p_side:
                return 1
            if hi_side < p_side:
                return -1
            prec *= 2
        raise PrecisionExhausted(
            f"{self.kind} enclosure within {self.precision_budget} digits "
            f"cannot separate {beta}"
        )


ComparisonOracle = Union[RationalOracle, RealOracle]


def make_oracle(spec_text: str, precision_budget: int = 10_000) -> ComparisonOracle:
    """Build an oracle from "a/b", "sqrt:2", "pi", or "e"."""
    t = spec_text.strip().lower()
    if t in ("pi", "e") or t.startswith("sqrt:"):
        return RealOracle(t, precision_budget)
    return RationalOracle(parse_fraction(spec_text))
