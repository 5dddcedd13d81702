"""Exact nonnegative rationals, continued fractions, and compressed
Stern-Brocot paths, with lossless conversions between the three.

Values are plain immutable objects over Python ints, so everything here is
arbitrary precision. The only "fraction arithmetic" offered is the mediant
and exact comparison; the tree machinery never needs more than that.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Tuple


class Frac:
    """Reduced fraction num/den with num, den >= 0.

    den == 0 is allowed only for the infinity sentinel 1/0 used as the upper
    bracket of the generalized tree. 0 is represented as 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if num < 0 or den < 0:
            raise ValueError(f"negative rationals are out of scope: {num}/{den}")
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a fraction")
            num = 1  # canonical infinity sentinel
        else:
            g = gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num: int, den: int) -> "Frac":
        """Internal: wrap an already-reduced pair without a gcd pass."""
        f = object.__new__(cls)
        object.__setattr__(f, "num", num)
        object.__setattr__(f, "den", den)
        return f

    def __setattr__(self, name, value):
        raise AttributeError("Frac is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Frac)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def _cmp(self, other: "Frac") -> int:
        if self.is_infinite and other.is_infinite:
            raise ValueError("cannot compare infinity with infinity")
        lhs = self.num * other.den
        rhs = other.num * self.den
        return (lhs > rhs) - (lhs < rhs)

    def __lt__(self, other: "Frac") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Frac") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Frac") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Frac") -> bool:
        return self._cmp(other) >= 0

    def __repr__(self) -> str:
        return f"Frac({self.num}, {self.den})"

    def __str__(self) -> str:
        return "inf" if self.is_infinite else f"{self.num}/{self.den}"


INF = Frac(1, 0)
ZERO = Frac(0, 1)
ONE = Frac(1, 1)


def parse_fraction(text: str) -> Frac:
    """Parse "num/den", a bare integer, or "inf"."""
    t = text.strip()
    if t == "inf":
        return INF
    if "/" in t:
        a, b = t.split("/", 1)
        return Frac(int(a), int(b))
    return Frac(int(t), 1)


def compare(a: Frac, b: Frac) -> int:
    """Exact three-way comparison: -1, 0, or +1. Infinity beats any finite."""
    return a._cmp(b)


def mediant(left: Frac, right: Frac) -> Frac:
    """Mediant of an ordered pair; rejects left >= right."""
    if compare(left, right) >= 0:
        raise ValueError(f"mediant requires left < right, got {left} >= {right}")
    return Frac(left.num + right.num, left.den + right.den)


# --- continued fractions ---------------------------------------------------


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical finite expansion [a0; a1, ..., ak].

    a0 >= 0, interior terms >= 1, and the last term is >= 2 whenever there is
    more than one term, so each rational has exactly one representation.
    """

    terms: Tuple[int, ...]

    def __post_init__(self):
        t = self.terms
        if not t:
            raise ValueError("empty continued fraction")
        if t[0] < 0 or any(x < 1 for x in t[1:]):
            raise ValueError(f"invalid terms {t}")
        if len(t) > 1 and t[-1] < 2:
            raise ValueError(f"non-canonical trailing term in {t}")

    def value(self) -> Frac:
        """Evaluate the expansion back to the exact fraction."""
        num, den = 1, 0
        for a in reversed(self.terms):
            num, den = a * num + den, num
        return Frac(num, den)

    def __str__(self) -> str:
        head = str(self.terms[0])
        if len(self.terms) == 1:
            return f"[{head}]"
        return f"[{head};{','.join(str(a) for a in self.terms[1:])}]"


def parse_continued_fraction(text: str) -> ContinuedFraction:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"bad continued fraction literal: {text!r}")
    body = t[1:-1]
    if ";" in body:
        head, rest = body.split(";", 1)
        terms = [int(head)] + [int(x) for x in rest.split(",") if x.strip()]
    else:
        terms = [int(body)]
    return ContinuedFraction(tuple(terms))


def to_continued_fraction(f: Frac) -> ContinuedFraction:
    """Euclidean expansion of a finite nonnegative fraction."""
    if f.is_infinite:
        raise ValueError("infinity has no continued fraction")
    terms = []
    num, den = f.num, f.den
    while den:
        q, r = divmod(num, den)
        terms.append(q)
        num, den = den, r
    # Euclid can end with a trailing 1 ([0;1,1,1,4] comes out as such already
    # canonical); normalize [..., a, 1] -> [..., a+1] just in case.
    if len(terms) > 1 and terms[-1] == 1:
        terms[-2] += 1
        terms.pop()
    return ContinuedFraction(tuple(terms))


# --- compressed Stern-Brocot paths ------------------------------------------

LEFT = "L"
RIGHT = "R"


@dataclass(frozen=True)
class SBPath:
    """Run-length encoded root-to-node path, e.g. L^1 R^1 L^1 R^3.

    Directions strictly alternate and every exponent is >= 1. The empty path
    addresses the descent start itself.
    """

    runs: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        for i, (d, x) in enumerate(self.runs):
            if d not in (LEFT, RIGHT):
                raise ValueError(f"bad direction {d!r}")
            if x < 1:
                raise ValueError(f"bad exponent {x}")
            if i and self.runs[i - 1][0] == d:
                raise ValueError("runs must alternate direction")

    def exponents(self) -> Tuple[int, ...]:
        return tuple(x for _, x in self.runs)

    def __str__(self) -> str:
        return " ".join(f"{d}^{x}" for d, x in self.runs) if self.runs else "<root>"

    def compact(self) -> str:
        return "".join(d * x for d, x in self.runs)


def parse_path(text: str) -> SBPath:
    """Parse "L^3 R^1" or compact "LLLR" into a path."""
    t = text.strip()
    if not t or t == "<root>":
        return SBPath(())
    runs = []
    if "^" in t:
        for part in t.replace(",", " ").split():
            d, x = part.split("^")
            runs.append((d.strip(), int(x)))
    else:
        for ch in t:
            if runs and runs[-1][0] == ch:
                runs[-1] = (ch, runs[-1][1] + 1)
            else:
                runs.append((ch, 1))
    return SBPath(tuple(runs))


def cf_to_sb_path(cf: ContinuedFraction) -> SBPath:
    """Path of a rational in (0,1): runs L^a1 R^a2 ... with the last block
    shortened by one step."""
    t = cf.terms
    if t[0] != 0 or len(t) < 2:
        raise ValueError(f"{cf} is not in (0,1)")
    exps = list(t[1:])
    exps[-1] -= 1
    if exps[-1] == 0:
        exps.pop()
    runs = []
    d = LEFT
    for x in exps:
        runs.append((d, x))
        d = RIGHT if d == LEFT else LEFT
    return SBPath(tuple(runs))


def sb_path_to_fraction(path: SBPath) -> Frac:
    """Follow a path from the (0,1)-tree sentinels using one closed-form jump
    per run rather than single mediant steps."""
    u = (1, 1)  # node reached so far (descent start)
    v = (0, 1)  # node one step shy within the pending direction
    first = True
    for d, x in path.runs:
        if first and d == RIGHT:
            raise ValueError("paths inside (0,1) start with L")
        first = False
        un, ud = u
        vn, vd = v
        u = (un + x * vn, ud + x * vd)
        v = (un + (x - 1) * vn, ud + (x - 1) * vd)
    return Frac._raw(*u)


def fraction_to_sb_path(f: Frac) -> SBPath:
    """Inverse of sb_path_to_fraction for fractions strictly inside (0,1)."""
    if f.is_infinite or f.num == 0 or compare(f, ONE) >= 0:
        raise ValueError(f"{f} is not strictly inside (0,1)")
    return cf_to_sb_path(to_continued_fraction(f))
