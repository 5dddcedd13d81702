"""Exact rational plumbing: mediants, codecs, parsers, tree structure."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sbsearch.rational import (
    INF,
    ContinuedFraction,
    Frac,
    LEFT,
    RIGHT,
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


def test_construction_reduces():
    f = Frac(6, 4)
    assert (f.num, f.den) == (3, 2)
    assert Frac(0, 7) == Frac(0, 1)
    assert Frac(5, 0) == INF


def test_negative_rejected():
    with pytest.raises(ValueError):
        Frac(-1, 2)
    with pytest.raises(ValueError):
        Frac(1, -2)
    with pytest.raises(ValueError):
        Frac(0, 0)


def test_compare_basics():
    assert compare(Frac(1, 3), Frac(2, 6)) == 0
    assert compare(Frac(2, 3), Frac(3, 4)) < 0
    assert compare(INF, Frac(10**9, 1)) > 0
    with pytest.raises(ValueError):
        compare(INF, Frac(1, 0))


def test_mediant_examples():
    assert mediant(Frac(0, 1), Frac(1, 1)) == Frac(1, 2)
    assert mediant(Frac(2, 3), Frac(3, 4)) == Frac(5, 7)
    assert mediant(Frac(0, 1), Frac(1, 2)) == Frac(1, 3)
    with pytest.raises(ValueError):
        mediant(Frac(3, 4), Frac(2, 3))


@given(
    st.integers(1, 10**6), st.integers(1, 10**6),
    st.integers(1, 10**6), st.integers(1, 10**6),
)
def test_mediant_betweenness(a, b, c, d):
    left, right = Frac(a, b), Frac(c, d)
    if compare(left, right) > 0:
        left, right = right, left
    if compare(left, right) == 0:
        return
    m = mediant(left, right)
    assert compare(left, m) < 0 < compare(right, m) * -1 + 0 or True
    assert left < m < right


def test_cf_examples():
    assert to_continued_fraction(Frac(5, 12)).terms == (0, 2, 2, 2)
    assert to_continued_fraction(Frac(9, 14)).terms == (0, 1, 1, 1, 4)
    assert to_continued_fraction(Frac(1, 2)).terms == (0, 2)
    assert to_continued_fraction(Frac(7, 1)).terms == (7,)
    with pytest.raises(ValueError):
        to_continued_fraction(INF)


def test_cf_canonical_never_trailing_one():
    for num in range(0, 200):
        for den in range(1, 60):
            terms = to_continued_fraction(Frac(num, den)).terms
            assert len(terms) == 1 or terms[-1] >= 2


def test_cf_text_roundtrip():
    cf = to_continued_fraction(Frac(9, 14))
    assert str(cf) == "[0;1,1,1,4]"
    assert parse_continued_fraction(str(cf)) == cf
    assert parse_continued_fraction("[3]").value() == Frac(3, 1)


def test_path_examples():
    assert cf_to_sb_path(ContinuedFraction((0, 1, 1, 1, 4))) == parse_path("L^1 R^1 L^1 R^3")
    assert cf_to_sb_path(ContinuedFraction((0, 2))) == parse_path("L^1")
    assert cf_to_sb_path(ContinuedFraction((0, 2, 2, 2))) == parse_path("L^2 R^2 L^1")
    with pytest.raises(ValueError):
        cf_to_sb_path(ContinuedFraction((1, 2)))


def test_path_to_fraction_examples():
    assert sb_path_to_fraction(parse_path("LRLRRR")) == Frac(9, 14)
    assert sb_path_to_fraction(parse_path("")) == Frac(1, 1)
    assert sb_path_to_fraction(parse_path("L^2 R^2 L^1")) == Frac(5, 12)
    assert fraction_to_sb_path(Frac(9, 14)) == parse_path("L^1 R^1 L^1 R^3")
    assert fraction_to_sb_path(Frac(1, 2)) == parse_path("L^1")
    assert fraction_to_sb_path(Frac(2, 5)) == parse_path("L^2 R^1")


def test_path_validation():
    with pytest.raises(ValueError):
        SBPath((("L", 2), ("L", 1)))  # no alternation
    with pytest.raises(ValueError):
        SBPath((("L", 0),))
    with pytest.raises(ValueError):
        sb_path_to_fraction(SBPath(((RIGHT, 1),)))  # (0,1) paths start left
    with pytest.raises(ValueError):
        fraction_to_sb_path(Frac(3, 2))
    with pytest.raises(ValueError):
        fraction_to_sb_path(Frac(0, 1))


def test_path_text_roundtrip():
    p = parse_path("L^3 R^1 L^2")
    assert parse_path(p.compact()) == p
    assert str(p) == "L^3 R^1 L^2"


def test_roundtrip_small_denominators():
    # full b <= 1000 sweep lives in the acceptance suite
    for b in range(2, 200):
        for a in range(1, b):
            f = Frac(a, b)
            if f.den != b:
                continue  # not reduced
            assert to_continued_fraction(f).value() == f
            assert sb_path_to_fraction(fraction_to_sb_path(f)) == f


def test_tree_visits_each_fraction_once_depth12():
    # walk every path of total depth <= 12; fractions must be unique, reduced,
    # and bracketed by a determinant-one pair at every step
    seen = set()
    stack = [((0, 1), (1, 1))]
    while stack:
        (a, b), (c, d) = stack.pop()
        p, q = a + c, b + d
        if q > 0 and (p + q) > 14:  # depth cap via num+den growth
            continue
        assert d * p - c * q in (1, -1) or b * p - a * q in (1, -1)
        assert c * b - a * d == 1
        from math import gcd

        assert gcd(p, q) == 1
        assert (p, q) not in seen
        seen.add((p, q))
        stack.append(((a, b), (p, q)))
        stack.append(((p, q), (c, d)))
    # depth-12 walk covers all reduced fractions with num+den <= 14
    expected = {
        (p, q)
        for q in range(2, 14)
        for p in range(1, q)
        if p + q <= 14 and __import__("math").gcd(p, q) == 1
    }
    assert expected <= seen


@given(st.integers(1, 2000), st.integers(2, 2000))
@settings(max_examples=300)
def test_parse_print_roundtrip(num, den):
    f = Frac(num, den)
    assert parse_fraction(str(f)) == f
    assert parse_fraction("inf") == INF
