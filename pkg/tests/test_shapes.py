from functools import lru_cache
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from dualequiv.campaigns import trim_skew_shapes
from dualequiv.shapes import (
    SkewShape,
    Tableau,
    conjugate,
    content_reading_word,
    count_syt,
    enumerate_syt,
    format_word,
    is_yamanouchi,
    jdt_rectify,
    parse_word,
    partitions,
    row_reading_word,
    signature,
    standardize_yam,
    superstandard,
    yamanouchi_words,
)
from dualequiv.words import p_tableau, syam_member


@lru_cache(maxsize=None)
def corner_count(la):
    """Number of SYT by removing the cell holding the largest entry."""
    if sum(la) == 0:
        return 1
    total = 0
    for r in range(len(la)):
        if r + 1 == len(la) or la[r + 1] < la[r]:
            smaller = list(la)
            smaller[r] -= 1
            total += corner_count(tuple(p for p in smaller if p))
    return total


GOLDEN = Tableau.from_rows([[1, 2, 5, 7], [3, 6, 9], [4, 8]])
SKEW = Tableau(SkewShape((4, 1, 1), (2,)), ((1, 4), (2,), (3,)))


def test_golden_reading_words():
    assert format_word(content_reading_word(GOLDEN)) == "438162957"
    assert format_word(row_reading_word(GOLDEN)) == "483691257"
    assert signature(content_reading_word(GOLDEN)) == "+--+-+-+"
    assert signature(row_reading_word(GOLDEN)) == "+--+-+-+"


def test_skew_reading_words():
    assert format_word(content_reading_word(SKEW)) == "3214"
    assert format_word(row_reading_word(SKEW)) == "3214"
    assert signature(content_reading_word(SKEW)) == "--+"


def test_conjugate_involution():
    for n in range(1, 13):
        for la in partitions(n):
            assert conjugate(conjugate(la)) == la


def test_conjugate_example():
    assert conjugate((4, 3, 2, 2)) == (4, 4, 2, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_syt_counts_match_corner_recursion(n):
    for la in partitions(n):
        assert count_syt(la) == corner_count(la)
        if n <= 7:
            assert len(enumerate_syt(la)) == corner_count(la)


def test_enumeration_order_and_standardness():
    tabs = enumerate_syt((3, 2))
    words = [row_reading_word(t) for t in tabs]
    assert words == sorted(words)
    assert all(t.is_standard() for t in tabs)


def test_empty_shape_has_one_tableau():
    assert len(enumerate_syt(SkewShape((), ()))) == 1
    assert signature((1,)) == ""


@pytest.mark.parametrize("n", range(1, 7))
def test_row_and_content_words_share_signature(n):
    for shape in trim_skew_shapes(n):
        for t in enumerate_syt(shape):
            assert signature(row_reading_word(t)) == signature(content_reading_word(t))


@pytest.mark.parametrize("n", range(1, 7))
def test_rectification_matches_insertion(n):
    for shape in trim_skew_shapes(n):
        for t in enumerate_syt(shape):
            assert jdt_rectify(t).rows == p_tableau(row_reading_word(t)).rows


def test_yamanouchi_condition_is_weak():
    assert is_yamanouchi([2, 5, 4, 3, 2, 4, 3, 1, 1, 2, 1])
    assert not is_yamanouchi([2, 1, 2])


@pytest.mark.parametrize("n", range(1, 8))
def test_standardized_yamanouchi_words_are_syam(n):
    perms = list(permutations(range(1, n + 1)))
    for la in partitions(n):
        got = {standardize_yam(y) for y in yamanouchi_words(la)}
        assert got == {w for w in perms if syam_member(w, la)}


def test_superstandard_fills_rows_from_bottom():
    assert superstandard((3, 2)).rows == ((1, 2, 3), (4, 5))


def test_word_format_roundtrip():
    assert parse_word("15342") == (1, 5, 3, 4, 2)
    w = tuple(range(10, 0, -1))
    assert parse_word(format_word(w)) == w


def test_skew_shape_json_roundtrip():
    s = SkewShape((4, 3, 1, 1), (2, 2))
    assert SkewShape.from_json(s.to_json()) == s
    assert s.to_json() == {"outer": [4, 3, 1, 1], "inner": [2, 2]}


def test_invalid_skew_shape_rejected():
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=6))
def test_conjugate_preserves_size(parts):
    la = tuple(sorted(parts, reverse=True))
    assert sum(conjugate(la)) == sum(la)
