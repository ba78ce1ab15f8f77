from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from fdfa.words import UPWord, canonicalize, primitive_root, up_equal, up_prefix

from oracles import omega_key

words = st.lists(st.sampled_from("ab"), max_size=5).map(tuple)
periods = st.lists(st.sampled_from("ab"), min_size=1, max_size=5).map(tuple)


def long_prefix(u, v, n=60):
    s = tuple(u)
    while len(s) < n:
        s += tuple(v)
    return s[:n]


def test_upword_requires_period():
    with pytest.raises(ValueError):
        UPWord("ab", "")


def test_upword_unpacks_and_prints():
    u, v = UPWord("ab", "ba")
    assert (u, v) == (("a", "b"), ("b", "a"))
    assert str(UPWord("", "ab")) == "ε(ab)^ω"


@pytest.mark.parametrize("v, root", [("abab", "ab"), ("aaa", "a"), ("aba", "aba"), ("b", "b")])
def test_primitive_root(v, root):
    assert primitive_root(v) == tuple(root)


def test_primitive_root_empty():
    with pytest.raises(ValueError):
        primitive_root("")


def test_examples():
    assert up_equal(("ab", "ab"), ("", "ab"))
    assert up_equal(("a", "ba"), ("ab", "ab"))
    assert not up_equal(("", "ab"), ("", "ba"))
    assert canonicalize(("abab", "abab")) == UPWord("", "ab")
    assert canonicalize(("ba", "aa")) == UPWord("b", "a")
    assert up_prefix(("ab", "c"), 5) == tuple("abccc")
    assert up_prefix(("abc", "d"), 2) == tuple("ab")


@given(words, periods, st.integers(0, 12))
def test_prefix_matches_unrolling(u, v, n):
    assert up_prefix((u, v), n) == long_prefix(u, v, n)


@given(words, periods, words, periods)
@settings(max_examples=300)
def test_up_equal_matches_long_prefix(u1, v1, u2, v2):
    # beyond max|u| + 2 lcm <= 5 + 40 letters, both streams are periodic
    assert up_equal((u1, v1), (u2, v2)) == (long_prefix(u1, v1) == long_prefix(u2, v2))


@given(words, periods)
def test_canonical_is_equal_and_idempotent(u, v):
    c = canonicalize((u, v))
    assert up_equal((u, v), c)
    assert canonicalize(c) == c
    assert primitive_root(c.v) == c.v


@given(words, periods, words, periods)
@settings(max_examples=300)
def test_canonical_form_decides_equality(u1, v1, u2, v2):
    same = canonicalize((u1, v1)) == canonicalize((u2, v2))
    assert same == up_equal((u1, v1), (u2, v2))


@given(words, periods)
def test_canonical_agrees_with_independent_key(u, v):
    c = canonicalize((u, v))
    assert (c.u, c.v) == omega_key(u, v)


@given(words, periods, st.integers(0, 3), st.integers(1, 3))
def test_shifting_and_powering_preserve_the_word(u, v, i, j):
    assert up_equal((u, v), (u + v * i, v * j))
