from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from fdfa.automata import AutomatonError
from fdfa.core import accepts, validate
from fdfa.families import (fdfa_fixtures, fig1_saturated, fig1_unsaturated, gen_ln, ln_alphabet,
                           ln_semantic_member)

from oracles import pairs


def test_fig1_shapes():
    for f in (fig1_unsaturated(), fig1_saturated()):
        assert f.size() == (2, 2)
        assert validate(f) == []
        assert f.leading.labels == ("l", "r")


@pytest.mark.parametrize("n", range(1, 7))
def test_ln_size(n):
    inst = gen_ln(n)
    assert inst.size() == (n + 1, n * n)
    assert validate(inst.fdfa) == []
    assert len(inst.fdfa.progress) == n + 1


def test_ln_rejects_bad_n():
    with pytest.raises(AutomatonError):
        gen_ln(0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ln_matches_semantics(n):
    inst = gen_ln(n)
    for u, v in pairs(inst.alphabet, 3, 4):
        assert inst.accepts(u, v) == ln_semantic_member(n, u, v)


def test_worked_examples():
    sigma4 = ln_alphabet(4)
    assert gen_ln(4).accepts(sigma4.parse_word("2331"), sigma4.parse_word("22343233"))
    assert ln_semantic_member(4, "2331", "22343233")
    assert not gen_ln(3).accepts("1", "233")
    assert not ln_semantic_member(3, "1", "233")


def semantic_by_definition(n, u, v):
    """Letter-by-letter check on a long unrolling: no letter is followed by one more than one larger,
    and the letters seen infinitely often are those of the period."""
    w = [int(c) for c in u + v * (len(u) + 3)]
    return all(b <= a + 1 for a, b in zip(w, w[1:])) and len(set(v)) % 2 == 1


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.text(alphabet="".join(str(i) for i in range(1, n + 1)), max_size=5),
    st.text(alphabet="".join(str(i) for i in range(1, n + 1)), min_size=1, max_size=6))))
@settings(max_examples=300, deadline=None)
def test_ln_random_words(args):
    n, u, v = args
    expected = semantic_by_definition(n, u, v)
    assert ln_semantic_member(n, u, v) == expected
    assert gen_ln(n).accepts(u, v) == expected


def test_ln_multichar_alphabet():
    inst = gen_ln(10)
    sigma = inst.alphabet
    assert sigma.parse_word("10,1") == (9, 0)
    # 10 may be followed by 1; the period {1, 2, 3} has three letters
    assert inst.accepts(sigma.parse_word("10"), sigma.parse_word("1,2,3"))
    assert not inst.accepts(sigma.parse_word("1,3"), sigma.parse_word("1"))


def test_fixture_names():
    assert set(fdfa_fixtures()) == {"fig1-U", "fig1-S", "L2", "L3"}


def test_saturated_fixture_language():
    s = fig1_saturated()
    for u, v in pairs(s.alphabet, 2, 4):
        assert accepts(s, u, v) == (len(set(v)) == 1)
