"""Strategies and small fixtures shared by the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from fdfa.automata import DFA, Automaton
from fdfa.core import FDFA
from fdfa.algebra import complement
from fdfa.families import AB, deterministic_fixtures, emptiness_trap, fig1_saturated
from fdfa.translations import omega_to_fdfa


def random_fdfas(max_n=3, max_k=3):
    """Arbitrary complete FDFAs over {a, b}."""
    def table(n):
        return st.lists(st.lists(st.integers(0, n - 1), min_size=2, max_size=2), min_size=n, max_size=n)

    def dfa():
        return st.integers(1, max_k).flatmap(lambda k: st.builds(
            lambda t, acc: DFA(Automaton.from_table(AB, t), frozenset(acc)), table(k), st.sets(st.integers(0, k - 1))))

    return st.integers(1, max_n).flatmap(lambda n: st.builds(
        lambda t, ps: FDFA(Automaton.from_table(AB, t), tuple(ps)),
        table(n), st.lists(dfa(), min_size=n, max_size=n)))


def constant(value: bool) -> FDFA:
    """Accepts every pair, or none."""
    lead = Automaton.from_table(AB, [[0, 0]])
    return FDFA(lead, (DFA(lead, frozenset({0} if value else ())),))


def eventually_b() -> FDFA:
    """One leading state; the period must consist of b's only."""
    lead = Automaton.from_table(AB, [[0, 0]])
    prog = DFA(Automaton.from_table(AB, [[2, 1], [2, 1], [2, 2]]), frozenset({1}))
    return FDFA(lead, (prog,))


def saturated_ab() -> dict[str, FDFA]:
    """Saturated FDFAs over {a, b} that are small enough for exhaustive oracles."""
    s = fig1_saturated()
    out = {"S": s, "S^c": complement(s), "all": constant(True), "none": constant(False),
           "ev-b": eventually_b(), "trap": emptiness_trap()}
    for name, d in deterministic_fixtures().items():
        if d.automaton.alphabet == AB and d.automaton.state_count == 2:
            out[name] = omega_to_fdfa(d)
    return out


def brute_bound(*fs: FDFA) -> tuple[int, int]:
    """``(n, n k)``, maximized over the given FDFAs: enough for a shortest self-normalized witness."""
    return max(f.size().n for f in fs), max(f.size().n * f.size().k for f in fs)
