"""Concrete FDFAs and omega-automata used as fixtures and witnesses.

* the two two-state families over ``{a, b}``: an unsaturated one (``U``) and
  a saturated one (``S``) for "eventually only a's or only b's";
* the succinctness family ``L_n`` over letters ``1..n``: a letter ``i`` may
  only be followed by a letter ``<= i + 1``, and an odd number of distinct
  letters occurs infinitely often;
* a handful of small deterministic Büchi / co-Büchi / parity automata.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (DFA, Alphabet, Automaton, AutomatonError, BuchiStates, CoBuchiStates,
                       OmegaAutomaton, ParityColors, WordLike)
from .core import FDFA, FdfaSize

AB = Alphabet(("a", "b"))
L, R = 0, 1  # leading states of both two-state families


def _dfa(table, accepting, initial=0, alphabet=AB) -> DFA:
    return DFA(Automaton.from_table(alphabet, table, initial), frozenset(accepting))


def fig1_unsaturated() -> FDFA:
    # l -b-> l, l -a-> r, r -a,b-> l
    lead = Automaton.from_table(AB, [[R, L], [L, L]], L, labels=("l", "r"))
    p_l = _dfa([[0, 0]], {0})                 # accepts everything
    p_r = _dfa([[0, 1], [1, 1]], {1})         # accepts words containing b
    return FDFA(lead, (p_l, p_r))


def fig1_saturated() -> FDFA:
    # l -a-> l, l -b-> r, r -b-> r, r -a-> l
    lead = Automaton.from_table(AB, [[L, R], [L, R]], L, labels=("l", "r"))
    p_l = _dfa([[0, 1], [1, 1]], {0})         # a*
    p_r = _dfa([[1, 0], [1, 1]], {0})         # b*
    return FDFA(lead, (p_l, p_r))


def emptiness_trap() -> FDFA:
    """Empty language although ``P_0`` accepts words: every word it accepts
    contains an ``a`` and so leaves leading state 0 for good."""
    lead = Automaton.from_table(AB, [[1, 0], [1, 1]])
    p_0 = _dfa([[1, 0], [1, 1]], {1})
    p_1 = _dfa([[0, 0]], set())
    return FDFA(lead, (p_0, p_1))


# -- L_n ----------------------------------------------------------------------

def ln_alphabet(n: int) -> Alphabet:
    return Alphabet(tuple(str(i) for i in range(1, n + 1)))


@dataclass(frozen=True)
class LnInstance:
    n: int
    fdfa: FDFA

    @property
    def alphabet(self) -> Alphabet:
        return self.fdfa.alphabet

    def size(self) -> FdfaSize:
        return self.fdfa.size()

    def accepts(self, u: WordLike, v: WordLike) -> bool:
        return self.fdfa.accepts(u, v)


def gen_ln(n: int) -> LnInstance:
    """Saturated FDFA of size ``(n + 1, n^2)`` for ``L_n``.

    Leading state 0 is the absorbing violation state; state ``i`` means the
    last letter read was ``i`` (the initial state is ``n``, which permits any
    first letter).  Every non-violation state shares the same progress DFA,
    tracking the least and greatest letter read; it accepts when their
    difference is even.  Progress state ``(s, b)`` has index ``(s-1)*n + (b-1)``.
    """
    if not isinstance(n, int) or n < 1:
        raise AutomatonError(f"L_n needs n >= 1, got {n!r}")
    sigma = ln_alphabet(n)
    letters = range(1, n + 1)

    lead_table = [[0] * n]
    lead_table += [[j if j <= i + 1 else 0 for j in letters] for i in letters]
    lead = Automaton.from_table(sigma, lead_table, n, labels=("⊥",) + tuple(f"q{i}" for i in letters))

    sink = DFA(Automaton.from_table(sigma, [[0] * n]), frozenset())

    def idx(s, b):
        return (s - 1) * n + (b - 1)

    pairs = [(s, b) for s in letters for b in letters]
    table = [[idx(min(s, c), max(b, c)) for c in letters] for s, b in pairs]
    accepting = {idx(s, b) for s, b in pairs if (b - s) % 2 == 0}
    minmax = DFA(Automaton.from_table(sigma, table, idx(n, 1), labels=pairs), frozenset(accepting))

    return LnInstance(n, FDFA(lead, (sink,) + (minmax,) * n))


def ln_semantic_member(n: int, u: WordLike, v: WordLike) -> bool:
    """Direct membership test of ``u v^ω`` in ``L_n``, independent of any automaton."""
    sigma = ln_alphabet(n)
    u = [int(sigma.symbols[a]) for a in sigma.encode(u)]
    v = [int(sigma.symbols[a]) for a in sigma.encode(v)]
    if not v:
        raise AutomatonError("period v must be nonempty")
    w = u + v + v
    if any(b > a + 1 for a, b in zip(w, w[1:])):
        return False
    return len(set(v)) % 2 == 1


# -- deterministic omega-automata ----------------------------------------------

def inf_often_a_dba() -> OmegaAutomaton:
    """State 1 means "last letter was a"; Büchi on it = infinitely many a's."""
    return OmegaAutomaton(Automaton.from_table(AB, [[1, 0], [1, 0]]), BuchiStates({1}))


def fin_often_a_dca() -> OmegaAutomaton:
    """Co-Büchi dual of :func:`inf_often_a_dba`: finitely many a's."""
    return OmegaAutomaton(Automaton.from_table(AB, [[1, 0], [1, 0]]), CoBuchiStates({1}))


def inf_often_a_dpa() -> OmegaAutomaton:
    return OmegaAutomaton(Automaton.from_table(AB, [[1, 0], [1, 0]]), ParityColors((2, 1)))


def three_color_dpa() -> OmegaAutomaton:
    """Over {a, b, c}: accept iff c occurs finitely often and a occurs infinitely often."""
    abc = Alphabet(("a", "b", "c"))
    # state = last letter read; initial state behaves like "b"
    table = [[0, 1, 2]] * 3
    return OmegaAutomaton(Automaton.from_table(abc, table, 1), ParityColors((3, 4, 2)))


def a_then_b_forever_dba() -> OmegaAutomaton:
    """Some a occurs, then infinitely many b's.  States: 0 before any a, 1 after an a, 2 = 1 just on b."""
    return OmegaAutomaton(Automaton.from_table(AB, [[1, 0], [1, 2], [1, 2]]), BuchiStates({2}))


def safety_no_bb_dca() -> OmegaAutomaton:
    """Never two consecutive b's: co-Büchi with an absorbing rejecting sink."""
    table = [[0, 1], [0, 2], [2, 2]]
    return OmegaAutomaton(Automaton.from_table(AB, table), CoBuchiStates({2}))


def mod3_parity_dpa() -> OmegaAutomaton:
    """Counts a's mod 3 with colours 1,2,3; least colour seen infinitely often decides."""
    table = [[1, 0], [2, 1], [0, 2]]
    return OmegaAutomaton(Automaton.from_table(AB, table), ParityColors((2, 1, 3)))


def deterministic_fixtures() -> dict[str, OmegaAutomaton]:
    return {
        "inf-a-dba": inf_often_a_dba(),
        "fin-a-dca": fin_often_a_dca(),
        "inf-a-dpa": inf_often_a_dpa(),
        "three-color-dpa": three_color_dpa(),
        "a-then-inf-b-dba": a_then_b_forever_dba(),
        "no-bb-dca": safety_no_bb_dca(),
        "mod3-dpa": mod3_parity_dpa(),
    }


def fdfa_fixtures() -> dict[str, FDFA]:
    return {
        "fig1-U": fig1_unsaturated(),
        "fig1-S": fig1_saturated(),
        "L2": gen_ln(2).fdfa,
        "L3": gen_ln(3).fdfa,
    }
