"""Translations between FDFAs and standard omega-automata.

Deterministic Büchi, co-Büchi and parity automata go to saturated FDFAs of
size ``(n, 2n)`` and ``(n, kn)``.  An FDFA goes to a nondeterministic Büchi
automaton recognizing ``⋃ M_q · N_{q,f}^ω``, where ``M_q`` is the set of
words leading to ``q`` and ``N_{q,f}`` the set of words that loop on ``q`` in
the leading automaton, drive ``P_q`` to the accepting state ``f`` and loop on
``f``.  ``nba_accepts_up`` is the membership oracle used to validate it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .algebra import SATURATION_CAVEAT
from .automata import (DFA, Automaton, AutomatonError, BuchiStates, CoBuchiStates, OmegaAutomaton,
                       ParityColors, WordLike, complete, product, reachable_states)
from .core import FDFA


@dataclass(frozen=True)
class NBA:
    automaton: Automaton
    accepting: frozenset[int]
    caveats: frozenset[str] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "caveats", frozenset(self.caveats))
        bad = [s for s in self.accepting if not 0 <= s < self.automaton.state_count]
        if bad:
            raise AutomatonError(f"Büchi set refers to unknown states {sorted(bad)}")

    @property
    def state_count(self) -> int:
        return self.automaton.state_count

    def accepts_up(self, u: WordLike, v: WordLike) -> bool:
        return nba_accepts_up(self, u, v)


# -- deterministic omega-automata to FDFAs -----------------------------------------

def _copies_fdfa(d: OmegaAutomaton, levels: list[int], entry, step, accepting_level) -> FDFA:
    """Progress DFAs made of ``len(levels)`` copies of ``d``.

    State ``(p, c)`` (``c`` the ``i``-th level) has index ``i * n + p``.
    ``entry(q)`` is the level of the initial state ``(q, .)``; ``step(c, p')``
    the level after moving to ``p'``.
    """
    a = d.automaton
    n = a.state_count
    table = a.table
    pos = {c: i for i, c in enumerate(levels)}
    labels = [(p, c) for c in levels for p in range(n)]
    rows = [[pos[step(c, table[p][s])] * n + table[p][s] for s in range(len(a.alphabet))]
            for p, c in labels]
    accepting = frozenset(i for i, (_, c) in enumerate(labels) if accepting_level(c))
    lead = Automaton(a.alphabet, n, a.initial, a.transitions, a.labels)
    progress = tuple(DFA(Automaton.from_table(a.alphabet, rows, pos[entry(q)] * n + q, labels), accepting)
                     for q in range(n))
    return FDFA(lead, progress)


def dba_to_fdfa(d: OmegaAutomaton) -> FDFA:
    """Two copies; move to copy 1 on entering a Büchi state; accept in copy 1."""
    if not isinstance(d.acceptance, BuchiStates):
        raise AutomatonError("dba_to_fdfa needs Büchi acceptance")
    alpha = d.acceptance.states
    return _copies_fdfa(d, [0, 1], lambda q: 0, lambda c, p: 1 if c == 1 or p in alpha else 0,
                        lambda c: c == 1)


def dca_to_fdfa(d: OmegaAutomaton) -> FDFA:
    """Two copies; move to copy 1 on entering a co-Büchi state; accept in copy 0."""
    if not isinstance(d.acceptance, CoBuchiStates):
        raise AutomatonError("dca_to_fdfa needs co-Büchi acceptance")
    alpha = d.acceptance.states
    return _copies_fdfa(d, [0, 1], lambda q: 0, lambda c, p: 1 if c == 1 or p in alpha else 0,
                        lambda c: c == 0)


def dpa_to_fdfa(d: OmegaAutomaton) -> FDFA:
    """``k`` copies tracking the least colour seen; initial ``(q, κ(q))``; accept in odd copies."""
    if not isinstance(d.acceptance, ParityColors):
        raise AutomatonError("dpa_to_fdfa needs parity acceptance")
    kappa = d.acceptance.colors
    levels = list(range(1, d.acceptance.k + 1))
    return _copies_fdfa(d, levels, lambda q: kappa[q], lambda c, p: min(c, kappa[p]),
                        lambda c: c % 2 == 1)


def omega_to_fdfa(d: OmegaAutomaton) -> FDFA:
    return {"dba": dba_to_fdfa, "dca": dca_to_fdfa, "dpa": dpa_to_fdfa}[d.kind](d)


# -- FDFA to NBA -------------------------------------------------------------------

@dataclass(frozen=True)
class MqDfa:
    dfa: DFA
    q: int


@dataclass(frozen=True)
class NqfDfa:
    """Product of three DFAs; ``labels[i] = (leading state, P_q state from ι_q, P_q state from f)``."""

    dfa: DFA
    q: int
    f: int


def build_mq(f: FDFA, q: int) -> MqDfa:
    """DFA for words on which the leading automaton reaches ``q``."""
    if q not in reachable_states(f.leading):
        raise AutomatonError(f"leading state {q} is unreachable")
    return MqDfa(DFA(f.leading, frozenset((q,))), q)


def build_nqf(f: FDFA, q: int, fst: int) -> NqfDfa:
    """DFA for words looping on ``q``, reaching ``fst`` from ``ι_q`` and looping on ``fst`` in ``P_q``.

    Only the part reachable from ``(q, ι_q, fst)`` is built, so it has at
    most ``n k^2`` states.
    """
    if q not in reachable_states(f.leading):
        raise AutomatonError(f"leading state {q} is unreachable")
    prog = f.progress[q]
    if fst not in prog.accepting:
        raise AutomatonError(f"state {fst} is not accepting in progress DFA {q}")
    pa = prog.automaton
    inner = product(pa, pa.with_initial(fst))
    prod = product(f.leading.with_initial(q), inner)
    labels = tuple((lq, p1, p2) for lq, i in prod.labels for p1, p2 in [inner.labels[i]])
    prod = Automaton(prod.alphabet, prod.state_count, prod.initial, prod.transitions, labels)
    final = frozenset(i for i, lab in enumerate(labels) if lab == (q, fst, fst))
    return NqfDfa(DFA(prod, final), q, fst)


build_Mq = build_mq
build_Nqf = build_nqf


def nba_state_bound(n: int, k: int) -> int:
    """``n k (n + n k^2)``: one leading copy and one ``N``-product per ``(q, f)``."""
    return n * k * (n + n * k * k)


def fdfa_to_nba(f: FDFA) -> NBA:
    """NBA for ``⋃_{q, f ∈ F_q} M_q · N_{q,f}^ω``; faithful when ``f`` is saturated.

    The ``M_q`` parts share one copy of the leading automaton.  Each
    ``N_{q,f}^ω`` part is the ``N_{q,f}`` product DFA plus a re-entry state
    that stands for "an ``N_{q,f}`` word was just completed": it takes the
    outgoing edges of the product's initial state, every edge into the
    product's accepting state is doubled into it, and it alone is Büchi
    accepting.  If the product's initial state has no incoming edges, or is
    itself accepting, it serves as the re-entry state and no state is added.
    The silent moves from ``q`` into the ``N`` part are replaced by copies of
    the re-entry state's edges.  Unreachable states are dropped.
    """
    lead = f.leading
    n = lead.state_count
    sigma = range(len(f.alphabet))
    rows: list[list[set[int]]] = [[{lead.table[p][a]} for a in sigma] for p in range(n)]
    labels: list = [("M", p) for p in range(n)]
    accepting: set[int] = set()

    for q in sorted(reachable_states(lead)):
        for fst in sorted(f.progress[q].accepting):
            nd = build_nqf(f, q, fst).dfa
            na = nd.automaton
            final = next(iter(nd.accepting), None)
            if final is None or not _nonempty_loop(na, final):
                continue
            base = len(rows)
            has_entry = any(na.initial in t for row in na.transitions for t in row)
            if na.initial == final or not has_entry:
                hub = base + na.initial
                extra = 0
            else:
                hub = base + na.state_count
                extra = 1
            part = [[{base + na.table[p][a]} for a in sigma] for p in range(na.state_count)]
            if extra:
                part.append([{base + na.table[na.initial][a]} for a in sigma])
            for row in part:
                for targets in row:
                    if base + final in targets:
                        targets.add(hub)
            rows.extend(part)
            labels.extend(("N", q, fst, lab) for lab in na.labels)
            if extra:
                labels.append(("N", q, fst, "re-entry"))
            accepting.add(hub)
            for a in sigma:
                rows[q][a] |= rows[hub][a]

    full = Automaton(f.alphabet, len(rows), lead.initial, tuple(tuple(r) for r in rows), labels)
    return _trim(NBA(full, frozenset(accepting), f.caveats | {SATURATION_CAVEAT}))


def _nonempty_loop(a: Automaton, final: int) -> bool:
    """Whether some nonempty word leads from the initial state to ``final``."""
    firsts = {q for row in [a.transitions[a.initial]] for t in row for q in t}
    return any(final in reachable_states(a, s) for s in firsts)


def _trim(b: NBA) -> NBA:
    """Restrict to states reachable from the initial state, renumbered in breadth-first order."""
    a = b.automaton
    order = [a.initial]
    index = {a.initial: 0}
    queue = deque(order)
    while queue:
        p = queue.popleft()
        for targets in a.transitions[p]:
            for q in sorted(targets):
                if q not in index:
                    index[q] = len(order)
                    order.append(q)
                    queue.append(q)
    rows = tuple(tuple(frozenset(index[q] for q in t) for t in a.transitions[p]) for p in order)
    labels = tuple(a.label(p) for p in order)
    trimmed = Automaton(a.alphabet, len(order), 0, rows, labels)
    return NBA(trimmed, frozenset(index[s] for s in b.accepting if s in index), b.caveats)


# -- NBA membership for ultimately periodic words ----------------------------------

def nba_accepts_up(b: NBA, u: WordLike, v: WordLike) -> bool:
    """Whether some run of ``b`` on ``u v^ω`` visits the Büchi set infinitely often.

    Builds the relation ``T_v``: ``(s, t, flag)`` when some run on ``v`` leads
    from ``s`` to ``t``, with ``flag`` set if such a run can touch an accepting
    state (endpoints included).  The word is accepted iff a state reachable
    from the ``u``-successors via ``T_v`` lies on a ``T_v`` cycle through a
    flagged edge.
    """
    a = b.automaton
    u, v = a.alphabet.encode(u), a.alphabet.encode(v)
    if not v:
        raise AutomatonError("period v must be nonempty")
    acc = b.accepting

    current = {a.initial}
    for x in u:
        current = {q for p in current for q in a.transitions[p][x]}

    # step[s] = {t: flagged}
    step: dict[int, dict[int, bool]] = {}
    for s in range(a.state_count):
        frontier = {s: s in acc}
        for x in v:
            nxt: dict[int, bool] = {}
            for p, flag in frontier.items():
                for q in a.transitions[p][x]:
                    nxt[q] = nxt.get(q, False) or flag or q in acc
            frontier = nxt
        step[s] = frontier

    def reach(sources) -> set[int]:
        seen = set(sources)
        queue = deque(seen)
        while queue:
            p = queue.popleft()
            for q in step[p]:
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    live = reach(current)
    for s in sorted(live):
        for t, flag in step[s].items():
            if flag and s in reach([t]):
                return True
    return False


def complete_nba(b: NBA) -> NBA:
    return NBA(complete(b.automaton), b.accepting, b.caveats)
