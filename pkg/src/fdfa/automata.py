"""Finite automata over indexed alphabets.

States are dense integers ``0 .. state_count - 1`` and symbols are indices into
an :class:`Alphabet`.  Transition tables map ``(state, symbol)`` to a frozenset
of successors, so the same type covers deterministic and nondeterministic
machines.  Acceptance conditions are kept separate from the transition
structure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence, Union

Word = tuple[int, ...]
WordLike = Union[str, Sequence[str], Sequence[int]]


class AutomatonError(ValueError):
    """Raised on malformed input: unknown symbols, bad state indices, etc."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise AutomatonError("alphabet must contain at least one symbol")
        for s in symbols:
            if not isinstance(s, str) or not s or not s.isprintable() or "," in s:
                raise AutomatonError(f"invalid symbol name {s!r}")
        if len(set(symbols)) != len(symbols):
            raise AutomatonError(f"duplicate symbols in {list(symbols)}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AutomatonError(f"symbol {symbol!r} not in alphabet {list(self.symbols)}") from None

    def encode(self, word: WordLike) -> Word:
        """Map a word to symbol indices.

        Accepts a plain string (one character per symbol), a sequence of symbol
        names, or a sequence of indices, which is range-checked and passed
        through.
        """
        out = []
        for a in word:
            if isinstance(a, str):
                out.append(self.index(a))
            elif isinstance(a, int) and 0 <= a < len(self.symbols):
                out.append(a)
            else:
                raise AutomatonError(f"symbol {a!r} not in alphabet {list(self.symbols)}")
        return tuple(out)

    def decode(self, word: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.symbols[a] for a in word)

    def spell(self, word: Iterable[int]) -> str:
        """Render an index word; comma-joined when symbol names are longer than one character."""
        names = self.decode(word)
        return "".join(names) if self.single_char else ",".join(names)

    def parse_word(self, text: str) -> Word:
        """Inverse of :meth:`spell`.  Commas always separate symbols when present."""
        if text == "":
            return ()
        if "," in text or not self.single_char:
            return self.encode([t.strip() for t in text.split(",") if t.strip()])
        return self.encode(text)

    def words(self, max_len: int, min_len: int = 0) -> Iterator[Word]:
        """All index words with ``min_len <= len <= max_len`` in length-lexicographic order."""
        letters = range(len(self.symbols))
        layer: list[Word] = [()]
        for n in range(max_len + 1):
            if n >= min_len:
                yield from layer
            if n < max_len:
                layer = [w + (a,) for w in layer for a in letters]


@dataclass(frozen=True)
class Automaton:
    """Transition structure ``<alphabet, states, initial, transitions>``.

    ``transitions[p][a]`` is the frozenset of ``a``-successors of ``p``.
    ``labels`` optionally records where each state came from (for products,
    the component pair); it does not take part in equality.
    """

    alphabet: Alphabet
    state_count: int
    initial: int
    transitions: tuple[tuple[frozenset[int], ...], ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(tuple(frozenset(t) for t in row) for row in self.transitions)
        object.__setattr__(self, "transitions", rows)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        n = self.state_count
        if not isinstance(n, int) or n < 1:
            raise AutomatonError(f"state_count must be a positive integer, got {n!r}")
        if not 0 <= self.initial < n:
            raise AutomatonError(f"initial state {self.initial} out of range [0, {n})")
        if len(rows) != n:
            raise AutomatonError(f"expected {n} transition rows, got {len(rows)}")
        for p, row in enumerate(rows):
            if len(row) != len(self.alphabet):
                raise AutomatonError(f"state {p}: expected {len(self.alphabet)} symbol entries, got {len(row)}")
            for targets in row:
                for q in targets:
                    if not isinstance(q, int) or not 0 <= q < n:
                        raise AutomatonError(f"state {p}: successor {q!r} out of range [0, {n})")
        if self.labels is not None and len(self.labels) != n:
            raise AutomatonError("labels must name every state")

    @classmethod
    def from_table(cls, alphabet: Alphabet, table: Sequence[Sequence[int]], initial: int = 0,
                   labels=None) -> Automaton:
        """Deterministic complete automaton from ``table[state][symbol] -> state``."""
        rows = tuple(tuple(frozenset((q,)) for q in row) for row in table)
        return cls(alphabet, len(rows), initial, rows, labels)

    @classmethod
    def from_edges(cls, alphabet: Alphabet, state_count: int, initial: int,
                   edges: Iterable[tuple[int, int, int]], labels=None) -> Automaton:
        rows = [[set() for _ in alphabet.symbols] for _ in range(state_count)]
        for p, a, q in edges:
            if not 0 <= p < state_count:
                raise AutomatonError(f"edge source {p} out of range [0, {state_count})")
            if not 0 <= a < len(alphabet):
                raise AutomatonError(f"edge symbol index {a} out of range")
            rows[p][a].add(q)
        return cls(alphabet, state_count, initial, tuple(tuple(r) for r in rows), labels)

    @cached_property
    def is_deterministic(self) -> bool:
        return all(len(t) <= 1 for row in self.transitions for t in row)

    @cached_property
    def is_complete(self) -> bool:
        return all(t for row in self.transitions for t in row)

    @property
    def partial(self) -> bool:
        return not self.is_complete

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        """``table[p][a]`` for deterministic complete automata."""
        if not (self.is_deterministic and self.is_complete):
            raise AutomatonError("operation requires a deterministic complete automaton")
        return tuple(tuple(next(iter(t)) for t in row) for row in self.transitions)

    def successors(self, state: int, symbol: int) -> frozenset[int]:
        return self.transitions[state][symbol]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for p, row in enumerate(self.transitions):
            for a, targets in enumerate(row):
                for q in sorted(targets):
                    yield p, a, q

    def run(self, state: int, word: WordLike) -> int:
        table = self.table
        for a in self.alphabet.encode(word):
            state = table[state][a]
        return state

    def with_initial(self, state: int) -> Automaton:
        if state == self.initial:
            return self
        return Automaton(self.alphabet, self.state_count, state, self.transitions, self.labels)

    def label(self, state: int) -> Hashable:
        return state if self.labels is None else self.labels[state]


# -- acceptance payloads ---------------------------------------------------

@dataclass(frozen=True)
class FinalStates:
    states: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))


@dataclass(frozen=True)
class BuchiStates:
    states: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))


@dataclass(frozen=True)
class CoBuchiStates:
    states: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))


@dataclass(frozen=True)
class ParityColors:
    """Colour per state, values in ``[1..k]``; a run accepts iff the least colour seen infinitely often is odd."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if not colors or any(not isinstance(c, int) or c < 1 for c in colors):
            raise AutomatonError(f"parity colours must be integers >= 1, got {list(colors)}")

    @property
    def k(self) -> int:
        return max(self.colors)


Acceptance = Union[FinalStates, BuchiStates, CoBuchiStates, ParityColors]


def check_acceptance(a: Automaton, acc: Acceptance) -> None:
    if isinstance(acc, ParityColors):
        if len(acc.colors) != a.state_count:
            raise AutomatonError(f"parity colouring covers {len(acc.colors)} states, automaton has {a.state_count}")
        return
    bad = [s for s in acc.states if not 0 <= s < a.state_count]
    if bad:
        raise AutomatonError(f"acceptance refers to unknown states {sorted(bad)}")


@dataclass(frozen=True)
class DFA:
    automaton: Automaton
    accepting: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        check_acceptance(self.automaton, FinalStates(self.accepting))

    @property
    def alphabet(self) -> Alphabet:
        return self.automaton.alphabet

    @property
    def state_count(self) -> int:
        return self.automaton.state_count

    def accepts(self, word: WordLike) -> bool:
        return self.automaton.run(self.automaton.initial, word) in self.accepting

    def complement(self) -> DFA:
        return DFA(self.automaton, frozenset(range(self.state_count)) - self.accepting)


@dataclass(frozen=True)
class OmegaAutomaton:
    """Deterministic complete automaton with a Büchi, co-Büchi or parity condition."""

    automaton: Automaton
    acceptance: Acceptance

    def __post_init__(self):
        if isinstance(self.acceptance, FinalStates):
            raise AutomatonError("final-state acceptance is not an omega condition")
        check_acceptance(self.automaton, self.acceptance)

    @property
    def kind(self) -> str:
        if isinstance(self.acceptance, BuchiStates):
            return "dba"
        if isinstance(self.acceptance, CoBuchiStates):
            return "dca"
        return "dpa"

    def accepts_up(self, u: WordLike, v: WordLike) -> bool:
        return det_accepts_up(self.automaton, self.acceptance, u, v)


# -- operations -------------------------------------------------------------

def run_dfa(a: Automaton, start: int, word: WordLike) -> int:
    return a.run(start, word)


def _same_alphabet(a1: Automaton, a2: Automaton) -> None:
    if a1.alphabet != a2.alphabet:
        raise AutomatonError(f"alphabet mismatch: {list(a1.alphabet)} vs {list(a2.alphabet)}")


def product(a1: Automaton, a2: Automaton, full: bool = False) -> Automaton:
    """Synchronous product of two deterministic complete automata.

    By default only pairs reachable from ``(initial1, initial2)`` are built,
    numbered in breadth-first order.  With ``full=True`` every pair is present
    and ``(q1, q2)`` has index ``q1 * |a2| + q2``.  Either way ``labels[i]`` is
    the component pair of state ``i``.
    """
    _same_alphabet(a1, a2)
    t1, t2 = a1.table, a2.table
    sigma = range(len(a1.alphabet))
    if full:
        n2 = a2.state_count
        pairs = [(p, q) for p in range(a1.state_count) for q in range(n2)]
        table = [[t1[p][a] * n2 + t2[q][a] for a in sigma] for p, q in pairs]
        return Automaton.from_table(a1.alphabet, table, a1.initial * n2 + a2.initial, pairs)

    start = (a1.initial, a2.initial)
    index = {start: 0}
    pairs = [start]
    table: list[list[int]] = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        row = []
        for a in sigma:
            nxt = (t1[p][a], t2[q][a])
            if nxt not in index:
                index[nxt] = len(pairs)
                pairs.append(nxt)
            row.append(index[nxt])
        table.append(row)
        i += 1
    return Automaton.from_table(a1.alphabet, table, 0, pairs)


def _product_dfa(d1: DFA, d2: DFA, accept, full: bool) -> DFA:
    prod = product(d1.automaton, d2.automaton, full=full)
    final = {i for i, (p, q) in enumerate(prod.labels) if accept(p in d1.accepting, q in d2.accepting)}
    return DFA(prod, frozenset(final))


def dfa_and(d1: DFA, d2: DFA, full: bool = False) -> DFA:
    """Product DFA with accepting set ``F1 x F2``."""
    return _product_dfa(d1, d2, lambda x, y: x and y, full)


def dfa_or(d1: DFA, d2: DFA, full: bool = False) -> DFA:
    """Product DFA with accepting set ``F1 x A2  ∪  A1 x F2``."""
    return _product_dfa(d1, d2, lambda x, y: x or y, full)


def complete(a: Automaton) -> Automaton:
    """Add a single sink (highest index, never accepting) if any edge is missing."""
    if a.is_complete:
        return a
    sink = a.state_count
    rows = [tuple(t if t else frozenset((sink,)) for t in row) for row in a.transitions]
    rows.append(tuple(frozenset((sink,)) for _ in a.alphabet.symbols))
    labels = None if a.labels is None else a.labels + ("sink",)
    return Automaton(a.alphabet, sink + 1, a.initial, tuple(rows), labels)


def complete_dfa(d: DFA) -> DFA:
    return DFA(complete(d.automaton), d.accepting)


def reachable_states(a: Automaton, start: int | None = None) -> set[int]:
    start = a.initial if start is None else start
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for targets in a.transitions[p]:
            for q in targets:
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
    return seen


def shortest_words_to(a: Automaton, start: int | None = None) -> dict[int, Word]:
    """Breadth-first access words (ties broken by alphabet order) for each reachable state."""
    start = a.initial if start is None else start
    words = {start: ()}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for sym, targets in enumerate(a.transitions[p]):
            for q in sorted(targets):
                if q not in words:
                    words[q] = words[p] + (sym,)
                    queue.append(q)
    return words


def det_accepts_up(a: Automaton, acc: Acceptance, u: WordLike, v: WordLike) -> bool:
    """Whether the unique run of ``a`` on ``u v^ω`` satisfies ``acc``.

    The run is followed over ``u`` and then over copies of ``v`` until a state
    at a ``v``-boundary recurs; the states traversed between the two
    occurrences (both ends included) are exactly those visited infinitely often.
    """
    u, v = a.alphabet.encode(u), a.alphabet.encode(v)
    if not v:
        raise AutomatonError("period v must be nonempty")
    table = a.table
    state = a.initial
    for x in u:
        state = table[state][x]
    boundary = {state: 0}
    segments: list[set[int]] = []
    while True:
        seg = {state}
        for x in v:
            state = table[state][x]
            seg.add(state)
        segments.append(seg)
        if state in boundary:
            break
        boundary[state] = len(segments)
    inf = set().union(*segments[boundary[state]:])

    if isinstance(acc, BuchiStates):
        return bool(inf & acc.states)
    if isinstance(acc, CoBuchiStates):
        return not inf & acc.states
    if isinstance(acc, ParityColors):
        return min(acc.colors[s] for s in inf) % 2 == 1
    raise AutomatonError(f"{type(acc).__name__} is not an omega acceptance condition")
