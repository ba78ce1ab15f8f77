"""Families of DFAs: data model, pair normalization and acceptance."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .automata import DFA, Alphabet, Automaton, AutomatonError, Word, WordLike


class FdfaSize(NamedTuple):
    n: int
    k: int

    def __str__(self) -> str:
        return f"({self.n}, {self.k})"


@dataclass(frozen=True)
class NormalizedPair:
    """``x = u v^i`` and ``y = v^j`` with ``(i, j)`` smallest such that the
    leading automaton is in the same state after ``x`` and after ``x y``."""

    x: tuple[str, ...]
    y: tuple[str, ...]
    i: int
    j: int
    state: int


@dataclass(frozen=True)
class FDFA:
    """A leading automaton plus one progress DFA per leading state.

    ``caveats`` carries advisory flags (for instance, that a construction is
    only meaningful for saturated inputs).  It is not part of equality.
    """

    leading: Automaton
    progress: tuple[DFA, ...]
    caveats: frozenset[str] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "progress", tuple(self.progress))
        object.__setattr__(self, "caveats", frozenset(self.caveats))

    @property
    def alphabet(self) -> Alphabet:
        return self.leading.alphabet

    def size(self) -> FdfaSize:
        return size(self)

    def accepts(self, u: WordLike, v: WordLike) -> bool:
        return accepts(self, u, v)


def _loop(lead: Automaton, u: Word, v: Word) -> tuple[int, int, int, int]:
    """Returns ``(i, j, state after u v^i, state after u)``."""
    table = lead.table
    state = lead.initial
    for a in u:
        state = table[state][a]
    start = state
    first_seen = {state: 0}
    t = 0
    while True:
        for a in v:
            state = table[state][a]
        t += 1
        if state in first_seen:
            i = first_seen[state]
            return i, t - i, state, start
        first_seen[state] = t


def normalize(lead: Automaton, u: WordLike, v: WordLike) -> NormalizedPair:
    u, v = lead.alphabet.encode(u), lead.alphabet.encode(v)
    if not v:
        raise AutomatonError("period v must be nonempty")
    i, j, q, _ = _loop(lead, u, v)
    sym = lead.alphabet.decode
    return NormalizedPair(sym(u + v * i), sym(v * j), i, j, q)


def accepts(f: FDFA, u: WordLike, v: WordLike) -> bool:
    """Membership of ``(u, v)``: normalize against the leading automaton, then
    run the progress DFA of the reached state on ``v^j``.

    Only the repetition counts are kept; ``x`` and ``y`` are never built.
    """
    u, v = f.alphabet.encode(u), f.alphabet.encode(v)
    if not v:
        raise AutomatonError("period v must be nonempty")
    _, j, q, _ = _loop(f.leading, u, v)
    prog = f.progress[q]
    table = prog.automaton.table
    p = prog.automaton.initial
    for _ in range(j):
        for a in v:
            p = table[p][a]
    return p in prog.accepting


def size(f: FDFA) -> FdfaSize:
    return FdfaSize(f.leading.state_count, max(p.state_count for p in f.progress))


def _structure_issues(where: str, a: Automaton) -> list[str]:
    issues = []
    for p, row in enumerate(a.transitions):
        for s, targets in enumerate(row):
            name = a.alphabet.symbols[s]
            if not targets:
                issues.append(f"{where}: state {p} has no transition on {name!r}")
            elif len(targets) > 1:
                issues.append(f"{where}: state {p} is nondeterministic on {name!r} -> {sorted(targets)}")
    return issues


def validate(f: FDFA) -> list[str]:
    """Located diagnostics for every broken FDFA invariant; empty when well formed."""
    diags = _structure_issues("leading", f.leading)
    n = f.leading.state_count
    if len(f.progress) != n:
        diags.append(f"progress count mismatch: leading automaton has {n} states but {len(f.progress)} progress DFAs are given")
    for q, prog in enumerate(f.progress):
        where = f"progress[{q}]"
        if prog.alphabet != f.alphabet:
            diags.append(f"{where}: alphabet {list(prog.alphabet)} differs from leading alphabet {list(f.alphabet)}")
        diags.extend(_structure_issues(where, prog.automaton))
    return diags
