"""Brute-force reference implementations, deliberately naive and independent of the library's algorithms."""

from __future__ import annotations

import itertools
from collections import deque

from fdfa.automata import Automaton, BuchiStates, CoBuchiStates, ParityColors


def run(a: Automaton, word, start=None):
    """Follow a deterministic automaton letter by letter over index words."""
    s = a.initial if start is None else start
    for x in word:
        (s,) = a.transitions[s][x]
    return s


def pairs(sigma, max_u: int, max_v: int):
    letters = range(len(sigma))
    for lu in range(max_u + 1):
        for u in itertools.product(letters, repeat=lu):
            for lv in range(1, max_v + 1):
                for v in itertools.product(letters, repeat=lv):
                    yield u, v


def naive_normalize(lead: Automaton, u, v):
    """Smallest ``(i, j)`` in lexicographic order, by trying every candidate on explicit words."""
    u, v = tuple(u), tuple(v)
    n = lead.state_count
    for i in range(n + 1):
        for j in range(1, n + 2):
            if run(lead, u + v * i) == run(lead, u + v * (i + j)):
                return u + v * i, v * j, i, j
    raise AssertionError("no repetition found")


def naive_accepts(f, u, v) -> bool:
    x, y, _, _ = naive_normalize(f.leading, u, v)
    prog = f.progress[run(f.leading, x)]
    return run(prog.automaton, y) in prog.accepting


def naive_det_accepts(a: Automaton, acc, u, v) -> bool:
    """Simulate far enough that the run is periodic, then collect one full period of states."""
    n = a.state_count
    word = tuple(u) + tuple(v) * (n + 1)
    s = run(a, word)
    seen = set()
    for x in tuple(v) * (n + 1):
        (s,) = a.transitions[s][x]
        seen.add(s)
    if isinstance(acc, BuchiStates):
        return bool(seen & acc.states)
    if isinstance(acc, CoBuchiStates):
        return not seen & acc.states
    if isinstance(acc, ParityColors):
        return min(acc.colors[s] for s in seen) % 2 == 1
    raise TypeError(acc)


def lasso_nba_accepts(a: Automaton, accepting, u, v) -> bool:
    """Graph search on ``states x positions`` of the lasso ``u v v v ...``.

    Accept iff an accepting node in the periodic part is reachable and lies on a cycle.
    """
    u, v = tuple(u), tuple(v)
    word = u + v
    period_start = len(u)

    def nxt(node):
        s, pos = node
        npos = pos + 1 if pos + 1 < len(word) else period_start
        return [(t, npos) for t in a.transitions[s][word[pos]]]

    start = (a.initial, 0)
    reach = {start}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for m in nxt(node):
            if m not in reach:
                reach.add(m)
                queue.append(m)
    for node in reach:
        s, pos = node
        if s not in accepting or pos < period_start:
            continue
        seen = set()
        queue = deque(nxt(node))
        while queue:
            m = queue.popleft()
            if m == node:
                return True
            if m not in seen:
                seen.add(m)
                queue.extend(nxt(m))
    return False


def omega_key(u, v):
    """A canonical form for ``u v^ω`` computed by a different route than the library:
    shift the longest common tail into the period, then take the least rotation
    of the primitive period whose placement reproduces the same stream."""
    u, v = tuple(u), tuple(v)
    n = len(v)
    p = next(d for d in range(1, n + 1) if n % d == 0 and v[:d] * (n // d) == v)
    v = v[:p]
    stream = u + v * 3
    # earliest position from which the stream is p-periodic
    start = len(u)
    while start > 0 and stream[start - 1] == stream[start - 1 + p]:
        start -= 1
    return stream[:start], stream[start:start + p]
