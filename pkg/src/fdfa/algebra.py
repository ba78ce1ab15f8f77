"""Boolean operations and decision procedures on FDFAs."""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automata import AutomatonError, Word, dfa_and, dfa_or, product, shortest_words_to
from .core import FDFA, accepts
from .words import canonicalize, up_equal

SATURATION_CAVEAT = "requires-saturated-inputs"

Pair = tuple[tuple[str, ...], tuple[str, ...]]


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its resource budget."""


def complement(f: FDFA) -> FDFA:
    """Same structure, every progress accepting set complemented."""
    return FDFA(f.leading, tuple(p.complement() for p in f.progress), f.caveats)


def _combine(f1: FDFA, f2: FDFA, op, full: bool) -> FDFA:
    if f1.alphabet != f2.alphabet:
        raise AutomatonError(f"alphabet mismatch: {list(f1.alphabet)} vs {list(f2.alphabet)}")
    lead = product(f1.leading, f2.leading, full=full)
    progress = tuple(op(f1.progress[q1], f2.progress[q2], full=full) for q1, q2 in lead.labels)
    return FDFA(lead, progress, f1.caveats | f2.caveats | {SATURATION_CAVEAT})


def intersect(f1: FDFA, f2: FDFA, full: bool = False) -> FDFA:
    """Product of leading automata; progress for ``(q1, q2)`` is ``P_q1 ⊗ P_q2``.

    Correct for saturated inputs; the result carries a caveat flag saying so.
    ``full=True`` materializes the whole product, giving size ``(n1 n2, k1 k2)``.
    """
    return _combine(f1, f2, dfa_and, full)


def union(f1: FDFA, f2: FDFA, full: bool = False) -> FDFA:
    """As :func:`intersect` with ``P_q1 ⊕ P_q2`` progress DFAs."""
    return _combine(f1, f2, dfa_or, full)


# -- emptiness and friends ------------------------------------------------------

@dataclass(frozen=True)
class EmptinessWitness:
    """An accepted pair that is its own normalization: lead(x) = lead(xy), P_lead(x) accepts y."""

    x: tuple[str, ...]
    y: tuple[str, ...]


def _find_self_normalized(f: FDFA) -> Optional[tuple[Word, Word]]:
    lead = f.leading.table
    nsym = len(f.alphabet)
    for q, x in shortest_words_to(f.leading).items():
        prog = f.progress[q]
        ptab = prog.automaton.table
        start = (q, prog.automaton.initial)
        # y must be nonempty, so the search starts from the successors of start
        words: dict[tuple[int, int], Word] = {}
        queue = deque()
        for a in range(nsym):
            node = (lead[q][a], ptab[start[1]][a])
            if node not in words:
                words[node] = (a,)
                queue.append(node)
        while queue:
            node = queue.popleft()
            if node[0] == q and node[1] in prog.accepting:
                return x, words[node]
            for a in range(nsym):
                nxt = (lead[node[0]][a], ptab[node[1]][a])
                if nxt not in words:
                    words[nxt] = words[node] + (a,)
                    queue.append(nxt)
    return None


def emptiness_witness(f: FDFA) -> Optional[EmptinessWitness]:
    """Shortest accepted self-normalized pair, or ``None`` when ``L(f)`` is empty.

    Leading states are tried in breadth-first order from the initial state; for
    each, ``y`` is the shortest word (alphabet order on ties).
    """
    found = _find_self_normalized(f)
    if found is None:
        return None
    x, y = found
    if not accepts(f, x, y):
        raise AssertionError(f"emptiness witness {(x, y)} failed re-verification")
    dec = f.alphabet.decode
    return EmptinessWitness(dec(x), dec(y))


def is_empty(f: FDFA) -> bool:
    return emptiness_witness(f) is None


def universality_counterexample(f: FDFA) -> Optional[EmptinessWitness]:
    """A pair rejected by ``f``, or ``None`` if ``f`` accepts every pair."""
    w = emptiness_witness(complement(f))
    if w is not None and accepts(f, w.x, w.y):
        raise AssertionError(f"universality counterexample {w} failed re-verification")
    return w


def is_universal(f: FDFA) -> bool:
    return universality_counterexample(f) is None


def containment_witness(f1: FDFA, f2: FDFA) -> Optional[EmptinessWitness]:
    """A pair accepted by ``f1`` and rejected by ``f2``; ``None`` means ``L(f1) ⊆ L(f2)``.

    Decided as emptiness of ``f1 ∩ complement(f2)``, which is sound for saturated inputs.
    """
    w = emptiness_witness(intersect(f1, complement(f2)))
    if w is not None and not (accepts(f1, w.x, w.y) and not accepts(f2, w.x, w.y)):
        # only possible when an input is unsaturated and the product misreads a period
        raise AutomatonError(f"containment is undefined here: candidate witness {w} does not re-verify, "
                             "so at least one input is not saturated")
    return w


def is_contained(f1: FDFA, f2: FDFA) -> bool:
    return containment_witness(f1, f2) is None


def is_equal(f1: FDFA, f2: FDFA) -> bool:
    return is_contained(f1, f2) and is_contained(f2, f1)


def equality_witness(f1: FDFA, f2: FDFA) -> Optional[EmptinessWitness]:
    return containment_witness(f1, f2) or containment_witness(f2, f1)


# -- saturation -------------------------------------------------------------------

class Verdict(str, enum.Enum):
    SATURATED_UP_TO_BOUND = "saturated-up-to-bound"
    SATURATED_EXACT = "saturated-exact"
    UNSATURATED = "unsaturated"


@dataclass(frozen=True)
class SaturationLoop:
    """Where the exact search found a violation: ``(u, (v1 v2)^l)`` vs ``(u v1, (v2 v1)^r)``."""

    q: int
    q_prime: int
    u: tuple[str, ...]
    v1: tuple[str, ...]
    v2: tuple[str, ...]
    l: int
    r: int


@dataclass(frozen=True)
class SaturationReport:
    verdict: Verdict
    counterexample: Optional[tuple[Pair, Pair]]
    bound_used: str
    loop: Optional[SaturationLoop] = None
    counterexamples: tuple[tuple[Pair, Pair], ...] = ()

    def __post_init__(self):
        if (self.counterexample is None) != (self.verdict is not Verdict.UNSATURATED):
            raise ValueError("a counterexample is present exactly when the verdict is unsaturated")

    @property
    def saturated(self) -> bool:
        return self.verdict is not Verdict.UNSATURATED


def _verified(f: FDFA, p1: tuple[Word, Word], p2: tuple[Word, Word]) -> tuple[Pair, Pair]:
    if not up_equal(p1, p2) or accepts(f, *p1) == accepts(f, *p2):
        raise AssertionError(f"saturation counterexample {p1} / {p2} failed re-verification")
    dec = f.alphabet.decode
    return (dec(p1[0]), dec(p1[1])), (dec(p2[0]), dec(p2[1]))


def _pair_order(p):
    return len(p[0]) + len(p[1]), len(p[0]), p


def check_saturation_bounded(f: FDFA, max_u: int, max_v: int, all_classes: bool = False) -> SaturationReport:
    """Refute saturation by brute force over pairs with ``|u| <= max_u`` and ``1 <= |v| <= max_v``.

    Pairs are enumerated by total length, then prefix length, then
    lexicographically, and grouped by the omega-word they spell.  The first
    group (in order of first appearance) holding both an accepted and a
    rejected pair gives the counterexample; with ``all_classes`` one
    counterexample per mixed group is collected as well.
    """
    if max_u < 0 or max_v < 1:
        raise ValueError("bounds must satisfy max_u >= 0 and max_v >= 1")
    sigma = f.alphabet
    us = list(sigma.words(max_u))
    vs = list(sigma.words(max_v, min_len=1))
    pairs = sorted(itertools.product(us, vs), key=_pair_order)

    groups: dict = {}
    for u, v in pairs:
        key = canonicalize((u, v))
        groups.setdefault(key, {}).setdefault(accepts(f, u, v), (u, v))

    found = []
    for g in groups.values():
        if len(g) == 2:
            first, second = sorted((g[True], g[False]), key=_pair_order)
            found.append(_verified(f, first, second))
            if not all_classes:
                break
    bound = f"|u| <= {max_u}, 1 <= |v| <= {max_v}"
    if found:
        return SaturationReport(Verdict.UNSATURATED, found[0], bound,
                                counterexamples=tuple(found) if all_classes else ())
    return SaturationReport(Verdict.SATURATED_UP_TO_BOUND, None, bound)


@dataclass(frozen=True)
class TransformTriple:
    """State maps induced by one word on the leading automaton and two progress DFAs."""

    lead: tuple[int, ...]
    p: tuple[int, ...]
    p_prime: tuple[int, ...]

    def then(self, other: TransformTriple) -> TransformTriple:
        """The triple of ``w1 w2`` given ``self`` for ``w1`` and ``other`` for ``w2``."""
        return TransformTriple(tuple(other.lead[s] for s in self.lead),
                               tuple(other.p[s] for s in self.p),
                               tuple(other.p_prime[s] for s in self.p_prime))


def _transform_monoid(tables, budget: int) -> list[tuple[TransformTriple, Word]]:
    """Breadth-first closure of the identity triple under right extension by letters."""
    ident = TransformTriple(*(tuple(range(len(t))) for t in tables))
    nsym = len(tables[0][0])
    letters = [TransformTriple(*(tuple(row[a] for row in t) for t in tables)) for a in range(nsym)]
    reps = {ident: ()}
    order = [ident]
    queue = deque([ident])
    while queue:
        chi = queue.popleft()
        for a, step in enumerate(letters):
            nxt = chi.then(step)
            if nxt not in reps:
                reps[nxt] = reps[chi] + (a,)
                order.append(nxt)
                if len(order) ** 2 > budget:
                    raise BudgetExceeded(
                        f"exact saturation check infeasible at this size: more than {len(order)} "
                        f"transformation classes ({len(order) ** 2} pairs > budget {budget})")
                queue.append(nxt)
    return [(chi, reps[chi]) for chi in order]


def _orbit_acceptance(g: tuple[int, ...], start: int, accepting: frozenset[int], k: int) -> list[bool]:
    """``[g^l(start) in accepting for l in 1..k]``."""
    out = []
    s = start
    for _ in range(k):
        s = g[s]
        out.append(s in accepting)
    return out


def check_saturation_exact(f: FDFA, budget: int = 4_000_000) -> SaturationReport:
    """Decide saturation exactly by searching the finite transformation monoid.

    For each reachable leading state ``q`` (with a shortest access word ``u``)
    and each leading state ``q'``, the reachable triples of state maps of
    ``(leading, P_q, P_q')`` are enumerated.  For every pair of classes
    ``(v1, v2)`` with ``v1: q -> q'`` and ``v2: q' -> q`` on the leading
    automaton, the pairs ``(u, (v1 v2)^l)`` and ``(u v1, (v2 v1)^r)`` spell the
    same omega-word and are both self-normalized, so their acceptance is read
    directly off the composed progress maps for ``l, r`` in ``1..k``.

    ``budget`` caps the number of class pairs examined per ``(q, q')``;
    exceeding it raises :class:`BudgetExceeded` rather than returning a verdict.
    """
    lead = f.leading.table
    k = f.size().k
    for q, u in shortest_words_to(f.leading).items():
        pq = f.progress[q]
        for q2 in range(f.leading.state_count):
            pq2 = f.progress[q2]
            classes = _transform_monoid((lead, pq.automaton.table, pq2.automaton.table), budget)
            firsts = [(chi, w) for chi, w in classes if chi.lead[q] == q2]
            seconds = [(chi, w) for chi, w in classes if chi.lead[q2] == q]
            for chi1, w1 in firsts:
                for chi2, w2 in seconds:
                    if not w1 and not w2:
                        continue
                    g = tuple(chi2.p[s] for s in chi1.p)              # v1 v2 on P_q
                    h = tuple(chi1.p_prime[s] for s in chi2.p_prime)  # v2 v1 on P_q'
                    acc1 = _orbit_acceptance(g, pq.automaton.initial, pq.accepting, k)
                    acc2 = _orbit_acceptance(h, pq2.automaton.initial, pq2.accepting, k)
                    if len(set(acc1) | set(acc2)) < 2:
                        continue
                    l, r = next((l, r) for l in range(1, k + 1) for r in range(1, k + 1)
                                if acc1[l - 1] != acc2[r - 1])
                    cex = _verified(f, (u, (w1 + w2) * l), (u + w1, (w2 + w1) * r))
                    dec = f.alphabet.decode
                    loop = SaturationLoop(q, q2, dec(u), dec(w1), dec(w2), l, r)
                    return SaturationReport(Verdict.UNSATURATED, cex, "exact", loop)
    return SaturationReport(Verdict.SATURATED_EXACT, None, "exact")
