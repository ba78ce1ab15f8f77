"""Ultimately periodic words ``u v^ω`` represented as ``(u, v)`` pairs.

Letters can be any hashable values (symbol names or symbol indices); all
functions here are alphabet-agnostic.  Strings are treated as sequences of
one-character letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Hashable, Sequence


@dataclass(frozen=True)
class UPWord:
    u: tuple[Hashable, ...]
    v: tuple[Hashable, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise ValueError("the period of an ultimately periodic word must be nonempty")

    def __iter__(self):
        # allows ``u, v = w``
        return iter((self.u, self.v))

    def __str__(self) -> str:
        def show(w):
            return "".join(map(str, w)) if all(len(str(a)) == 1 for a in w) else ",".join(map(str, w))
        return f"{show(self.u) or 'ε'}({show(self.v)})^ω"


def _as_upword(w) -> UPWord:
    return w if isinstance(w, UPWord) else UPWord(*w)


def primitive_root(v: Sequence[Hashable]) -> tuple[Hashable, ...]:
    """Shortest ``p`` with ``v == p^m``."""
    v = tuple(v)
    if not v:
        raise ValueError("primitive root of the empty word is undefined")
    n = len(v)
    for d in range(1, n + 1):
        if n % d == 0 and v[:d] * (n // d) == v:
            return v[:d]
    raise AssertionError("unreachable")


def up_prefix(w, length: int) -> tuple[Hashable, ...]:
    u, v = _as_upword(w)
    if length <= len(u):
        return u[:length]
    rest = length - len(u)
    reps = -(-rest // len(v))
    return u + (v * reps)[:rest]


def up_equal(w1, w2) -> bool:
    """Whether two pairs spell the same infinite word.

    Both streams are periodic with period dividing ``lcm(|v1|, |v2|)`` past
    ``max(|u1|, |u2|)``, so agreement on ``max(|u1|,|u2|) + 2 lcm`` letters is
    conclusive.
    """
    w1, w2 = _as_upword(w1), _as_upword(w2)
    bound = max(len(w1.u), len(w2.u)) + 2 * lcm(len(w1.v), len(w2.v))
    return up_prefix(w1, bound) == up_prefix(w2, bound)


def canonicalize(w) -> UPWord:
    """Unique representative: primitive period, then the prefix shortened as far as possible.

    While the prefix ends with the period's last letter, that letter moves from
    the prefix into the period (rotating the period right by one).
    """
    u, v = _as_upword(w)
    v = primitive_root(v)
    while u and u[-1] == v[-1]:
        u = u[:-1]
        v = v[-1:] + v[:-1]
    return UPWord(u, v)
