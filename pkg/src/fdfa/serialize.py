"""Reading and writing automata documents.

A document is a JSON object with a ``kind`` field (``fdfa``, ``dfa``,
``dba``, ``dca``, ``dpa`` or ``nba``).  Automaton kinds carry ``alphabet``
(list of symbol names), ``states`` (count), ``initial``, ``transitions`` (a
list of ``[from, symbol, to, ...]`` rows) and one acceptance field:

=========  =============  ================================
kind       field          meaning
=========  =============  ================================
dfa        ``accepting``  final states
dba, nba   ``buchi``      Büchi states
dca        ``cobuchi``    co-Büchi states
dpa        ``colors``     one colour ``>= 1`` per state
=========  =============  ================================

An ``fdfa`` document has ``alphabet``, a ``leading`` object (``states``,
``initial``, ``transitions``) and a ``progress`` list of DFA objects ordered
by leading state.  ``state_names`` and ``caveats`` are optional.  The
JSON schema lives in ``docs/document.schema.json``.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Union

from .automata import (DFA, Alphabet, Automaton, AutomatonError, BuchiStates, CoBuchiStates, OmegaAutomaton,
                       ParityColors, complete)
from .core import FDFA, validate
from .translations import NBA

KINDS = ("fdfa", "dfa", "dba", "dca", "dpa", "nba")
ACCEPTANCE_FIELD = {"dfa": "accepting", "dba": "buchi", "nba": "buchi", "dca": "cobuchi", "dpa": "colors"}

Body = Union[FDFA, DFA, OmegaAutomaton, NBA]


class DocumentError(AutomatonError):
    """Syntax or invariant error in a document; the message names its location."""


@dataclass(frozen=True)
class Document:
    kind: str
    body: Body


def document_of(body: Body) -> Document:
    if isinstance(body, FDFA):
        return Document("fdfa", body)
    if isinstance(body, DFA):
        return Document("dfa", body)
    if isinstance(body, OmegaAutomaton):
        return Document(body.kind, body)
    if isinstance(body, NBA):
        return Document("nba", body)
    raise TypeError(f"cannot serialize {type(body).__name__}")


# -- writing -----------------------------------------------------------------------

def _structure(a: Automaton) -> dict:
    sym = a.alphabet.symbols
    rows = [[p, sym[s], *sorted(t)] for p, row in enumerate(a.transitions) for s, t in enumerate(row) if t]
    out = {"states": a.state_count, "initial": a.initial, "transitions": rows}
    if a.labels is not None:
        out["state_names"] = [str(x) for x in a.labels]
    return out


def _to_obj(doc: Document) -> dict:
    body = doc.body
    if doc.kind == "fdfa":
        progress = []
        for p in body.progress:
            d = _structure(p.automaton)
            d["accepting"] = sorted(p.accepting)
            progress.append(d)
        obj = {"kind": "fdfa", "alphabet": list(body.alphabet), "leading": _structure(body.leading),
               "progress": progress}
        if body.caveats:
            obj["caveats"] = sorted(body.caveats)
        return obj
    a = body.automaton
    obj = {"kind": doc.kind, "alphabet": list(a.alphabet), **_structure(a)}
    if doc.kind == "dpa":
        obj["colors"] = list(body.acceptance.colors)
    elif doc.kind in ("dba", "dca"):
        obj[ACCEPTANCE_FIELD[doc.kind]] = sorted(body.acceptance.states)
    else:
        obj[ACCEPTANCE_FIELD[doc.kind]] = sorted(body.accepting)
    if doc.kind == "nba" and body.caveats:
        obj["caveats"] = sorted(body.caveats)
    return obj


def _dump(value, indent: int = 0) -> str:
    """JSON with one line per list element unless the list holds only scalars."""
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_dump(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and any(isinstance(v, (list, dict)) for v in value):
        items = [pad + _dump(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def serialize(doc: Document | Body) -> str:
    if not isinstance(doc, Document):
        doc = document_of(doc)
    return _dump(_to_obj(doc)) + "\n"


def write(doc: Document | Body, path: str | Path) -> None:
    Path(path).write_text(serialize(doc), encoding="utf-8")


# -- reading -----------------------------------------------------------------------

class _Reader:
    def __init__(self, origin: str):
        self.origin = origin

    def fail(self, where: str, msg: str):
        raise DocumentError(f"{self.origin}: field '{where}': {msg}")

    def field(self, obj: dict, key: str, where: str, kind=None, optional=False):
        path = f"{where}.{key}" if where else key
        if key not in obj:
            if optional:
                return None
            self.fail(path, "missing")
        value = obj[key]
        if kind is not None and not _is(value, kind):
            self.fail(path, f"expected {_kind_name(kind)}, got {json.dumps(value)[:40]}")
        return value

    def int_list(self, obj: dict, key: str, where: str, optional=False) -> list[int] | None:
        values = self.field(obj, key, where, list, optional)
        if values is None:
            return None
        for i, v in enumerate(values):
            if not _is(v, int):
                self.fail(f"{where}.{key}[{i}]" if where else f"{key}[{i}]", f"expected integer, got {v!r}")
        return values

    def alphabet(self, obj: dict) -> Alphabet:
        syms = self.field(obj, "alphabet", "", list)
        try:
            return Alphabet(tuple(syms))
        except AutomatonError as e:
            self.fail("alphabet", str(e))

    def automaton(self, obj: dict, sigma: Alphabet, where: str) -> Automaton:
        n = self.field(obj, "states", where, int)
        if n < 1:
            self.fail(f"{where}.states" if where else "states", "must be at least 1")
        initial = self.field(obj, "initial", where, int)
        rows = self.field(obj, "transitions", where, list)
        base = f"{where}.transitions" if where else "transitions"
        edges = []
        for i, row in enumerate(rows):
            loc = f"{base}[{i}]"
            if not isinstance(row, list) or len(row) < 3:
                self.fail(loc, "expected [from, symbol, to, ...]")
            p, s, *targets = row
            if not _is(p, int) or not 0 <= p < n:
                self.fail(loc, f"source state {p!r} out of range [0, {n})")
            if not isinstance(s, str) or s not in sigma.symbols:
                self.fail(loc, f"unknown symbol {s!r}; alphabet is {list(sigma)}")
            for q in targets:
                if not _is(q, int) or not 0 <= q < n:
                    self.fail(loc, f"target state {q!r} out of range [0, {n})")
                edges.append((p, sigma.index(s), q))
        names = self.field(obj, "state_names", where, list, optional=True)
        if names is not None and len(names) != n:
            self.fail(f"{where}.state_names" if where else "state_names", f"expected {n} names, got {len(names)}")
        try:
            return Automaton.from_edges(sigma, n, initial, edges, None if names is None else tuple(names))
        except AutomatonError as e:
            self.fail(where or "initial", str(e))

    def states(self, obj: dict, key: str, where: str, n: int) -> frozenset[int]:
        values = self.int_list(obj, key, where)
        for i, v in enumerate(values):
            if not 0 <= v < n:
                self.fail(f"{where}.{key}[{i}]" if where else f"{key}[{i}]", f"state {v} out of range [0, {n})")
        return frozenset(values)

    def deterministic(self, a: Automaton, where: str) -> None:
        for p, row in enumerate(a.transitions):
            for s, t in enumerate(row):
                sym = a.alphabet.symbols[s]
                if len(t) > 1:
                    self.fail(where or "transitions", f"state {p} is nondeterministic on {sym!r} -> {sorted(t)}")
                if not t:
                    self.fail(where or "transitions", f"state {p} has no transition on {sym!r}")


def _is(value, kind) -> bool:
    if kind is int:
        return isinstance(value, int) and not isinstance(value, bool)
    return isinstance(value, kind)


def _kind_name(kind) -> str:
    return {int: "integer", list: "list", str: "string", dict: "object"}[kind]


def parse_text(text: str, origin: str = "<input>", strict: bool = True) -> Document:
    """Parse a document.  With ``strict`` every kind invariant is enforced;
    otherwise structurally readable but ill-formed FDFAs are returned as-is
    (for :func:`fdfa.core.validate`)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{origin}:{e.lineno}:{e.colno}: syntax error: {e.msg}") from None
    r = _Reader(origin)
    if not isinstance(obj, dict):
        raise DocumentError(f"{origin}:1:1: syntax error: document must be a JSON object")
    kind = r.field(obj, "kind", "", str)
    if kind not in KINDS:
        r.fail("kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    sigma = r.alphabet(obj)
    caveats = r.field(obj, "caveats", "", list, optional=True) or []

    if kind == "fdfa":
        lead_obj = r.field(obj, "leading", "", dict)
        lead = r.automaton(lead_obj, sigma, "leading")
        progress = []
        for q, p_obj in enumerate(r.field(obj, "progress", "", list)):
            where = f"progress[{q}]"
            if not isinstance(p_obj, dict):
                r.fail(where, "expected object")
            a = r.automaton(p_obj, sigma, where)
            progress.append(DFA(a, r.states(p_obj, "accepting", where, a.state_count)))
        f = FDFA(lead, tuple(progress), frozenset(caveats))
        if strict:
            if len(progress) != lead.state_count:
                r.fail("progress", f"progress count mismatch: leading automaton has {lead.state_count} "
                                   f"states but {len(progress)} progress DFAs are given")
            r.deterministic(lead, "leading")
            for q, p in enumerate(progress):
                r.deterministic(p.automaton, f"progress[{q}]")
        return Document(kind, f)

    a = r.automaton(obj, sigma, "")
    key = ACCEPTANCE_FIELD[kind]
    if kind == "dpa":
        colors = r.int_list(obj, "colors", "")
        if len(colors) != a.state_count:
            r.fail("colors", f"expected {a.state_count} colours, got {len(colors)}")
        if any(c < 1 for c in colors):
            r.fail("colors", "colours must be >= 1")
        acc = ParityColors(tuple(colors))
    else:
        acc = r.states(obj, key, "", a.state_count)

    if kind == "dfa":
        a = complete(a) if strict else a
        if strict:
            r.deterministic(a, "")
        return Document(kind, DFA(a, acc))
    if kind == "nba":
        return Document(kind, NBA(complete(a), acc, frozenset(caveats)))
    if strict:
        r.deterministic(a, "")
    cond = {"dba": BuchiStates, "dca": CoBuchiStates}.get(kind)
    return Document(kind, OmegaAutomaton(a, cond(acc) if cond else acc))


def parse(source: str | Path | IO[str], strict: bool = True) -> Document:
    """Parse a document from a path, ``"-"`` (standard input) or an open text stream."""
    if hasattr(source, "read"):
        return parse_text(source.read(), getattr(source, "name", "<stream>"), strict)
    if str(source) == "-":
        return parse_text(sys.stdin.read(), "<stdin>", strict)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"{path}: cannot read: {e.strerror}") from None
    return parse_text(text, str(path), strict)


def document_diagnostics(doc: Document) -> list[str]:
    """Invariant violations of a leniently parsed document."""
    body = doc.body
    if doc.kind == "fdfa":
        return validate(body)
    if doc.kind in ("dba", "dca", "dpa", "dfa"):
        a = body.automaton
        issues = []
        for p, row in enumerate(a.transitions):
            for s, t in enumerate(row):
                sym = a.alphabet.symbols[s]
                if len(t) > 1:
                    issues.append(f"state {p} is nondeterministic on {sym!r} -> {sorted(t)}")
                elif not t:
                    issues.append(f"state {p} has no transition on {sym!r}")
        return issues
    return []
