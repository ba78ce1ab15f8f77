"""Command-line front end.

Exit codes: 0 yes/success, 1 the query answered no, 2 usage, parse or
unsupported-operation error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra, core, translations
from .automata import Alphabet, AutomatonError
from .families import deterministic_fixtures, fdfa_fixtures, gen_ln
from .serialize import Document, DocumentError, document_diagnostics, document_of, parse, serialize
from .words import canonicalize

YES, NO, ERROR, BUDGET = 0, 1, 2, 3

UNSUPPORTED_FROM_NBA = (
    "from-nba is not supported: turning a nondeterministic Büchi automaton into an FDFA "
    "requires determinization (e.g. into a deterministic parity automaton first), which is "
    "out of scope. Determinize externally and use from-dpa.")


class CliError(Exception):
    def __init__(self, message: str, code: int = ERROR):
        super().__init__(message)
        self.code = code


class Report:
    """Collects a command's result as ordered key/value pairs and prints it as text or JSON."""

    def __init__(self, verdict: str):
        self.fields: dict = {"result": verdict}

    def add(self, key: str, value) -> Report:
        self.fields[key] = value
        return self

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.fields, ensure_ascii=False, sort_keys=False)
        lines = [self.fields["result"]]
        lines += [f"{k}: {_text(v)}" for k, v in self.fields.items() if k != "result"]
        return "\n".join(lines)


def _text(value) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}={_text(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "; ".join(_text(v) for v in value)
    return str(value)


# -- helpers -------------------------------------------------------------------------

def _load(path: str, kinds: tuple[str, ...]) -> Document:
    doc = parse(path)
    if doc.kind not in kinds:
        raise CliError(f"{path}: expected a document of kind {' or '.join(kinds)}, got {doc.kind}")
    return doc


def _fdfa(path: str) -> core.FDFA:
    return _load(path, ("fdfa",)).body


def _pair(sigma: Alphabet, args) -> tuple[tuple[int, ...], tuple[int, ...]]:
    u, v = sigma.parse_word(args.u), sigma.parse_word(args.v)
    if not v:
        raise CliError("--v must be a nonempty word")
    return u, v


def _spell(sigma: Alphabet, word) -> str:
    return sigma.spell(sigma.encode(word)) or "ε"


def _pair_text(sigma: Alphabet, pair) -> dict:
    return {"u": _spell(sigma, pair[0]), "v": _spell(sigma, pair[1])}


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _check(ok: bool, what: str) -> None:
    if not ok:
        raise AssertionError(f"internal error: {what} failed re-verification")


def _witness(f: core.FDFA, w: algebra.EmptinessWitness, expect: bool) -> dict:
    _check(core.accepts(f, w.x, w.y) == expect, "witness")
    return _pair_text(f.alphabet, (w.x, w.y))


# -- commands ------------------------------------------------------------------------

def cmd_normalize(args) -> tuple[int, Report]:
    f = _fdfa(args.file)
    u, v = _pair(f.alphabet, args)
    n = core.normalize(f.leading, u, v)
    sigma = f.alphabet
    return YES, Report("normalized").add("x", _spell(sigma, n.x)).add("y", _spell(sigma, n.y)) \
        .add("i", n.i).add("j", n.j).add("state", n.state)


def cmd_member(args) -> tuple[int, Report]:
    f = _fdfa(args.file)
    u, v = _pair(f.alphabet, args)
    n = core.normalize(f.leading, u, v)
    ok = core.accepts(f, u, v)
    sigma = f.alphabet
    rep = Report("accepted" if ok else "rejected").add("normalized", f"({_spell(sigma, n.x)}, {_spell(sigma, n.y)})")
    return (YES if ok else NO), rep


def cmd_nba_member(args) -> tuple[int, Report]:
    b = _load(args.file, ("nba",)).body
    u, v = _pair(b.automaton.alphabet, args)
    ok = translations.nba_accepts_up(b, u, v)
    return (YES if ok else NO), Report("accepted" if ok else "rejected")


def cmd_complement(args) -> tuple[int, None]:
    _emit(args, serialize(algebra.complement(_fdfa(args.file))))
    return YES, None


def _binary(op):
    def run(args) -> tuple[int, None]:
        _emit(args, serialize(op(_fdfa(args.first), _fdfa(args.second), full=args.full)))
        return YES, None
    return run


def cmd_empty(args) -> tuple[int, Report]:
    f = _fdfa(args.file)
    w = algebra.emptiness_witness(f)
    if w is None:
        return YES, Report("empty")
    return NO, Report("nonempty").add("witness", _witness(f, w, True))


def cmd_universal(args) -> tuple[int, Report]:
    f = _fdfa(args.file)
    w = algebra.universality_counterexample(f)
    if w is None:
        return YES, Report("universal")
    return NO, Report("not universal").add("counterexample", _witness(f, w, False))


def cmd_contains(args) -> tuple[int, Report]:
    """``contains A B``: is L(B) a subset of L(A)?"""
    big, small = _fdfa(args.first), _fdfa(args.second)
    w = algebra.containment_witness(small, big)
    if w is None:
        return YES, Report("contained")
    _check(core.accepts(small, w.x, w.y) and not core.accepts(big, w.x, w.y), "containment witness")
    return NO, Report("not contained").add("witness", _pair_text(small.alphabet, (w.x, w.y)))


def cmd_equal(args) -> tuple[int, Report]:
    f1, f2 = _fdfa(args.first), _fdfa(args.second)
    w = algebra.equality_witness(f1, f2)
    if w is None:
        return YES, Report("equal")
    _check(core.accepts(f1, w.x, w.y) != core.accepts(f2, w.x, w.y), "difference witness")
    rep = Report("different").add("witness", _pair_text(f1.alphabet, (w.x, w.y)))
    return NO, rep.add("accepted_by", "first" if core.accepts(f1, w.x, w.y) else "second")


def cmd_saturated(args) -> tuple[int, Report]:
    f = _fdfa(args.file)
    try:
        if args.exact:
            rep = algebra.check_saturation_exact(f, budget=args.budget)
        else:
            rep = algebra.check_saturation_bounded(f, args.max_u, args.max_v)
    except algebra.BudgetExceeded as e:
        raise CliError(str(e), BUDGET) from None
    out = Report(rep.verdict.value).add("bound", rep.bound_used)
    if rep.saturated:
        return YES, out
    sigma = f.alphabet
    p1, p2 = rep.counterexample
    _check(core.accepts(f, *p1) != core.accepts(f, *p2), "saturation counterexample")
    out.add("accepted", _pair_text(sigma, p1 if core.accepts(f, *p1) else p2))
    out.add("rejected", _pair_text(sigma, p2 if core.accepts(f, *p1) else p1))
    return NO, out


def cmd_to_nba(args) -> tuple[int, None]:
    _emit(args, serialize(translations.fdfa_to_nba(_fdfa(args.file))))
    return YES, None


def _from(kind: str):
    def run(args) -> tuple[int, None]:
        d = _load(args.file, (kind,)).body
        _emit(args, serialize(translations.omega_to_fdfa(d)))
        return YES, None
    return run


def cmd_from_nba(args) -> tuple[int, None]:
    raise CliError(UNSUPPORTED_FROM_NBA)


def cmd_gen_ln(args) -> tuple[int, None]:
    if args.n < 1:
        raise CliError("gen-ln needs N >= 1")
    _emit(args, serialize(gen_ln(args.n).fdfa))
    return YES, None


def all_fixtures() -> dict[str, Document]:
    out = {name: document_of(f) for name, f in fdfa_fixtures().items()}
    out.update((name, document_of(d)) for name, d in deterministic_fixtures().items())
    return out


def cmd_fixtures(args) -> tuple[int, Report | None]:
    docs = all_fixtures()
    if args.out:
        target = Path(args.out)
        target.mkdir(parents=True, exist_ok=True)
        for name, doc in docs.items():
            (target / f"{name}.{doc.kind}").write_text(serialize(doc), encoding="utf-8")
        return YES, Report("written").add("files", [f"{n}.{d.kind}" for n, d in docs.items()])
    if args.name:
        if args.name not in docs:
            raise CliError(f"unknown fixture {args.name!r}; known: {', '.join(docs)}")
        _emit(args, serialize(docs[args.name]))
        return YES, None
    return YES, Report("fixtures").add("names", [f"{n} ({d.kind})" for n, d in docs.items()])


def cmd_canonical(args) -> tuple[int, Report]:
    if args.file:
        doc = parse(args.file)
        sigma = doc.body.alphabet if doc.kind == "fdfa" else doc.body.automaton.alphabet
        u, v = _pair(sigma, args)
        w = canonicalize((u, v))
        return YES, Report("canonical").add("u", _spell(sigma, w.u)).add("v", _spell(sigma, w.v))

    def split(text):
        return tuple(t for t in text.split(",") if t) if "," in text else tuple(text)
    u, v = split(args.u), split(args.v)
    if not v:
        raise CliError("--v must be a nonempty word")
    w = canonicalize((u, v))
    sep = "," if any(len(a) > 1 for a in w.u + w.v) else ""
    return YES, Report("canonical").add("u", sep.join(w.u) or "ε").add("v", sep.join(w.v))


def cmd_validate(args) -> tuple[int, Report]:
    doc = parse(args.file, strict=False)
    issues = document_diagnostics(doc)
    if not issues:
        return YES, Report("valid").add("kind", doc.kind)
    return NO, Report("invalid").add("kind", doc.kind).add("diagnostics", issues)


def cmd_size(args) -> tuple[int, Report]:
    doc = parse(args.file)
    body = doc.body
    if isinstance(body, core.FDFA):
        return YES, Report(str(body.size()))
    return YES, Report(str(body.automaton.state_count))


# -- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fdfa", description="Families of DFAs as acceptors of omega-regular languages.")
    p.add_argument("--json", action="store_true", help="machine-readable reports")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, func, help, files=1, pair=False, output=False):
        s = sub.add_parser(name, help=help, description=help)
        if files == 1:
            s.add_argument("file", nargs="?", default="-", help="document path, '-' for stdin")
        elif files == 2:
            s.add_argument("first")
            s.add_argument("second")
        if pair:
            s.add_argument("--u", default="", help="finite prefix (empty by default)")
            s.add_argument("--v", required=True, help="nonempty period")
        if output:
            s.add_argument("-o", "--output", help="write the document here instead of stdout")
        s.set_defaults(func=func)
        return s

    cmd("normalize", cmd_normalize, "normalize a pair against the leading automaton", pair=True)
    cmd("member", cmd_member, "is u v^ω accepted by the FDFA?", pair=True)
    cmd("nba-member", cmd_nba_member, "is u v^ω accepted by the NBA?", pair=True)
    cmd("complement", cmd_complement, "complement an FDFA", output=True)
    for name, op in (("union", algebra.union), ("intersect", algebra.intersect)):
        s = cmd(name, _binary(op), f"{name} of two FDFAs", files=2, output=True)
        s.add_argument("--full", action="store_true", help="build the full product instead of the reachable part")
    cmd("empty", cmd_empty, "is the language empty?")
    cmd("universal", cmd_universal, "is every word accepted?")
    cmd("contains", cmd_contains, "does the first FDFA's language contain the second's?", files=2)
    cmd("equal", cmd_equal, "do two FDFAs accept the same language?", files=2)
    s = cmd("saturated", cmd_saturated, "check saturation (bounded by default)")
    s.add_argument("--exact", action="store_true", help="decide exactly via transformation monoids")
    s.add_argument("--max-u", type=int, default=3)
    s.add_argument("--max-v", type=int, default=3)
    s.add_argument("--budget", type=int, default=4_000_000, help="class-pair budget for --exact")
    cmd("to-nba", cmd_to_nba, "translate a saturated FDFA to a Büchi automaton", output=True)
    for kind in ("dba", "dca", "dpa"):
        cmd(f"from-{kind}", _from(kind), f"translate a {kind.upper()} to an FDFA", output=True)
    cmd("from-nba", cmd_from_nba, "unsupported (requires determinization)", output=True)
    s = cmd("gen-ln", cmd_gen_ln, "generate the L_n family member", files=0, output=True)
    s.add_argument("n", type=int)
    s = cmd("fixtures", cmd_fixtures, "list, print or write the built-in fixtures", files=0, output=True)
    s.add_argument("name", nargs="?")
    s.add_argument("--out", help="write every fixture into this directory")
    s = cmd("canonical", cmd_canonical, "canonical form of an ultimately periodic word", files=0, pair=True)
    s.add_argument("file", nargs="?", help="document supplying the alphabet")
    cmd("validate", cmd_validate, "report every invariant violation in a document")
    cmd("size", cmd_size, "FDFA size (n, k), or the state count of an automaton")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (DocumentError, AutomatonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR
    if report is not None:
        print(report.render(args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
