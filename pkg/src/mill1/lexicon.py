"""Lexicon files and sentence-to-sequent assembly.

One entry per line, tab-separated:

    word<TAB>lambek:FORMULA[<TAB>sem:LAMBDATERM]
    word<TAB>mill1:TEMPLATE[<TAB>sem:LAMBDATERM]

A mill1 template is a first-order formula over the placeholders L and R,
replaced by the word's span endpoints at assembly time.  Lines starting
with '#' and blank lines are skipped; a word may have several entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from . import parsing
from .formulas import (
    Atom,
    Formula,
    LambekFormula,
    Sequent,
    atoms_of,
    free_vars,
    make_sequent,
    replace_constants,
)
from .parsing import ParseError, _FORMULA_TOKEN, _Parser
from .semantics import LambdaTerm
from .terms import FreshNames, Fun, Pos, Term, Var
from .translate import Span, translate_lambek


@dataclass(frozen=True, slots=True)
class LexEntry:
    word: str
    lambek: LambekFormula | None
    template: Formula | None
    sem: LambdaTerm | None
    line: int

    def formula_at(self, span: Span, fresh) -> Formula:
        if self.lambek is not None:
            return translate_lambek(self.lambek, span, fresh)
        assert self.template is not None
        return replace_constants(
            self.template, {"L": span.left, "R": span.right}
        )


@dataclass(slots=True)
class Lexicon:
    entries: dict[str, list[LexEntry]] = field(default_factory=dict)

    def lookup(self, word: str) -> list[LexEntry]:
        return self.entries.get(word, [])

    def add(self, entry: LexEntry) -> None:
        self.entries.setdefault(entry.word, []).append(entry)


def parse_lexicon(text: str) -> Lexicon:
    lex = Lexicon()
    shared = _Parser("")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = raw.rstrip("\n").split("\t")
        fields = [f for f in fields if f.strip()]
        if len(fields) < 2:
            raise ParseError(f"line {lineno}: expected word<TAB>entry", 0)
        word = fields[0].strip()
        body = fields[1].strip()
        sem = None
        if len(fields) >= 3:
            semfield = fields[2].strip()
            if not semfield.startswith("sem:"):
                raise ParseError(f"line {lineno}: third field must be sem:TERM", 0)
            try:
                sem = parsing.parse_lambda(semfield[len("sem:") :])
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc.args[0]}", exc.pos) from exc
        try:
            if body.startswith("lambek:"):
                entry = LexEntry(
                    word, parsing.parse_lambek(body[len("lambek:") :]), None, sem, lineno
                )
            elif body.startswith("mill1:"):
                template = _parse_template(body[len("mill1:") :], shared)
                entry = LexEntry(word, None, template, sem, lineno)
            else:
                raise ParseError(
                    f"line {lineno}: entry must start with lambek: or mill1:", 0
                )
        except ParseError as exc:
            if not exc.args[0].startswith("line "):
                raise ParseError(f"line {lineno}: {exc.args[0]}", exc.pos) from exc
            raise
        lex.add(entry)
    return lex


def _parse_template(text: str, shared: _Parser) -> Formula:
    """Parse a mill1 template, sharing arity tables across the lexicon."""
    p = _Parser(text, _FORMULA_TOKEN)
    p.counter = shared.counter
    p.pred_arity = shared.pred_arity
    p.fun_arity = shared.fun_arity
    f = p.formula()
    p.done()
    shared.counter = p.counter
    stray = {
        t.symbol
        for a in atoms_of(f)
        for arg in a.args
        for t in _zero_ary(arg)
        if t.symbol not in ("L", "R")
    }
    if stray:
        raise ParseError(
            f"template may only use placeholders L and R, found {sorted(stray)}", 0
        )
    if any(isinstance(v, Var) for v in free_vars(f)):
        raise ParseError("template has unbound variables", 0)
    return f


def _zero_ary(t: Term) -> Iterator[Fun]:
    if isinstance(t, Fun):
        if not t.args:
            yield t
        for a in t.args:
            yield from _zero_ary(a)


def load_lexicon(path: str) -> Lexicon:
    with open(path, encoding="utf-8") as handle:
        return parse_lexicon(handle.read())


def default_goal(n_words: int) -> Formula:
    return Atom("s", (Pos(0), Pos(n_words)))


def sentence_sequents(
    words: "list[str]", lex: Lexicon, goal: Formula | None = None
) -> "Iterator[tuple[Sequent, list[LexEntry]]]":
    """One sequent per combination of lexical choices, in lexicon order."""
    if not words:
        raise ValueError("empty sentence")
    missing = [w for w in words if not lex.lookup(w)]
    if missing:
        raise KeyError(missing[0])
    if goal is None:
        goal = default_goal(len(words))
    per_word = [lex.lookup(w) for w in words]
    for combo in product(*per_word):
        fresh = FreshNames()
        ants = [
            entry.formula_at(Span(Pos(i), Pos(i + 1)), fresh)
            for i, entry in enumerate(combo)
        ]
        yield make_sequent(ants, goal), list(combo)
