"""Command line front end.

Four subcommands: parse a sentence against a lexicon, prove a sequent,
compare a file of named formulas by derivability, translate a Lambek
formula between string positions. Output is line-oriented and
byte-deterministic so goldens can pin it down.

Exit codes: 0 success or derivable, 1 proven underivable, 2 budget
exhausted, 3 bad input.
"""

from __future__ import annotations

import argparse
import sys

from .contraction import abstract, blocked_lines, contract_fully
from .formulas import format_mill1, format_sequent
from .lexicon import default_goal, load_lexicon, sentence_sequents
from .oracle import oracle_derivable
from .parsing import ParseError, parse_formula_file, parse_lambek, parse_mill1, parse_sequent
from .prover import BudgetExhausted, Reading, SearchConfig, compare, prove
from .semantics import format_lambda, meaning
from .terms import FreshNames, Pos
from .translate import Span, lint_two_occurrence, translate_lambek
from .unify import Substitution


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(3, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _build_parser() -> _Parser:
    top = _Parser(prog="mill1", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-readings", type=_positive, metavar="N")
        p.add_argument("--budget", type=_positive, metavar="N")
        p.add_argument("--no-early-contraction", action="store_true")
        p.add_argument("--lint-two-occurrence", action="store_true")

    p = sub.add_parser("parse", help="parse a sentence with a lexicon")
    p.add_argument("lexicon")
    p.add_argument("sentence")
    p.add_argument("--goal", metavar="FORMULA")
    p.add_argument("--sem", action="store_true")
    common(p)

    p = sub.add_parser("prove", help="prove a sequent")
    p.add_argument("sequent")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    common(p)

    p = sub.add_parser("compare", help="derivability matrix of named formulas")
    p.add_argument("file")
    common(p)

    p = sub.add_parser("translate", help="translate a Lambek formula")
    p.add_argument("formula")
    p.add_argument("left", type=int)
    p.add_argument("right", type=int)
    p.add_argument("--lint-two-occurrence", action="store_true")
    return top


def _config(args, **extra) -> SearchConfig:
    return SearchConfig(
        max_readings=args.max_readings,
        step_budget=args.budget,
        early_contraction=not args.no_early_contraction,
        diagnostic_two_occurrence=args.lint_two_occurrence,
        **extra,
    )


def _subst_text(s: Substitution) -> str:
    return ", ".join(f"?{num}:={term}" for num, term in s.items())


def _pairs_text(r: Reading) -> str:
    return " ".join(f"{neg}-{pos}" for neg, pos in r.matching)


def _print_trace(entries: "list[Reading]"):
    for k, r in enumerate(entries, 1):
        print(f"MATCHING {k}: {_pairs_text(r)}")
        graph = abstract(r.structure, r.substitution)
        steps = []
        contract_fully(graph, trace=steps)
        for j, step in enumerate(steps, 1):
            print(f"STEP {j} {step}")
        if graph.is_single_net():
            print("NET")
        else:
            print(f"STUCK vertices={graph.vertex_count()}")
            for line in blocked_lines(graph):
                print(line)


def _status(n_readings: int, budget_hit: bool) -> int:
    if n_readings:
        print(f"READINGS: {n_readings}")
        return 0
    if budget_hit:
        print("BUDGET")
        return 2
    print("UNDERIVABLE")
    return 1


def cmd_prove(args) -> int:
    try:
        seq = parse_sequent(args.sequent)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    if args.oracle:
        verdict = oracle_derivable(seq)
        print(f"ORACLE: {verdict}")
        return {"yes": 0, "no": 1}.get(verdict, 2)
    res = prove(seq, _config(args, record_stuck=args.trace))
    for w in res.warnings:
        print(f"LINT: {w}")
    if args.trace:
        _print_trace(sorted(res.readings + res.stuck, key=lambda r: r.matching))
    for k, r in enumerate(res.readings, 1):
        print(f"READING {k}: {_pairs_text(r)}")
        if len(r.substitution):
            print(f"READING {k} SUBST: {_subst_text(r.substitution)}")
    return _status(len(res.readings), res.budget_exhausted)


def cmd_parse(args) -> int:
    try:
        lex = load_lexicon(args.lexicon)
        goal = parse_mill1(args.goal) if args.goal else None
        words = args.sentence.split()
        if not words:
            raise ValueError("empty sentence")
        combos = list(sentence_sequents(words, lex, goal))
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except KeyError as e:
        print(f"error: unknown word: {e.args[0]}", file=sys.stderr)
        return 3
    cfg = _config(args)
    total = 0
    budget_hit = False
    for k, (seq, entries) in enumerate(combos, 1):
        res = prove(seq, cfg)
        for w in res.warnings:
            print(f"LINT: {w}")
        print(f"SEQUENT {k}: {format_sequent(seq)}")
        print(f"SEQUENT {k} READINGS: {len(res.readings)}")
        total += len(res.readings)
        budget_hit = budget_hit or res.budget_exhausted
        if args.sem and all(e.sem is not None for e in entries):
            for r in res.readings:
                term = meaning(r, seq, [e.sem for e in entries])
                print(f"SEM: {format_lambda(term)}")
    return _status(total, budget_hit)


def cmd_compare(args) -> int:
    try:
        with open(args.file) as fh:
            named = parse_formula_file(fh.read())
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    names = [name for name, _ in named]
    formulas = [f for _, f in named]
    try:
        matrix = compare(formulas, _config(args))
    except BudgetExhausted:
        print("BUDGET")
        return 2
    for i, row in enumerate(matrix):
        for j, ok in enumerate(row):
            if ok:
                print(f"{names[i]} -> {names[j]}")
    return 0


def cmd_translate(args) -> int:
    try:
        lf = parse_lambek(args.formula)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    f = translate_lambek(lf, Span(Pos(args.left), Pos(args.right)), FreshNames())
    print(format_mill1(f))
    if args.lint_two_occurrence:
        for w in lint_two_occurrence(f):
            print(f"LINT: {w}")
    return 0


def main(argv: "list[str] | None" = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "parse": cmd_parse,
        "prove": cmd_prove,
        "compare": cmd_compare,
        "translate": cmd_translate,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
