"""Recursive-descent parsers for the ASCII surface syntax.

Grammar for logic formulas (quantifier scope extends as far right as
possible; "-o" associates right, "*" left, parentheses override):

    formula ::= ("forall" | "exists") ident "." formula
              | part ("-o" formula)?
    part    ::= unit ("*" unit)*
    unit    ::= atom | "(" formula ")"
    atom    ::= ident ("(" term ("," term)* ")")?
    term    ::= integer | ident ("(" term ("," term)* ")")?

An identifier in term position is a bound variable when a quantifier for it
is in scope and a constant otherwise.  Bound names are renamed apart during
parsing.  Lambek formulas require explicit parentheses for nesting:
"a/b/c" is rejected, "(a/b)/c" is not.
"""

from __future__ import annotations

import re

from .formulas import (
    Atom,
    Exists,
    Forall,
    Formula,
    LAtom,
    LambekFormula,
    Lolli,
    Over,
    Prod,
    Sequent,
    Tensor,
    Under,
    _check_arities,
)
from .semantics import Abs, App, Const, LambdaTerm, LetPair, LVar, Pair
from .terms import Fun, Pos, Term, Var


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_FORMULA_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<op>\|-|-o|[(),.*/\\:])"
)

_LAMBDA_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<op>[\\.<>,=()])"
)


def _tokenize(text: str, pattern: re.Pattern) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        m = pattern.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), i))
        i = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, pattern: re.Pattern = _FORMULA_TOKEN):
        self.tokens = _tokenize(text, pattern)
        self.i = 0
        self.scope: list[tuple[str, str]] = []  # (surface name, internal name)
        self.counter = 0
        self.pred_arity: dict[str, int] = {}
        self.fun_arity: dict[str, int] = {}

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, text, pos = self.next()
        if text != value or kind == "end":
            got = repr(text) if kind != "end" else "end of input"
            raise ParseError(f"expected {value!r}, got {got}", pos)

    def at(self, value: str) -> bool:
        kind, text, _ = self.peek()
        return kind != "end" and text == value

    def done(self) -> None:
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {text!r}", pos)

    # -- logic formulas ------------------------------------------------

    def formula(self) -> Formula:
        kind, text, pos = self.peek()
        if kind == "ident" and text in ("forall", "exists"):
            self.next()
            vkind, vname, vpos = self.next()
            if vkind != "ident":
                raise ParseError("expected a variable name", vpos)
            self.expect(".")
            internal = f"{vname}#{self.counter}"
            self.counter += 1
            self.scope.append((vname, internal))
            body = self.formula()
            self.scope.pop()
            return Forall(internal, body) if text == "forall" else Exists(internal, body)
        left = self.part()
        if self.at("-o"):
            self.next()
            return Lolli(left, self.formula())
        return left

    def part(self) -> Formula:
        f = self.unit()
        while self.at("*"):
            self.next()
            f = Tensor(f, self.unit())
        return f

    def unit(self) -> Formula:
        kind, text, pos = self.peek()
        if text == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if kind != "ident":
            raise ParseError(f"expected a formula, got {text!r}", pos)
        if text in ("forall", "exists"):
            return self.formula()
        return self.atom()

    def atom(self) -> Atom:
        kind, name, pos = self.next()
        if kind != "ident":
            raise ParseError("expected a predicate name", pos)
        args: tuple[Term, ...] = ()
        if self.at("("):
            self.next()
            items = [self.term()]
            while self.at(","):
                self.next()
                items.append(self.term())
            self.expect(")")
            args = tuple(items)
        seen = self.pred_arity.setdefault(name, len(args))
        if seen != len(args):
            raise ParseError(
                f"arity mismatch for predicate {name!r}: {seen} vs {len(args)}", pos
            )
        return Atom(name, args)

    def term(self) -> Term:
        kind, text, pos = self.next()
        if kind == "int":
            return Pos(int(text))
        if kind != "ident":
            raise ParseError(f"expected a term, got {text!r}", pos)
        if self.at("("):
            self.next()
            args = [self.term()]
            while self.at(","):
                self.next()
                args.append(self.term())
            self.expect(")")
            seen = self.fun_arity.setdefault(text, len(args))
            if seen != len(args):
                raise ParseError(
                    f"arity mismatch for function {text!r}: {seen} vs {len(args)}", pos
                )
            return Fun(text, tuple(args))
        for surface, internal in reversed(self.scope):
            if surface == text:
                return Var(internal)
        seen = self.fun_arity.setdefault(text, 0)
        if seen != 0:
            raise ParseError(
                f"arity mismatch for function {text!r}: {seen} vs 0", pos
            )
        return Fun(text)

    # -- Lambek formulas -----------------------------------------------

    def lambek(self) -> LambekFormula:
        left = self.lambek_unit()
        kind, text, pos = self.peek()
        if text in ("/", "\\", "*"):
            self.next()
            right = self.lambek_unit()
            nkind, ntext, npos = self.peek()
            if ntext in ("/", "\\", "*"):
                raise ParseError(
                    "ambiguous Lambek formula, parenthesize explicitly", npos
                )
            if text == "/":
                return Over(left, right)
            if text == "\\":
                return Under(left, right)
            return Prod(left, right)
        return left

    def lambek_unit(self) -> LambekFormula:
        kind, text, pos = self.peek()
        if text == "(":
            self.next()
            f = self.lambek()
            self.expect(")")
            return f
        if kind != "ident":
            raise ParseError(f"expected a category, got {text!r}", pos)
        self.next()
        return LAtom(text)


def parse_mill1(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_lambek(text: str) -> LambekFormula:
    p = _Parser(text)
    f = p.lambek()
    p.done()
    return f


def parse_sequent(text: str) -> Sequent:
    p = _Parser(text)
    antecedents = []
    if not p.at("|-"):
        antecedents.append(p.formula())
        while p.at(","):
            p.next()
            antecedents.append(p.formula())
    p.expect("|-")
    goal = p.formula()
    p.done()
    seq = Sequent(tuple(antecedents), goal)
    _check_arities(seq)
    return seq


def parse_formula_file(text: str) -> list[tuple[str, Formula]]:
    """Parse lines of the form "NAME: FORMULA"; '#' starts a comment."""
    out = []
    shared = _Parser("")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, body = line.partition(":")
        if not sep or not name.strip():
            raise ParseError(f"line {lineno}: expected 'NAME: FORMULA'", 0)
        p = _Parser(body)
        p.counter = shared.counter
        p.pred_arity = shared.pred_arity
        p.fun_arity = shared.fun_arity
        try:
            f = p.formula()
            p.done()
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e.args[0]}", e.pos) from None
        shared.counter = p.counter
        out.append((name.strip(), f))
    return out


# -- lambda terms ------------------------------------------------------
#
#     term ::= "\" ident "." term
#            | "let" "<" ident "," ident ">" "=" term "in" term
#            | app
#     app  ::= head+                        (application, left associative)
#     head ::= ident ("(" term ("," term)* ")")?   | "<" term "," term ">"
#            | "(" term ")"
#
# f(a,b) is sugar for the application spine (f a) b.  A bound identifier
# is a variable; anything else is a constant.


class _LambdaParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text, _LAMBDA_TOKEN)
        self.i = 0
        self.scope: list[str] = []

    peek = _Parser.peek
    next = _Parser.next
    expect = _Parser.expect
    at = _Parser.at
    done = _Parser.done

    def term(self) -> LambdaTerm:
        kind, text, pos = self.peek()
        if text == "\\":
            self.next()
            vkind, vname, vpos = self.next()
            if vkind != "ident":
                raise ParseError("expected a variable name", vpos)
            self.expect(".")
            self.scope.append(vname)
            body = self.term()
            self.scope.pop()
            return Abs(vname, body)
        if kind == "ident" and text == "let":
            self.next()
            self.expect("<")
            _, v1, p1 = self.next()
            self.expect(",")
            _, v2, p2 = self.next()
            self.expect(">")
            self.expect("=")
            pair = self.term()
            nkind, ntext, npos = self.next()
            if ntext != "in":
                raise ParseError(f"expected 'in', got {ntext!r}", npos)
            self.scope.extend((v1, v2))
            body = self.term()
            self.scope.pop()
            self.scope.pop()
            return LetPair(v1, v2, pair, body)
        t = self.head()
        while True:
            kind, text, _ = self.peek()
            if kind in ("ident",) and text not in ("in",) or text in ("(", "<"):
                t = App(t, self.head())
            else:
                return t

    def head(self) -> LambdaTerm:
        kind, text, pos = self.next()
        if text == "(":
            t = self.term()
            self.expect(")")
            return t
        if text == "<":
            a = self.term()
            self.expect(",")
            b = self.term()
            self.expect(">")
            return Pair(a, b)
        if kind != "ident":
            raise ParseError(f"expected a term, got {text!r}", pos)
        base: LambdaTerm
        base = LVar(text) if text in self.scope else Const(text)
        if self.at("("):
            self.next()
            args = [self.term()]
            while self.at(","):
                self.next()
                args.append(self.term())
            self.expect(")")
            for a in args:
                base = App(base, a)
        return base


def parse_lambda(text: str) -> LambdaTerm:
    p = _LambdaParser(text)
    t = p.term()
    p.done()
    return t
