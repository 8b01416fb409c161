"""Position translation: Lambek formulas to first-order formulas.

A Lambek formula spanning string positions l..r becomes a first-order
formula over binary predicates, one argument pair per atom:

  p           at (l, r)  ->  p(l, r)
  A \\ B      at (l, r)  ->  forall x. (A at (x, l)) -o (B at (x, r))
  A / B       at (l, r)  ->  forall x. (B at (r, x)) -o (A at (l, x))
  A * B       at (l, r)  ->  exists x. (A at (l, x)) * (B at (x, r))

Each connective introduces one fresh variable binding exactly two
occurrences, one per subformula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import (
    Atom,
    Exists,
    Forall,
    Formula,
    LambekFormula,
    LAtom,
    Lolli,
    Over,
    Prod,
    Tensor,
    Under,
    atoms_of,
)
from .terms import FreshNames, Pos, Term, Var


@dataclass(frozen=True, slots=True)
class Span:
    left: Term
    right: Term


def translate_lambek(f: LambekFormula, span: Span, fresh: FreshNames) -> Formula:
    match f:
        case LAtom(p):
            return Atom(p, (span.left, span.right))
        case Under(den, num):
            x = fresh.fresh("x")
            return Forall(
                x,
                Lolli(
                    translate_lambek(den, Span(Var(x), span.left), fresh),
                    translate_lambek(num, Span(Var(x), span.right), fresh),
                ),
            )
        case Over(num, den):
            x = fresh.fresh("x")
            return Forall(
                x,
                Lolli(
                    translate_lambek(den, Span(span.right, Var(x)), fresh),
                    translate_lambek(num, Span(span.left, Var(x)), fresh),
                ),
            )
        case Prod(l, r):
            x = fresh.fresh("x")
            return Exists(
                x,
                Tensor(
                    translate_lambek(l, Span(span.left, Var(x)), fresh),
                    translate_lambek(r, Span(Var(x), span.right), fresh),
                ),
            )
    raise TypeError(f"not a Lambek formula: {f!r}")


def span_at(i: int) -> Span:
    """Span of the i-th word (zero-based) in a sentence."""
    return Span(Pos(i), Pos(i + 1))


def lint_two_occurrence(f: Formula) -> list[str]:
    """Check the two-occurrence pattern of position variables.

    Every quantified variable should occur exactly twice in atom
    arguments, with opposite signs, where the sign of an occurrence is
    the polarity of its atom flipped once more when the variable sits in
    right (rather than left) position.  Translations of Lambek formulas
    satisfy this; hand-written entries may not, hence a lint rather than
    an error.
    """
    warnings: list[str] = []

    def sign_positions(body: Formula, name: str, positive: bool, out: list[int]):
        match body:
            case Atom(_, args):
                for idx, arg in enumerate(args):
                    if arg == Var(name):
                        if len(args) == 2:
                            slot = 1 if idx == 0 else -1
                            out.append(slot if positive else -slot)
                        else:
                            out.append(0)
            case Tensor(l, r):
                sign_positions(l, name, positive, out)
                sign_positions(r, name, positive, out)
            case Lolli(a, c):
                sign_positions(a, name, not positive, out)
                sign_positions(c, name, positive, out)
            case Forall(v, b) | Exists(v, b):
                if v != name:
                    sign_positions(b, name, positive, out)

    def walk(g: Formula, positive: bool):
        match g:
            case Forall(v, body) | Exists(v, body):
                shown = v.split("#")[0]
                signs: list[int] = []
                sign_positions(body, v, positive, signs)
                if len(signs) != 2:
                    warnings.append(
                        f"expected exactly 2 occurrences of {shown}, "
                        f"found {len(signs)}"
                    )
                elif 0 in signs:
                    warnings.append(
                        f"{shown} occurs outside a two-position atom"
                    )
                elif signs[0] + signs[1] != 0:
                    warnings.append(
                        f"occurrences of {shown} do not have opposite signs"
                    )
                walk(body, positive)
            case Tensor(l, r):
                walk(l, positive)
                walk(r, positive)
            case Lolli(a, c):
                walk(a, not positive)
                walk(c, positive)
            case Atom():
                pass

    walk(f, True)
    return warnings


def positional_atoms_ok(f: Formula) -> bool:
    return all(len(a.args) == 2 for a in atoms_of(f))
