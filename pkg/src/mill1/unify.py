"""First-order unification over terms with metavariables.

Substitutions are idempotent: stored values never mention a bound
metavariable, so resolving a term is a single recursive pass.  Correctness
of variable scoping is not unification's concern; structures that bind an
eigenvariable in the wrong place simply fail the contraction test later.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .terms import EigenVar, Fun, MetaVar, Pos, Term, Var, term_metavars


@dataclass(frozen=True, slots=True)
class Substitution:
    _map: dict[int, Term] = field(default_factory=dict)

    def resolve(self, t: Term) -> Term:
        match t:
            case MetaVar(n):
                return self._map.get(n, t)
            case Fun(sym, args):
                return Fun(sym, tuple(self.resolve(a) for a in args))
            case _:
                return t

    def bind(self, num: int, t: Term) -> "Substitution | None":
        """Extend with num := t, or None when the occurs check fails."""
        value = self.resolve(t)
        if value == MetaVar(num):
            return self
        if num in term_metavars(value):
            return None
        one = Substitution({num: value})
        updated = {k: one.resolve(v) for k, v in self._map.items()}
        updated[num] = value
        return Substitution(updated)

    def items(self) -> list[tuple[int, Term]]:
        return sorted(self._map.items())

    def __contains__(self, num: int) -> bool:
        return num in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __str__(self) -> str:
        inner = ", ".join(f"?{k}:={v}" for k, v in self.items())
        return "{" + inner + "}"


EMPTY = Substitution()


def unify(t1: Term, t2: Term, s: Substitution) -> Substitution | None:
    a, b = s.resolve(t1), s.resolve(t2)
    match a, b:
        case MetaVar(n), _:
            return s.bind(n, b)
        case _, MetaVar(n):
            return s.bind(n, a)
        case Var(x), Var(y):
            return s if x == y else None
        case EigenVar(n), EigenVar(m):
            return s if n == m else None
        case Pos(v), Pos(w):
            return s if v == w else None
        case Fun(f, fa), Fun(g, ga):
            if f != g or len(fa) != len(ga):
                return None
            for x, y in zip(fa, ga):
                r = unify(x, y, s)
                if r is None:
                    return None
                s = r
            return s
        case _:
            return None


def unify_all(
    pairs: "list[tuple[Term, Term]]", s: Substitution
) -> Substitution | None:
    for x, y in pairs:
        r = unify(x, y, s)
        if r is None:
            return None
        s = r
    return s


def unifiable_atoms(pred1: str, args1, pred2: str, args2, s: Substitution) -> bool:
    if pred1 != pred2 or len(args1) != len(args2):
        return False
    return unify_all(list(zip(args1, args2)), s) is not None
