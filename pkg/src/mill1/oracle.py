"""Independent ground truth: backward sequent-calculus search.

This module decides derivability directly from the two-sided rules,
sharing nothing with the proof-net machinery beyond the formula types,
so the two decision procedures can check each other.

Quantifier handling uses creation levels: every eigenvariable records a
monotone timestamp, every metavariable records the timestamp at which it
was created, and a metavariable may only be instantiated with terms
whose eigenvariables are strictly older.  Binding a metavariable to a
term containing younger metavariables lowers their timestamps to its
own, which keeps retroactive violations impossible.

Also hosts a brute-force Lambek sequent prover (with empty premises
admitted) used to cross-check the position translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

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
    Sequent,
    Tensor,
    Under,
    atom_count,
    connective_count,
    formula_metavars,
    free_eigenvars,
    instantiate,
    map_terms,
    substitute,
)
from .terms import EigenVar, Fun, MetaVar, Pos, Term, Var, term_eigenvars, term_metavars
from .unify import Substitution


@dataclass(frozen=True, slots=True)
class OracleBudget:
    """max_depth bounds rule applications along one branch; None means
    the always-sufficient bound (every rule consumes a connective)."""

    max_depth: int | None = None


@dataclass(frozen=True, slots=True)
class _State:
    subst: Substitution
    marks: "tuple[tuple[int, int], ...]"  # metavar -> creation timestamp

    def mark_of(self, num: int) -> int:
        for k, v in self.marks:
            if k == num:
                return v
        return 0

    def with_mark(self, num: int, value: int) -> "_State":
        rest = tuple((k, v) for k, v in self.marks if k != num)
        return _State(self.subst, rest + ((num, value),))


class _Search:
    def __init__(self, seq: Sequent, max_depth: int):
        self.max_depth = max_depth
        self.exhausted = False
        self.memo: dict[str, bool] = {}
        self.levels: dict[int, int] = {}
        top = 0
        for f in seq.antecedents + (seq.succedent,):
            for e in free_eigenvars(f):
                top = max(top, e + 1)
            for m in formula_metavars(f):
                top = max(top, m + 1)
        self.next_eigen = count(top)
        self.next_meta = count(top)
        self.clock = count(1)

    def new_eigen(self) -> EigenVar:
        e = next(self.next_eigen)
        self.levels[e] = next(self.clock)
        return EigenVar(e)

    def new_meta(self, state: _State) -> "tuple[MetaVar, _State]":
        m = next(self.next_meta)
        return MetaVar(m), state.with_mark(m, next(self.clock))

    def level(self, e: int) -> int:
        return self.levels.get(e, 0)

    def bind(self, num: int, t: Term, state: _State) -> "_State | None":
        value = state.subst.resolve(t)
        mark = state.mark_of(num)
        if any(self.level(e) >= mark for e in term_eigenvars(value)):
            return None
        s2 = state.subst.bind(num, value)
        if s2 is None:
            return None
        state = _State(s2, state.marks)
        for other in term_metavars(value):
            if state.mark_of(other) > mark:
                state = state.with_mark(other, mark)
        return state

    def unify(self, t1: Term, t2: Term, state: _State) -> "_State | None":
        a, b = state.subst.resolve(t1), state.subst.resolve(t2)
        match a, b:
            case MetaVar(n), _:
                return self.bind(n, b, state)
            case _, MetaVar(n):
                return self.bind(n, a, state)
            case Var(x), Var(y):
                return state if x == y else None
            case EigenVar(n), EigenVar(m):
                return state if n == m else None
            case Pos(v), Pos(w):
                return state if v == w else None
            case Fun(f, fa), Fun(g, ga):
                if f != g or len(fa) != len(ga):
                    return None
                for x, y in zip(fa, ga):
                    nxt = self.unify(x, y, state)
                    if nxt is None:
                        return None
                    state = nxt
                return state
            case _:
                return None

    def _ground_key(self, ants, goal, state: _State) -> str | None:
        resolved = [substitute(f, state.subst) for f in ants + [goal]]
        if any(formula_metavars(f) for f in resolved):
            return None
        names: dict[int, int] = {}

        def canon(t: Term) -> Term:
            match t:
                case EigenVar(n):
                    return EigenVar(names.setdefault(n, len(names)))
                case Fun(sym, args):
                    return Fun(sym, tuple(canon(a) for a in args))
                case _:
                    return t

        goal_c = map_terms(resolved[-1], canon)
        ants_c = sorted(repr(map_terms(f, canon)) for f in resolved[:-1])
        return ";".join(ants_c) + "|-" + repr(goal_c)

    def solutions(self, ants: list[Formula], goal: Formula, state: _State, depth: int):
        if depth > self.max_depth:
            self.exhausted = True
            return
        # invertible rules first: no choice, no backtracking needed
        match goal:
            case Lolli(a, c):
                yield from self.solutions(ants + [a], c, state, depth + 1)
                return
            case Forall(v, body):
                inst = instantiate(body, v, self.new_eigen())
                yield from self.solutions(ants, inst, state, depth + 1)
                return
        for i, f in enumerate(ants):
            rest = ants[:i] + ants[i + 1 :]
            match f:
                case Tensor(l, r):
                    yield from self.solutions(rest + [l, r], goal, state, depth + 1)
                    return
                case Exists(v, body):
                    inst = instantiate(body, v, self.new_eigen())
                    yield from self.solutions(rest + [inst], goal, state, depth + 1)
                    return
        key = self._ground_key(ants, goal, state)
        if key is not None and key in self.memo:
            if self.memo[key]:
                yield state
            return
        found = False
        clean = not self.exhausted
        for out in self._choices(ants, goal, state, depth):
            found = True
            yield out
        if key is not None and (clean and not self.exhausted or found):
            self.memo[key] = found

    def _choices(self, ants: list[Formula], goal: Formula, state: _State, depth: int):
        if isinstance(goal, Atom) and len(ants) == 1 and isinstance(ants[0], Atom):
            if goal.pred == ants[0].pred and len(goal.args) == len(ants[0].args):
                nxt = state
                for x, y in zip(ants[0].args, goal.args):
                    nxt = self.unify(x, y, nxt)
                    if nxt is None:
                        break
                else:
                    yield nxt
        if isinstance(goal, Exists):
            m, st = self.new_meta(state)
            inst = instantiate(goal.body, goal.var, m)
            yield from self.solutions(ants, inst, st, depth + 1)
        for i, f in enumerate(ants):
            if isinstance(f, Forall):
                m, st = self.new_meta(state)
                inst = instantiate(f.body, f.var, m)
                rest = ants[:i] + ants[i + 1 :]
                yield from self.solutions(rest + [inst], goal, st, depth + 1)
        if isinstance(goal, Tensor):
            yield from self._splits_tensor(ants, goal, state, depth)
        for i, f in enumerate(ants):
            if isinstance(f, Lolli):
                rest = ants[:i] + ants[i + 1 :]
                yield from self._splits_lolli(rest, f, goal, state, depth)

    def _splits_tensor(self, ants, goal: Tensor, state: _State, depth: int):
        n = len(ants)
        for mask in range(1 << n):
            left = [ants[k] for k in range(n) if mask >> k & 1]
            right = [ants[k] for k in range(n) if not mask >> k & 1]
            for st in self.solutions(left, goal.left, state, depth + 1):
                yield from self.solutions(right, goal.right, st, depth + 1)

    def _splits_lolli(self, rest, f: Lolli, goal, state: _State, depth: int):
        n = len(rest)
        for mask in range(1 << n):
            arg = [rest[k] for k in range(n) if mask >> k & 1]
            other = [rest[k] for k in range(n) if not mask >> k & 1]
            for st in self.solutions(arg, f.antecedent, state, depth + 1):
                yield from self.solutions(
                    other + [f.consequent], goal, st, depth + 1
                )


def oracle_derivable(seq: Sequent, budget: OracleBudget | None = None) -> str:
    """Decide a sequent by exhaustive sequent-calculus search.

    Returns "yes" or "no"; "unknown" only when an explicit max_depth cut
    a branch short, which cannot happen at the default bound.
    """
    size = sum(
        connective_count(f) + atom_count(f)
        for f in seq.antecedents + (seq.succedent,)
    )
    depth = budget.max_depth if budget and budget.max_depth is not None else size + 2
    search = _Search(seq, depth)
    state = _State(Substitution(), ())
    for _ in search.solutions(list(seq.antecedents), seq.succedent, state, 0):
        return "yes"
    return "unknown" if search.exhausted else "no"


# -- Lambek sequent prover (empty premises admitted) -------------------


def lambek_derivable(
    ants: "tuple[LambekFormula, ...]", goal: LambekFormula
) -> bool:
    """Brute-force associative Lambek calculus, contiguous splits only."""
    memo: dict[tuple, bool] = {}

    def go(gamma: tuple, c: LambekFormula) -> bool:
        key = (gamma, c)
        if key in memo:
            return memo[key]
        memo[key] = False  # cycles cannot occur; placeholder for reentry
        result = derive(gamma, c)
        memo[key] = result
        return result

    def derive(gamma: tuple, c: LambekFormula) -> bool:
        match c:
            case LAtom(p):
                if len(gamma) == 1 and gamma[0] == LAtom(p):
                    return True
            case Over(num, den):
                if go(gamma + (den,), num):
                    return True
            case Under(den, num):
                if go((den,) + gamma, num):
                    return True
            case Prod(l, r):
                for j in range(len(gamma) + 1):
                    if go(gamma[:j], l) and go(gamma[j:], r):
                        return True
        for i, f in enumerate(gamma):
            match f:
                case Prod(l, r):
                    if go(gamma[:i] + (l, r) + gamma[i + 1 :], c):
                        return True
                case Over(num, den):
                    for j in range(i + 1, len(gamma) + 1):
                        if go(gamma[i + 1 : j], den) and go(
                            gamma[:i] + (num,) + gamma[j:], c
                        ):
                            return True
                case Under(den, num):
                    for j in range(i + 1):
                        if go(gamma[j:i], den) and go(
                            gamma[:j] + (num,) + gamma[i + 1 :], c
                        ):
                            return True
        return False

    return go(tuple(ants), goal)
