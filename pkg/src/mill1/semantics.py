"""Lambda terms and meaning assembly.

A reading of a sequent yields a deep-structure term: the linear lambda term
of its proof with quantifiers erased, one free variable h1..hn per
antecedent.  Substituting lexical terms for those variables and normalizing
(beta plus pair projection) gives the meaning.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .formulas import Atom, Exists, Forall, Formula, Lolli, Sequent, Tensor

if TYPE_CHECKING:  # pragma: no cover
    from .prover import Reading
    from .structure import ProofStructure


class LambdaTerm:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class LVar(LambdaTerm):
    name: str

    def __str__(self) -> str:
        return format_lambda(self)


@dataclass(frozen=True, slots=True)
class Const(LambdaTerm):
    name: str

    def __str__(self) -> str:
        return format_lambda(self)


@dataclass(frozen=True, slots=True)
class Abs(LambdaTerm):
    var: str
    body: LambdaTerm

    def __str__(self) -> str:
        return format_lambda(self)


@dataclass(frozen=True, slots=True)
class App(LambdaTerm):
    func: LambdaTerm
    arg: LambdaTerm

    def __str__(self) -> str:
        return format_lambda(self)


@dataclass(frozen=True, slots=True)
class Pair(LambdaTerm):
    left: LambdaTerm
    right: LambdaTerm

    def __str__(self) -> str:
        return format_lambda(self)


@dataclass(frozen=True, slots=True)
class LetPair(LambdaTerm):
    var_left: str
    var_right: str
    pair: LambdaTerm
    body: LambdaTerm

    def __str__(self) -> str:
        return format_lambda(self)


def free_occurrences(t: LambdaTerm) -> Counter:
    match t:
        case LVar(n):
            return Counter((n,))
        case Const():
            return Counter()
        case Abs(v, body):
            c = free_occurrences(body)
            del c[v]
            return c
        case App(f, a):
            return free_occurrences(f) + free_occurrences(a)
        case Pair(l, r):
            return free_occurrences(l) + free_occurrences(r)
        case LetPair(x, y, pair, body):
            c = free_occurrences(body)
            del c[x]
            del c[y]
            return c + free_occurrences(pair)
    raise TypeError(f"not a lambda term: {t!r}")


def is_linear(t: LambdaTerm) -> bool:
    """True when every bound variable occurs exactly once."""
    match t:
        case LVar() | Const():
            return True
        case Abs(v, body):
            return free_occurrences(body)[v] == 1 and is_linear(body)
        case App(f, a):
            return is_linear(f) and is_linear(a)
        case Pair(l, r):
            return is_linear(l) and is_linear(r)
        case LetPair(x, y, pair, body):
            occ = free_occurrences(body)
            return occ[x] == 1 and occ[y] == 1 and is_linear(pair) and is_linear(body)
    raise TypeError(f"not a lambda term: {t!r}")


_rename_counter = 0


def _freshen(name: str) -> str:
    global _rename_counter
    _rename_counter += 1
    return f"{name.split('#')[0]}#{_rename_counter}"


def subst_lambda(t: LambdaTerm, name: str, repl: LambdaTerm) -> LambdaTerm:
    """Capture-avoiding substitution of repl for the free variable name."""
    match t:
        case LVar(n):
            return repl if n == name else t
        case Const():
            return t
        case App(f, a):
            return App(subst_lambda(f, name, repl), subst_lambda(a, name, repl))
        case Pair(l, r):
            return Pair(subst_lambda(l, name, repl), subst_lambda(r, name, repl))
        case Abs(v, body):
            if v == name:
                return t
            if v in free_occurrences(repl):
                v2 = _freshen(v)
                body = subst_lambda(body, v, LVar(v2))
                v = v2
            return Abs(v, subst_lambda(body, name, repl))
        case LetPair(x, y, pair, body):
            pair = subst_lambda(pair, name, repl)
            if name in (x, y):
                return LetPair(x, y, pair, body)
            frees = free_occurrences(repl)
            if x in frees:
                x2 = _freshen(x)
                body = subst_lambda(body, x, LVar(x2))
                x = x2
            if y in frees:
                y2 = _freshen(y)
                body = subst_lambda(body, y, LVar(y2))
                y = y2
            return LetPair(x, y, pair, subst_lambda(body, name, repl))
    raise TypeError(f"not a lambda term: {t!r}")


def _step(t: LambdaTerm) -> LambdaTerm | None:
    """One leftmost-outermost reduction step, or None at normal form."""
    match t:
        case App(Abs(v, body), a):
            return subst_lambda(body, v, a)
        case LetPair(x, y, Pair(l, r), body):
            return subst_lambda(subst_lambda(body, x, l), y, r)
        case App(f, a):
            r = _step(f)
            if r is not None:
                return App(r, a)
            r = _step(a)
            return None if r is None else App(f, r)
        case Abs(v, body):
            r = _step(body)
            return None if r is None else Abs(v, r)
        case Pair(l, r):
            s = _step(l)
            if s is not None:
                return Pair(s, r)
            s = _step(r)
            return None if s is None else Pair(l, s)
        case LetPair(x, y, pair, body):
            s = _step(pair)
            if s is not None:
                return LetPair(x, y, s, body)
            s = _step(body)
            return None if s is None else LetPair(x, y, pair, s)
        case _:
            return None


def normalize(t: LambdaTerm, max_steps: int = 10_000) -> LambdaTerm:
    for _ in range(max_steps):
        r = _step(t)
        if r is None:
            return t
        t = r
    raise RuntimeError("no normal form within step limit")


def format_lambda(t: LambdaTerm) -> str:
    match t:
        case LVar(n) | Const(n):
            return n
        case App():
            head = t
            args: list[LambdaTerm] = []
            while isinstance(head, App):
                args.append(head.arg)
                head = head.func
            args.reverse()
            inner = ",".join(format_lambda(a) for a in args)
            if isinstance(head, (LVar, Const)):
                return f"{format_lambda(head)}({inner})"
            return f"({format_lambda(head)})({inner})"
        case Abs(v, body):
            return f"\\{v}.{format_lambda(body)}"
        case Pair(l, r):
            return f"<{format_lambda(l)},{format_lambda(r)}>"
        case LetPair(x, y, pair, body):
            return f"let <{x},{y}> = {format_lambda(pair)} in {format_lambda(body)}"
    raise TypeError(f"not a lambda term: {t!r}")


# -- deep structure extraction ----------------------------------------
#
# The quantifier-erased skeleton of each formula occurrence is a tree over
# arrow, tensor and occurrence-tagged atoms.  A reading's axiom matching
# pins down which atom pairs may close a branch, and a backward pass over
# the erased two-sided sequent rebuilds one (deterministic) proof, reading
# the term off the rules.  Any rebuild order would give a beta-eta-equal
# term, so determinism is all that matters here.


@dataclass(frozen=True, slots=True)
class _PLeaf:
    occ: int
    pred: str


@dataclass(frozen=True, slots=True)
class _PArrow:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class _PTens:
    left: object
    right: object


def _erased_tree(ps: "ProofStructure", occ: int):
    from .structure import ParBinary, SolidBinary, SolidUnary, UniversalUnary

    f = ps.occurrences[occ].formula
    if isinstance(f, Atom):
        return _PLeaf(occ, f.pred)
    link = ps.link_below(occ)
    if isinstance(link, (SolidUnary, UniversalUnary)):
        return _erased_tree(ps, link.child)
    assert isinstance(link, (SolidBinary, ParBinary))
    left = _erased_tree(ps, link.left)
    right = _erased_tree(ps, link.right)
    if isinstance(f, Lolli):
        return _PArrow(left, right)
    assert isinstance(f, Tensor)
    return _PTens(left, right)


def _rebuild(items, goal, partner, fresh):
    # invertible right rule
    if isinstance(goal, _PArrow):
        v = fresh("u")
        body = _rebuild(items + [(goal.left, LVar(v))], goal.right, partner, fresh)
        return None if body is None else Abs(v, body)
    # invertible left rule
    for i, (tree, val) in enumerate(items):
        if isinstance(tree, _PTens):
            x, y = fresh("v"), fresh("w")
            rest = items[:i] + items[i + 1 :]
            body = _rebuild(
                rest + [(tree.left, LVar(x)), (tree.right, LVar(y))],
                goal,
                partner,
                fresh,
            )
            return None if body is None else LetPair(x, y, val, body)
    if isinstance(goal, _PLeaf) and len(items) == 1 and isinstance(items[0][0], _PLeaf):
        return items[0][1] if partner.get(items[0][0].occ) == goal.occ else None
    if isinstance(goal, _PTens):
        n = len(items)
        for mask in range(1 << n):
            left_items = [items[k] for k in range(n) if mask >> k & 1]
            right_items = [items[k] for k in range(n) if not mask >> k & 1]
            a = _rebuild(left_items, goal.left, partner, fresh)
            if a is None:
                continue
            b = _rebuild(right_items, goal.right, partner, fresh)
            if b is not None:
                return Pair(a, b)
    for i, (tree, val) in enumerate(items):
        if not isinstance(tree, _PArrow):
            continue
        rest = items[:i] + items[i + 1 :]
        n = len(rest)
        for mask in range(1 << n):
            arg_items = [rest[k] for k in range(n) if mask >> k & 1]
            other = [rest[k] for k in range(n) if not mask >> k & 1]
            arg = _rebuild(arg_items, tree.left, partner, fresh)
            if arg is None:
                continue
            out = _rebuild(
                other + [(tree.right, App(val, arg))], goal, partner, fresh
            )
            if out is not None:
                return out
    return None


def extract_term(reading: "Reading", seq: Sequent) -> LambdaTerm:
    """Deep-structure term of a reading: free variables h1..hn, one per
    antecedent, in antecedent order."""
    ps = reading.structure
    partner: dict[int, int] = {}
    for neg, pos in reading.matching:
        partner[neg] = pos
        partner[pos] = neg
    *ant_roots, goal_root = ps.roots
    items = [(_erased_tree(ps, r), LVar(f"h{i+1}")) for i, r in enumerate(ant_roots)]
    goal = _erased_tree(ps, goal_root)
    counter = [0]

    def fresh(hint: str) -> str:
        counter[0] += 1
        return f"{hint}{counter[0]}"

    term = _rebuild(items, goal, partner, fresh)
    if term is None:
        raise ValueError("reading does not sequentialize; not a valid reading")
    return term


def meaning(
    reading: "Reading", seq: Sequent, lex_terms: "list[LambdaTerm]"
) -> LambdaTerm:
    """Substitute lexical terms for the hypotheses and normalize."""
    if len(lex_terms) != len(seq.antecedents):
        raise ValueError("one lexical term per antecedent required")
    t = extract_term(reading, seq)
    for i, lex in enumerate(lex_terms):
        t = subst_lambda(t, f"h{i+1}", lex)
    return normalize(t)


# -- simple types for the erased fragment ------------------------------


def erase_type(f: Formula) -> Formula:
    """Quantifier-erased simple type: atoms keep their predicate only."""
    match f:
        case Atom(p, _):
            return Atom(p)
        case Tensor(l, r):
            return Tensor(erase_type(l), erase_type(r))
        case Lolli(a, c):
            return Lolli(erase_type(a), erase_type(c))
        case Forall(_, body) | Exists(_, body):
            return erase_type(body)
    raise TypeError(f"not a formula: {f!r}")


def infer_type(t: LambdaTerm, env: dict[str, Formula]) -> Formula | None:
    match t:
        case LVar(n) | Const(n):
            return env.get(n)
        case App(f, a):
            ft = infer_type(f, env)
            if not isinstance(ft, Lolli):
                return None
            return ft.consequent if check_type(a, ft.antecedent, env) else None
        case LetPair(x, y, pair, body):
            pt = infer_type(pair, env)
            if not isinstance(pt, Tensor):
                return None
            return infer_type(body, {**env, x: pt.left, y: pt.right})
        case _:
            return None


def check_type(t: LambdaTerm, ty: Formula, env: dict[str, Formula]) -> bool:
    match t, ty:
        case Abs(v, body), Lolli(a, c):
            return check_type(body, c, {**env, v: a})
        case Pair(l, r), Tensor(a, b):
            return check_type(l, a, env) and check_type(r, b, env)
        case LetPair(x, y, pair, body), _:
            pt = infer_type(pair, env)
            if not isinstance(pt, Tensor):
                return False
            return check_type(body, ty, {**env, x: pt.left, y: pt.right})
        case _:
            return infer_type(t, env) == ty
