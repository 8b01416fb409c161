"""Formula languages and sequents.

Two formula languages live here: first-order multiplicative intuitionistic
linear logic (tensor, linear implication, both quantifiers) and Lambek
categorial formulas (slashes and product).  Quantifiers bind names; parsers
and the sequent constructor rename bound names apart, so substitution never
captures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .terms import (
    EigenVar,
    FreshNames,
    Fun,
    MetaVar,
    Pos,
    Term,
    Var,
    replace_in_term,
    term_vars,
)

if TYPE_CHECKING:  # pragma: no cover
    from .unify import Substitution


class Formula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    pred: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        return format_mill1(self)


@dataclass(frozen=True, slots=True)
class Tensor(Formula):
    left: Formula
    right: Formula

    def __str__(self) -> str:
        return format_mill1(self)


@dataclass(frozen=True, slots=True)
class Lolli(Formula):
    antecedent: Formula
    consequent: Formula

    def __str__(self) -> str:
        return format_mill1(self)


@dataclass(frozen=True, slots=True)
class Forall(Formula):
    var: str
    body: Formula

    def __str__(self) -> str:
        return format_mill1(self)


@dataclass(frozen=True, slots=True)
class Exists(Formula):
    var: str
    body: Formula

    def __str__(self) -> str:
        return format_mill1(self)


class LambekFormula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class LAtom(LambekFormula):
    name: str

    def __str__(self) -> str:
        return format_lambek(self)


@dataclass(frozen=True, slots=True)
class Over(LambekFormula):
    """A/B: seeks a B to its right, yielding an A."""

    numerator: LambekFormula
    denominator: LambekFormula

    def __str__(self) -> str:
        return format_lambek(self)


@dataclass(frozen=True, slots=True)
class Under(LambekFormula):
    """A\\B: seeks an A to its left, yielding a B."""

    denominator: LambekFormula
    numerator: LambekFormula

    def __str__(self) -> str:
        return format_lambek(self)


@dataclass(frozen=True, slots=True)
class Prod(LambekFormula):
    left: LambekFormula
    right: LambekFormula

    def __str__(self) -> str:
        return format_lambek(self)


@dataclass(frozen=True, slots=True)
class Sequent:
    antecedents: tuple[Formula, ...]
    succedent: Formula

    def __str__(self) -> str:
        return format_sequent(self)


def free_vars(f: Formula) -> frozenset[Term]:
    """Free Var/MetaVar/EigenVar occurrences of f.

    Quantifiers bind names only; meta- and eigenvariables are always free.
    """
    match f:
        case Atom(_, args):
            out: frozenset[Term] = frozenset()
            for a in args:
                out |= term_vars(a)
            return out
        case Tensor(l, r):
            return free_vars(l) | free_vars(r)
        case Lolli(a, c):
            return free_vars(a) | free_vars(c)
        case Forall(v, body) | Exists(v, body):
            return free_vars(body) - {Var(v)}
    raise TypeError(f"not a formula: {f!r}")


def free_eigenvars(f: Formula) -> frozenset[int]:
    return frozenset(v.num for v in free_vars(f) if isinstance(v, EigenVar))


def formula_metavars(f: Formula) -> frozenset[int]:
    return frozenset(v.num for v in free_vars(f) if isinstance(v, MetaVar))


def map_terms(f: Formula, fn) -> Formula:
    match f:
        case Atom(p, args):
            return Atom(p, tuple(fn(a) for a in args))
        case Tensor(l, r):
            return Tensor(map_terms(l, fn), map_terms(r, fn))
        case Lolli(a, c):
            return Lolli(map_terms(a, fn), map_terms(c, fn))
        case Forall(v, body):
            return Forall(v, map_terms(body, fn))
        case Exists(v, body):
            return Exists(v, map_terms(body, fn))
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, s: "Substitution") -> Formula:
    """Apply a meta-variable substitution throughout f.

    Capture-free because substitution values never contain bound names:
    bound names are renamed apart to an internal namespace at construction.
    """
    return map_terms(f, s.resolve)


def instantiate(f: Formula, name: str, t: Term) -> Formula:
    """Replace free occurrences of the named variable by t."""
    match f:
        case Forall(v, _) | Exists(v, _) if v == name:
            return f
        case Forall(v, body):
            return Forall(v, instantiate(body, name, t))
        case Exists(v, body):
            return Exists(v, instantiate(body, name, t))
        case _:
            return map_terms(f, lambda a: replace_in_term(a, {Var(name): t}))


def replace_constants(f: Formula, mapping: dict[str, Term]) -> Formula:
    """Replace zero-ary function symbols by terms (placeholder filling)."""
    leafmap = {Fun(sym): t for sym, t in mapping.items()}
    return map_terms(f, lambda a: replace_in_term(a, leafmap))


def rename_apart(f: Formula, fresh: FreshNames) -> Formula:
    def go(g: Formula, env: dict[str, str]) -> Formula:
        match g:
            case Atom(p, args):
                m = {Var(old): Var(new) for old, new in env.items()}
                return Atom(p, tuple(replace_in_term(a, m) for a in args))
            case Tensor(l, r):
                return Tensor(go(l, env), go(r, env))
            case Lolli(a, c):
                return Lolli(go(a, env), go(c, env))
            case Forall(v, body):
                new = fresh.fresh(v)
                return Forall(new, go(body, {**env, v: new}))
            case Exists(v, body):
                new = fresh.fresh(v)
                return Exists(new, go(body, {**env, v: new}))
        raise TypeError(f"not a formula: {g!r}")

    return go(f, {})


def alpha_equal(f: Formula, g: Formula) -> bool:
    def terms_eq(a: Term, b: Term, env: dict[str, str]) -> bool:
        match a, b:
            case Var(x), Var(y):
                return env.get(x, x) == y
            case Fun(s1, xs), Fun(s2, ys):
                return (
                    s1 == s2
                    and len(xs) == len(ys)
                    and all(terms_eq(x, y, env) for x, y in zip(xs, ys))
                )
            case _:
                return a == b

    def go(a: Formula, b: Formula, env: dict[str, str]) -> bool:
        match a, b:
            case Atom(p1, xs), Atom(p2, ys):
                return (
                    p1 == p2
                    and len(xs) == len(ys)
                    and all(terms_eq(x, y, env) for x, y in zip(xs, ys))
                )
            case Tensor(l1, r1), Tensor(l2, r2):
                return go(l1, l2, env) and go(r1, r2, env)
            case Lolli(a1, c1), Lolli(a2, c2):
                return go(a1, a2, env) and go(c1, c2, env)
            case Forall(v1, b1), Forall(v2, b2):
                return go(b1, b2, {**env, v1: v2})
            case Exists(v1, b1), Exists(v2, b2):
                return go(b1, b2, {**env, v1: v2})
            case _:
                return False

    return go(f, g, {})


def connective_count(f: Formula) -> int:
    match f:
        case Atom():
            return 0
        case Tensor(l, r) | Lolli(l, r):
            return 1 + connective_count(l) + connective_count(r)
        case Forall(_, body) | Exists(_, body):
            return 1 + connective_count(body)
    raise TypeError(f"not a formula: {f!r}")


def atom_count(f: Formula) -> int:
    match f:
        case Atom():
            return 1
        case Tensor(l, r) | Lolli(l, r):
            return atom_count(l) + atom_count(r)
        case Forall(_, body) | Exists(_, body):
            return atom_count(body)
    raise TypeError(f"not a formula: {f!r}")


def atoms_of(f: Formula) -> Iterable[Atom]:
    match f:
        case Atom():
            yield f
        case Tensor(l, r) | Lolli(l, r):
            yield from atoms_of(l)
            yield from atoms_of(r)
        case Forall(_, body) | Exists(_, body):
            yield from atoms_of(body)


def make_sequent(antecedents: Iterable[Formula], succedent: Formula) -> Sequent:
    """Build a sequent, renaming bound names apart across all formulas.

    Also checks that predicate and function symbols are used at one arity
    throughout.
    """
    fresh = FreshNames()
    ants = tuple(rename_apart(f, fresh) for f in antecedents)
    goal = rename_apart(succedent, fresh)
    seq = Sequent(ants, goal)
    _check_arities(seq)
    return seq


def _check_arities(seq: Sequent) -> None:
    preds: dict[str, int] = {}
    funs: dict[str, int] = {}

    def terms(t: Term) -> None:
        if isinstance(t, Fun):
            seen = funs.setdefault(t.symbol, len(t.args))
            if seen != len(t.args):
                raise ValueError(
                    f"arity mismatch for function {t.symbol!r}: {seen} vs {len(t.args)}"
                )
            for a in t.args:
                terms(a)

    for f in (*seq.antecedents, seq.succedent):
        for atom in atoms_of(f):
            seen = preds.setdefault(atom.pred, len(atom.args))
            if seen != len(atom.args):
                raise ValueError(
                    f"arity mismatch for predicate {atom.pred!r}: "
                    f"{seen} vs {len(atom.args)}"
                )
            for a in atom.args:
                terms(a)


# Formatting.  Canonical form: quantifier bodies extend as far right as
# possible and are parenthesized whenever compound; a quantified formula on
# the left of -o (or either side of *) is parenthesized; -o associates
# right, * left.  Bound names display as x0, x1, ... in left-to-right
# first-occurrence order.

_ATOMIC, _TENSOR, _LOLLI, _QUANT = 3, 2, 1, 0


def _display_names(f: Formula) -> dict[str, str]:
    used: set[str] = set()

    def collect_used(t: Term) -> None:
        match t:
            case Var(n):
                used.add(n)
            case Fun(sym, args):
                if not args:
                    used.add(sym)
                for a in args:
                    collect_used(a)

    for atom in atoms_of(f):
        for a in atom.args:
            collect_used(a)

    order: list[str] = []

    def walk(g: Formula) -> None:
        match g:
            case Atom():
                pass
            case Tensor(l, r) | Lolli(l, r):
                walk(l)
                walk(r)
            case Forall(v, body) | Exists(v, body):
                order.append(v)
                walk(body)

    walk(f)
    names: dict[str, str] = {}
    k = 0
    for internal in order:
        while f"x{k}" in used:
            k += 1
        names[internal] = f"x{k}"
        k += 1
    return names


def _fmt_term(t: Term, names: dict[str, str]) -> str:
    match t:
        case Var(n):
            return names.get(n, n)
        case Fun(sym, args) if args:
            return f"{sym}({','.join(_fmt_term(a, names) for a in args)})"
        case _:
            return str(t)


def _fmt(f: Formula, names: dict[str, str], level: int) -> str:
    match f:
        case Atom(p, args):
            if not args:
                return p
            return f"{p}({','.join(_fmt_term(a, names) for a in args)})"
        case Tensor(l, r):
            text = f"{_fmt(l, names, _TENSOR)} * {_fmt(r, names, _ATOMIC)}"
            return f"({text})" if level > _TENSOR else text
        case Lolli(a, c):
            text = f"{_fmt(a, names, _TENSOR)} -o {_fmt(c, names, _QUANT)}"
            return f"({text})" if level > _LOLLI else text
        case Forall(v, body) | Exists(v, body):
            word = "forall" if isinstance(f, Forall) else "exists"
            if isinstance(body, (Atom, Forall, Exists)):
                inner = _fmt(body, names, _QUANT)
            else:
                inner = f"({_fmt(body, names, _QUANT)})"
            text = f"{word} {names.get(v, v)}. {inner}"
            return f"({text})" if level > _QUANT else text
    raise TypeError(f"not a formula: {f!r}")


def format_mill1(f: Formula) -> str:
    return _fmt(f, _display_names(f), _QUANT)


def format_sequent(seq: Sequent) -> str:
    left = ", ".join(format_mill1(f) for f in seq.antecedents)
    return f"{left} |- {format_mill1(seq.succedent)}".lstrip()


def format_lambek(f: LambekFormula) -> str:
    def unit(g: LambekFormula) -> str:
        if isinstance(g, LAtom):
            return g.name
        return f"({format_lambek(g)})"

    match f:
        case LAtom(name):
            return name
        case Over(num, den):
            return f"{unit(num)}/{unit(den)}"
        case Under(den, num):
            return f"{unit(den)}\\{unit(num)}"
        case Prod(l, r):
            return f"{unit(l)}*{unit(r)}"
    raise TypeError(f"not a Lambek formula: {f!r}")
