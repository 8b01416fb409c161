"""First-order terms over string positions.

Terms come in five shapes: named variables (bound by quantifiers),
meta-variables (unification placeholders introduced during proof search),
eigenvariables (rigid symbols introduced per quantifier occurrence),
integer position constants, and function applications.  A zero-arity
function doubles as a symbolic constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class Term:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(Term):
    """Named variable; binding is handled at the formula level."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class MetaVar(Term):
    """Unification variable standing for an arbitrary term."""

    num: int

    def __str__(self) -> str:
        return f"?{self.num}"


@dataclass(frozen=True, slots=True)
class EigenVar(Term):
    """Rigid variable; unifies only with itself or a meta-variable."""

    num: int

    def __str__(self) -> str:
        return f"e{self.num}"


@dataclass(frozen=True, slots=True)
class Pos(Term):
    """String position constant."""

    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Fun(Term):
    symbol: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(str(a) for a in self.args)})"


def term_vars(t: Term) -> frozenset[Term]:
    """All Var, MetaVar and EigenVar leaves of t."""
    match t:
        case Var() | MetaVar() | EigenVar():
            return frozenset((t,))
        case Fun(_, args):
            out: frozenset[Term] = frozenset()
            for a in args:
                out |= term_vars(a)
            return out
        case _:
            return frozenset()


def term_metavars(t: Term) -> frozenset[int]:
    return frozenset(v.num for v in term_vars(t) if isinstance(v, MetaVar))


def term_eigenvars(t: Term) -> frozenset[int]:
    return frozenset(v.num for v in term_vars(t) if isinstance(v, EigenVar))


def replace_in_term(t: Term, mapping: dict[Term, Term]) -> Term:
    """Replace leaf terms (Var/MetaVar/EigenVar/zero-ary Fun keys) by terms."""
    if t in mapping:
        return mapping[t]
    if isinstance(t, Fun) and t.args:
        return Fun(t.symbol, tuple(replace_in_term(a, mapping) for a in t.args))
    return t


@dataclass
class FreshIndices:
    """Counter pair handing out metavariable and eigenvariable numbers."""

    meta: int = 0
    eigen: int = 0

    def fresh_meta(self) -> int:
        n = self.meta
        self.meta += 1
        return n

    def fresh_eigen(self) -> int:
        n = self.eigen
        self.eigen += 1
        return n


@dataclass
class FreshNames:
    """Counter-backed source of internal variable names.

    Generated names contain '#', which the ASCII grammar cannot produce,
    so they never collide with user identifiers.
    """

    counter: int = 0
    taken: set[str] = field(default_factory=set)

    def fresh(self, hint: str = "x") -> str:
        base = hint.split("#", 1)[0] or "x"
        while True:
            name = f"{base}#{self.counter}"
            self.counter += 1
            if name not in self.taken:
                self.taken.add(name)
                return name
