"""Proof structures: polarized formula unfolding plus axiom links.

A sequent unfolds into a forest of occurrences, negative for antecedents
and positive for the goal.  Each non-atomic occurrence is decomposed by
exactly one link; quantifier links instantiate the bound variable with a
fresh metavariable (negative forall, positive exists) or a fresh
eigenvariable (positive forall, negative exists).  Axiom links connect
atoms of opposite polarity and are added later, during search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import (
    Atom,
    Exists,
    Forall,
    Formula,
    Lolli,
    Sequent,
    Tensor,
    instantiate,
)
from .terms import EigenVar, FreshIndices, MetaVar
from .unify import Substitution, unify_all


@dataclass(frozen=True, slots=True)
class Occurrence:
    ident: int
    formula: Formula
    positive: bool

    @property
    def polarity(self) -> str:
        return "pos" if self.positive else "neg"


class Link:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class AxiomLink(Link):
    neg: int
    pos: int


@dataclass(frozen=True, slots=True)
class CutLink(Link):
    """Representable for externally built structures; search never adds one."""

    neg: int
    pos: int


@dataclass(frozen=True, slots=True)
class SolidBinary(Link):
    """Negative lolli (children antecedent+, consequent-) and positive
    tensor (children +,+)."""

    parent: int
    left: int
    right: int


@dataclass(frozen=True, slots=True)
class ParBinary(Link):
    """Positive lolli (children antecedent-, consequent+) and negative
    tensor (children -,-); the two dotted edges are paired."""

    parent: int
    left: int
    right: int


@dataclass(frozen=True, slots=True)
class SolidUnary(Link):
    """Negative forall and positive exists; child instantiated with a
    fresh metavariable."""

    parent: int
    child: int


@dataclass(frozen=True, slots=True)
class UniversalUnary(Link):
    """Positive forall and negative exists; dotted edge labelled with the
    fresh eigenvariable, pointing from the child up to the quantifier."""

    parent: int
    child: int
    eigen: int


@dataclass(frozen=True, slots=True)
class ProofStructure:
    occurrences: tuple[Occurrence, ...]
    links: tuple[Link, ...]
    roots: tuple[int, ...]

    def link_below(self, occ: int) -> Link | None:
        """The decomposition link whose parent is this occurrence."""
        for link in self.links:
            match link:
                case SolidBinary(p, _, _) | ParBinary(p, _, _):
                    if p == occ:
                        return link
                case SolidUnary(p, _) | UniversalUnary(p, _, _):
                    if p == occ:
                        return link
        return None

    def atom_ids(self) -> list[int]:
        return [o.ident for o in self.occurrences if isinstance(o.formula, Atom)]

    def axiom_pairs(self) -> list[tuple[int, int]]:
        return [(l.neg, l.pos) for l in self.links if isinstance(l, AxiomLink)]

    def open_atom_ids(self) -> list[int]:
        closed = set()
        for link in self.links:
            if isinstance(link, (AxiomLink, CutLink)):
                closed.add(link.neg)
                closed.add(link.pos)
        return [i for i in self.atom_ids() if i not in closed]

    def polarity_counts(self) -> dict[str, tuple[int, int]]:
        """Per predicate: open (negative, positive) atom counts."""
        counts: dict[str, list[int]] = {}
        for i in self.open_atom_ids():
            occ = self.occurrences[i]
            assert isinstance(occ.formula, Atom)
            row = counts.setdefault(occ.formula.pred, [0, 0])
            row[1 if occ.positive else 0] += 1
        return {p: (n, q) for p, (n, q) in counts.items()}

    def with_axiom(self, neg: int, pos: int) -> "ProofStructure":
        return ProofStructure(self.occurrences, self.links + (AxiomLink(neg, pos),), self.roots)

    def eigen_labels(self) -> list[int]:
        return [l.eigen for l in self.links if isinstance(l, UniversalUnary)]

    def dump_links(self) -> list[str]:
        """One line per link, ordered by lead node id, for golden tests."""

        def render(link: Link) -> tuple[int, str, str]:
            match link:
                case AxiomLink(n, p):
                    return n, "axiom", f"LINK axiom {n} {p}"
                case CutLink(n, p):
                    return n, "cut", f"LINK cut {n} {p}"
                case SolidBinary(a, l, r):
                    return a, "solid2", f"LINK solid2 {a} {l} {r}"
                case ParBinary(a, l, r):
                    return a, "par2", f"LINK par2 {a} {l} {r}"
                case SolidUnary(a, c):
                    return a, "solid1", f"LINK solid1 {a} {c}"
                case UniversalUnary(a, c, e):
                    return a, "univ", f"LINK univ {a} {c} eigen={EigenVar(e)}"
            raise TypeError(f"not a link: {link!r}")

        return [text for _, _, text in sorted(render(l) for l in self.links)]


def unfold(seq: Sequent, indices: FreshIndices | None = None) -> ProofStructure:
    """Decompose a sequent into its proof structure, without axiom links.

    Occurrence ids are preorder: antecedents left to right, goal last,
    each parent before its children and left child before right.
    """
    if indices is None:
        indices = FreshIndices()
    occurrences: list[Occurrence] = []
    links: list[Link] = []

    def go(f: Formula, positive: bool) -> int:
        ident = len(occurrences)
        occurrences.append(Occurrence(ident, f, positive))
        match f:
            case Atom():
                pass
            case Lolli(a, c) if positive:
                links.append(ParBinary(ident, go(a, False), go(c, True)))
            case Lolli(a, c):
                links.append(SolidBinary(ident, go(a, True), go(c, False)))
            case Tensor(l, r) if positive:
                links.append(SolidBinary(ident, go(l, True), go(r, True)))
            case Tensor(l, r):
                links.append(ParBinary(ident, go(l, False), go(r, False)))
            case Forall(v, body) if positive:
                e = indices.fresh_eigen()
                links.append(
                    UniversalUnary(ident, go(instantiate(body, v, EigenVar(e)), True), e)
                )
            case Forall(v, body):
                m = indices.fresh_meta()
                links.append(SolidUnary(ident, go(instantiate(body, v, MetaVar(m)), False)))
            case Exists(v, body) if positive:
                m = indices.fresh_meta()
                links.append(SolidUnary(ident, go(instantiate(body, v, MetaVar(m)), True)))
            case Exists(v, body):
                e = indices.fresh_eigen()
                links.append(
                    UniversalUnary(ident, go(instantiate(body, v, EigenVar(e)), False), e)
                )
            case _:
                raise TypeError(f"not a formula: {f!r}")
        return ident

    roots = tuple(go(a, False) for a in seq.antecedents) + (go(seq.succedent, True),)
    return ProofStructure(tuple(occurrences), tuple(links), roots)


def add_axiom_link(
    ps: ProofStructure, subst: Substitution, neg: int, pos: int
) -> "tuple[ProofStructure, Substitution] | None":
    """Link two open atoms of opposite polarity, unifying their arguments.

    None signals a dead search branch (clash or occurs-check failure).
    """
    nocc, pocc = ps.occurrences[neg], ps.occurrences[pos]
    if nocc.positive or not pocc.positive:
        raise ValueError("axiom link endpoints must be negative then positive")
    nf, pf = nocc.formula, pocc.formula
    if not (isinstance(nf, Atom) and isinstance(pf, Atom)):
        raise ValueError("axiom link endpoints must be atoms")
    open_ids = set(ps.open_atom_ids())
    if neg not in open_ids or pos not in open_ids:
        raise ValueError("axiom link endpoints must be open")
    if nf.pred != pf.pred or len(nf.args) != len(pf.args):
        return None
    extended = unify_all(list(zip(nf.args, pf.args)), subst)
    if extended is None:
        return None
    return ps.with_axiom(neg, pos), extended
