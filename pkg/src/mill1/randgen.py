"""Seeded random generators for corpus-style tests.

Three product lines: small first-order sequents (for prover/oracle
agreement), Lambek sequents (for conservativity of the translation),
and complete proof structures with a randomly chosen axiom matching
(for contraction-order confluence). All functions take an explicit
random.Random so a seed pins the corpus.
"""

from __future__ import annotations

import random

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
    make_sequent,
)
from .structure import ProofStructure, add_axiom_link, unfold
from .terms import Pos, Term, Var
from .unify import EMPTY, Substitution

PREDICATES = (("p", 0), ("q", 0), ("a", 1), ("b", 1), ("r", 2))


class _Budget:
    def __init__(self, atoms: int, quantifiers: int):
        self.atoms = atoms
        self.quantifiers = quantifiers


def _atom(rng: random.Random, scope: "list[str]") -> Atom:
    pred, arity = rng.choice(PREDICATES)
    args: list[Term] = []
    for _ in range(arity):
        if scope and rng.random() < 0.7:
            args.append(Var(rng.choice(scope)))
        else:
            args.append(Pos(rng.randrange(3)))
    return Atom(pred, tuple(args))


def _formula(rng: random.Random, depth: int, budget: _Budget, scope: "list[str]") -> Formula:
    if depth <= 0 or budget.atoms <= 1 or rng.random() < 0.3:
        budget.atoms -= 1
        return _atom(rng, scope)
    kinds = ["tensor", "lolli"]
    if budget.quantifiers > 0:
        kinds += ["forall", "exists"]
    kind = rng.choice(kinds)
    if kind in ("forall", "exists"):
        budget.quantifiers -= 1
        name = f"v{len(scope)}"
        body = _formula(rng, depth - 1, budget, scope + [name])
        return (Forall if kind == "forall" else Exists)(name, body)
    left = _formula(rng, depth - 1, budget, scope)
    right = _formula(rng, depth - 1, budget, scope)
    return (Tensor if kind == "tensor" else Lolli)(left, right)


def random_formula(
    rng: random.Random,
    max_atoms: int = 4,
    max_quantifiers: int = 2,
    max_depth: int = 4,
) -> Formula:
    return _formula(rng, max_depth, _Budget(max_atoms, max_quantifiers), [])


def random_sequent(
    rng: random.Random,
    max_atoms: int = 8,
    max_quantifiers: int = 3,
    max_depth: int = 4,
) -> Sequent:
    """A small sequent. Mixes three recipes so both derivable and
    underivable cases show up: free-form, identity pairs, and identity
    pairs with one side lightly rewrapped."""
    style = rng.random()
    if style < 0.45:
        budget = _Budget(max_atoms, max_quantifiers)
        n_ants = rng.randrange(3)
        depth_goal = rng.randrange(1, max_depth + 1)
        ants = [_formula(rng, rng.randrange(1, max_depth + 1), budget, []) for _ in range(n_ants)]
        goal = _formula(rng, depth_goal, budget, [])
        return make_sequent(ants, goal)
    half = max(1, max_atoms // 2)
    f = random_formula(rng, half, max_quantifiers, max_depth - 1)
    if style < 0.75:
        return make_sequent([f], f)
    g = random_formula(rng, max_atoms - half, 0, 1)
    if rng.random() < 0.5:
        return make_sequent([f], Tensor(g, f) if rng.random() < 0.5 else Lolli(g, f))
    return make_sequent([Tensor(f, g)], Tensor(g, f))


LAMBEK_ATOMS = ("np", "s", "n")


def random_lambek_formula(rng: random.Random, depth: int = 3) -> LambekFormula:
    if depth <= 0 or rng.random() < 0.4:
        return LAtom(rng.choice(LAMBEK_ATOMS))
    kind = rng.randrange(3)
    left = random_lambek_formula(rng, depth - 1)
    right = random_lambek_formula(rng, depth - 1)
    if kind == 0:
        return Over(left, right)
    if kind == 1:
        return Under(left, right)
    return Prod(left, right)


def random_lambek_sequent(
    rng: random.Random, max_formulas: int = 5, depth: int = 3
) -> "tuple[tuple[LambekFormula, ...], LambekFormula]":
    """Antecedent list plus goal. Half free-form, half built from an
    identity or composition skeleton so derivable cases are common."""
    if rng.random() < 0.5:
        n = rng.randrange(1, max_formulas + 1)
        ants = tuple(random_lambek_formula(rng, depth) for _ in range(n))
        return ants, random_lambek_formula(rng, depth)
    f = random_lambek_formula(rng, depth - 1)
    g = random_lambek_formula(rng, depth - 1)
    pick = rng.randrange(4)
    if pick == 0:
        return (f,), f
    if pick == 1:
        return (Over(f, g), g), f
    if pick == 2:
        return (g, Under(g, f)), f
    return (f, g), Prod(f, g)


def random_structure(
    rng: random.Random,
    max_atoms: int = 6,
    max_tries: int = 40,
) -> "tuple[ProofStructure, Substitution] | None":
    """A complete proof structure: random sequent, random perfect axiom
    matching found by backtracking. Matchings need not be proof nets.
    None when no balanced matchable sequent turned up in max_tries."""
    for _ in range(max_tries):
        seq = random_sequent(rng, max_atoms=max_atoms)
        ps = unfold(seq)
        counts = ps.polarity_counts()
        if not counts or any(n != p for n, p in counts.values()):
            continue
        negs = [i for i in ps.open_atom_ids() if not ps.occurrences[i].positive]
        poss = [i for i in ps.open_atom_ids() if ps.occurrences[i].positive]
        done = _match(rng, ps, EMPTY, negs, poss)
        if done is not None:
            return done
    return None


def _match(rng, ps, subst, negs, poss):
    if not negs:
        return ps, subst
    n = negs[0]
    order = list(poss)
    rng.shuffle(order)
    for p in order:
        linked = add_axiom_link(ps, subst, n, p)
        if linked is None:
            continue
        done = _match(rng, linked[0], linked[1], negs[1:], [q for q in poss if q != p])
        if done is not None:
            return done
    return None
