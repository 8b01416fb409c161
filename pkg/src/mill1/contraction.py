"""Graph contraction correctness criterion.

A proof structure abstracts to a graph: one vertex per occurrence,
labelled with the free eigenvariables of its formula under the final
substitution.  Solid links and axiom links become plain edges, par links
become paired dotted edges, universal links become dotted edges labelled
with their eigenvariable.  Three contractions shrink the graph, each
merging two distinct vertices and consuming one link:

  c: any solid edge.
  p: a par link whose two branches end at the same vertex, distinct
     from the main vertex.
  u: a universal link whose eigenvariable occurs only at the source
     (child-side) vertex; the variable is dropped from the merged set.

The structure is a proof net exactly when everything contracts to a
single vertex with every link consumed.  The contractions are confluent,
so a single greedy pass decides net-hood; self-loops are never
contractible and permanently mark failure.

With u disabled (rules="cp") contraction is sound on partial structures:
c and p do not inspect vertex sets, so later axiom links and bindings
cannot invalidate an early merge.  The u rule does inspect them, and
must only run on a freshly abstracted graph under the final substitution.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .formulas import free_eigenvars, substitute
from .structure import (
    AxiomLink,
    CutLink,
    ParBinary,
    ProofStructure,
    SolidBinary,
    SolidUnary,
    UniversalUnary,
)
from .terms import EigenVar
from .unify import EMPTY, Substitution


@dataclass(frozen=True, slots=True)
class ContractionStep:
    kind: str
    left: int
    right: int
    eigen: int | None = None

    def __str__(self) -> str:
        tail = "" if self.eigen is None else f" x={EigenVar(self.eigen)}"
        return f"CONTRACT {self.kind} {self.left} {self.right}{tail}"


@dataclass(slots=True)
class ContractionGraph:
    """Mutable working copy owned by one search branch."""

    rep: dict[int, int] = field(default_factory=dict)
    sets: dict[int, set[int]] = field(default_factory=dict)
    solids: list[tuple[int, int]] = field(default_factory=list)
    pars: list[tuple[int, int, int]] = field(default_factory=list)
    univs: list[tuple[int, int, int]] = field(default_factory=list)
    solid_done: list[bool] = field(default_factory=list)
    par_done: list[bool] = field(default_factory=list)
    univ_done: list[bool] = field(default_factory=list)
    open_atoms: set[int] = field(default_factory=set)

    def clone(self) -> "ContractionGraph":
        return ContractionGraph(
            dict(self.rep),
            {k: set(v) for k, v in self.sets.items()},
            list(self.solids),
            list(self.pars),
            list(self.univs),
            list(self.solid_done),
            list(self.par_done),
            list(self.univ_done),
            set(self.open_atoms),
        )

    def vertex_count(self) -> int:
        return len(self.sets)

    def add_solid(self, a: int, b: int) -> None:
        self.solids.append((a, b))
        self.solid_done.append(False)

    def _merge(self, a: int, b: int) -> int:
        keep, lose = min(a, b), max(a, b)
        for occ, r in self.rep.items():
            if r == lose:
                self.rep[occ] = keep
        self.sets[keep] |= self.sets.pop(lose)
        return keep

    def _eigen_confined(self, eigen: int, source: int) -> bool:
        return all(eigen not in s for r, s in self.sets.items() if r != source)

    def ready_c(self, i: int) -> bool:
        a, b = self.solids[i]
        return not self.solid_done[i] and self.rep[a] != self.rep[b]

    def ready_p(self, i: int) -> bool:
        m, l, r = self.pars[i]
        rl, rr = self.rep[l], self.rep[r]
        return not self.par_done[i] and rl == rr and rl != self.rep[m]

    def ready_u(self, i: int) -> bool:
        t, s, e = self.univs[i]
        rt, rs = self.rep[t], self.rep[s]
        return not self.univ_done[i] and rt != rs and self._eigen_confined(e, rs)

    def fire(self, kind: str, i: int) -> ContractionStep:
        if kind == "c":
            a, b = self.solids[i]
            self.solid_done[i] = True
            ra, rb = sorted((self.rep[a], self.rep[b]))
            self._merge(ra, rb)
            return ContractionStep("c", ra, rb)
        if kind == "p":
            m, l, _ = self.pars[i]
            self.par_done[i] = True
            rm, rl = self.rep[m], self.rep[l]
            self._merge(rm, rl)
            return ContractionStep("p", rm, rl)
        t, s, e = self.univs[i]
        self.univ_done[i] = True
        rt, rs = self.rep[t], self.rep[s]
        merged = self._merge(rt, rs)
        self.sets[merged].discard(e)
        return ContractionStep("u", rt, rs, e)

    def all_consumed(self) -> bool:
        return all(self.solid_done) and all(self.par_done) and all(self.univ_done)

    def is_single_net(self) -> bool:
        return self.vertex_count() == 1 and self.all_consumed()


def abstract(
    ps: ProofStructure, subst: Substitution = EMPTY, allow_open: bool = False
) -> ContractionGraph:
    """Forget formulas, keeping eigenvariable sets and link shape."""
    if not allow_open and ps.open_atom_ids():
        raise ValueError("abstracting a structure with open atoms")
    g = ContractionGraph()
    for occ in ps.occurrences:
        g.rep[occ.ident] = occ.ident
        g.sets[occ.ident] = set(free_eigenvars(substitute(occ.formula, subst)))
    for link in ps.links:
        match link:
            case AxiomLink(n, p) | CutLink(n, p):
                g.add_solid(n, p)
            case SolidBinary(a, l, r):
                g.add_solid(a, l)
                g.add_solid(a, r)
            case SolidUnary(a, c):
                g.add_solid(a, c)
            case ParBinary(a, l, r):
                g.pars.append((a, l, r))
                g.par_done.append(False)
            case UniversalUnary(a, c, e):
                g.univs.append((a, c, e))
                g.univ_done.append(False)
    g.open_atoms = set(ps.open_atom_ids())
    return g


def contract_fully(
    g: ContractionGraph,
    rules: str = "cpu",
    rng: "random.Random | None" = None,
    trace: "list[ContractionStep] | None" = None,
) -> ContractionGraph:
    """Contract until no rule applies; mutates and returns g.

    Deterministic scan order (c, then p, then u, each by link index)
    unless an rng picks uniformly among ready redexes; confluence makes
    the outcome identical either way.
    """
    while True:
        ready = []
        if "c" in rules:
            ready += [("c", i) for i in range(len(g.solids)) if g.ready_c(i)]
        if "p" in rules:
            ready += [("p", i) for i in range(len(g.pars)) if g.ready_p(i)]
        if "u" in rules:
            ready += [("u", i) for i in range(len(g.univs)) if g.ready_u(i)]
        if not ready:
            return g
        kind, i = ready[0] if rng is None else rng.choice(ready)
        step = g.fire(kind, i)
        if trace is not None:
            trace.append(step)


def is_proof_net(ps: ProofStructure, subst: Substitution = EMPTY) -> bool:
    return contract_fully(abstract(ps, subst)).is_single_net()


def doomed(g: ContractionGraph) -> str | None:
    """A verdict that no extension of this graph can reach a single vertex.

    "cycle": a solid self-loop, a par branch stuck at its own main
    vertex, or a cycle in the multigraph of pending universal edges.
    Merging can never split vertices and every link must eventually be
    consumed by a two-vertex contraction, so each is terminal.

    "isolated": several components and one of them has no open atoms
    left, so no future axiom link can reconnect it.

    Sound on partial structures with pending axiom links; run it after a
    rules="cp" normalization for the strongest verdict.
    """
    for i, (a, b) in enumerate(g.solids):
        if not g.solid_done[i] and g.rep[a] == g.rep[b]:
            return "cycle"
    for i, (m, l, r) in enumerate(g.pars):
        if g.par_done[i]:
            continue
        rm = g.rep[m]
        if g.rep[l] == rm or g.rep[r] == rm:
            return "cycle"
    lead: dict[int, int] = {}

    def find(x: int) -> int:
        while x in lead:
            x = lead[x]
        return x

    for i, (t, s, _) in enumerate(g.univs):
        if g.univ_done[i]:
            continue
        rt, rs = find(g.rep[t]), find(g.rep[s])
        if rt == rs:
            return "cycle"
        lead[rt] = rs
    component: dict[int, int] = {v: v for v in g.sets}

    def cfind(x: int) -> int:
        while component[x] != x:
            component[x] = component[component[x]]
            x = component[x]
        return x

    def cunion(a: int, b: int) -> None:
        ra, rb = cfind(a), cfind(b)
        if ra != rb:
            component[ra] = rb

    for i, (a, b) in enumerate(g.solids):
        if not g.solid_done[i]:
            cunion(g.rep[a], g.rep[b])
    for i, (m, l, r) in enumerate(g.pars):
        if not g.par_done[i]:
            cunion(g.rep[m], g.rep[l])
            cunion(g.rep[m], g.rep[r])
    for i, (t, s, _) in enumerate(g.univs):
        if not g.univ_done[i]:
            cunion(g.rep[t], g.rep[s])
    groups = {cfind(v) for v in g.sets}
    if len(groups) > 1:
        with_atoms = {cfind(g.rep[occ]) for occ in g.open_atoms}
        if any(grp not in with_atoms for grp in groups):
            return "isolated"
    return None


def blocked_lines(g: ContractionGraph) -> list[str]:
    """Render every stuck redex of an irreducible graph, for traces."""
    lines = []
    for i, (a, b) in enumerate(g.solids):
        if not g.solid_done[i] and g.rep[a] == g.rep[b]:
            lines.append(f"BLOCKED c {g.rep[a]} {g.rep[b]} reason=self-loop")
    for i, (m, l, r) in enumerate(g.pars):
        if g.par_done[i] or g.ready_p(i):
            continue
        rm, rl, rr = g.rep[m], g.rep[l], g.rep[r]
        reason = "branches-differ" if rl != rr else "branch-at-main"
        lines.append(f"BLOCKED p main={rm} left={rl} right={rr} reason={reason}")
    for i, (t, s, e) in enumerate(g.univs):
        if g.univ_done[i] or g.ready_u(i):
            continue
        rt, rs = g.rep[t], g.rep[s]
        reason = "same-vertex" if rt == rs else "eigen-elsewhere"
        lines.append(
            f"BLOCKED u target={rt} source={rs} x={EigenVar(e)} reason={reason}"
        )
    return lines


def graph_signature(g: ContractionGraph) -> str:
    """Canonical serialization; equal signatures mean equal graphs.

    Min-id merging makes cluster names canonical for a given partition,
    and pending links are counted at cluster level, so any two
    contraction orders of the same structure serialize identically.
    """
    parts = []
    for r in sorted(g.sets):
        label = ",".join(str(EigenVar(e)) for e in sorted(g.sets[r]))
        parts.append(f"VERTEX {r} {{{label}}}")
    edges = []
    for i, (a, b) in enumerate(g.solids):
        if not g.solid_done[i]:
            edges.append(("solid",) + tuple(sorted((g.rep[a], g.rep[b]))))
    for i, (m, l, r) in enumerate(g.pars):
        if not g.par_done[i]:
            edges.append(("par", g.rep[m]) + tuple(sorted((g.rep[l], g.rep[r]))))
    for i, (t, s, e) in enumerate(g.univs):
        if not g.univ_done[i]:
            edges.append(("univ", g.rep[t], g.rep[s], e))
    for e in sorted(edges):
        parts.append("EDGE " + " ".join(str(x) for x in e))
    return "\n".join(parts)
