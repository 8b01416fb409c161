"""Proof search: enumerate axiom matchings that contract to proof nets.

Search walks the open atoms, repeatedly picking one atom (by default the
one with the fewest unifiable partners) and branching over its partners.
Two prunings keep the tree small, neither affecting the set of readings:

  - early contraction: a running graph per branch, normalized with the
    substitution-independent c and p rules after every axiom link;
  - doomed detection: configurations that can never reach a single
    vertex (dotted cycles, disconnected closed components) end the
    branch immediately.

The final verdict for a complete matching always comes from a fresh
abstraction under the final substitution with all three rules enabled.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .contraction import ContractionGraph, abstract, contract_fully, doomed
from .formulas import Atom, Formula, Sequent, make_sequent
from .structure import ProofStructure, add_axiom_link, unfold
from .translate import lint_two_occurrence
from .unify import EMPTY, Substitution, unifiable_atoms


class BudgetExhausted(Exception):
    """Raised by derivable() when the budget ran out before a verdict."""


@dataclass(frozen=True, slots=True)
class SearchConfig:
    max_readings: int | None = None
    step_budget: int | None = None
    fewest_candidates_first: bool = True
    early_contraction: bool = True
    doomed_detection: bool = True
    diagnostic_two_occurrence: bool = False
    record_stuck: bool = False

    def __post_init__(self):
        if self.max_readings is not None and self.max_readings <= 0:
            raise ValueError("max_readings must be positive")
        if self.step_budget is not None and self.step_budget <= 0:
            raise ValueError("step_budget must be positive")


@dataclass(frozen=True, slots=True)
class Reading:
    """One parse: a perfect axiom matching whose structure is a net."""

    matching: tuple[tuple[int, int], ...]
    substitution: Substitution
    structure: ProofStructure


@dataclass(slots=True)
class SearchStats:
    nodes: int = 0
    attempts: int = 0
    doomed_prunes: dict[str, int] = field(default_factory=dict)
    fast_failed: bool = False


@dataclass(frozen=True, slots=True)
class ProveResult:
    readings: tuple[Reading, ...]
    complete: bool
    budget_exhausted: bool
    truncated: bool
    stats: SearchStats
    warnings: tuple[str, ...] = ()
    stuck: tuple[Reading, ...] = ()

    @property
    def verdict(self) -> str:
        if self.readings:
            return "derivable"
        if self.complete:
            return "underivable"
        return "unknown"


class _Done(Exception):
    pass


class _Budget(Exception):
    pass


class _Searcher:
    def __init__(self, ps: ProofStructure, cfg: SearchConfig, stats: SearchStats):
        self.ps = ps
        self.cfg = cfg
        self.stats = stats
        self.readings: list[Reading] = []
        self.stuck: list[Reading] = []
        self.budget_hit = False

    def _atom(self, ident: int) -> Atom:
        f = self.ps.occurrences[ident].formula
        assert isinstance(f, Atom)
        return f

    def _partners(self, ident: int, pool: "list[int]", subst: Substitution) -> list[int]:
        a = self._atom(ident)
        return [
            q
            for q in pool
            if unifiable_atoms(a.pred, a.args, self._atom(q).pred, self._atom(q).args, subst)
        ]

    def _pick(self, negs: "list[int]", poss: "list[int]", subst: Substitution):
        """The open atom with the fewest unifiable partners, lowest id on
        ties; returns (negative id, positive partner ids)."""
        if not self.cfg.fewest_candidates_first:
            n = min(negs)
            return n, self._partners(n, poss, subst)
        best = None
        for n in sorted(negs):
            cands = self._partners(n, poss, subst)
            if best is None or len(cands) < len(best[1]):
                best = (n, cands)
        for p in sorted(poss):
            cands = self._partners(p, negs, subst)
            if len(cands) < len(best[1]):
                best = (p, cands)
        return best

    def run(self, graph: ContractionGraph | None):
        negs = [i for i in self.ps.open_atom_ids() if not self.ps.occurrences[i].positive]
        poss = [i for i in self.ps.open_atom_ids() if self.ps.occurrences[i].positive]
        try:
            self._search(self.ps, EMPTY, graph, negs, poss, ())
        except _Done:
            return False
        except _Budget:
            self.budget_hit = True
            return False
        return True

    def _search(self, ps, subst, graph, negs, poss, chosen):
        self.stats.nodes += 1
        if not negs:
            final = abstract(ps, subst)
            contract_fully(final)
            if final.is_single_net():
                self.readings.append(
                    Reading(tuple(sorted(chosen)), subst, ps)
                )
                if (
                    self.cfg.max_readings is not None
                    and len(self.readings) >= self.cfg.max_readings
                ):
                    raise _Done
            elif self.cfg.record_stuck:
                self.stuck.append(Reading(tuple(sorted(chosen)), subst, ps))
            return
        pivot, cands = self._pick(negs, poss, subst)
        pivot_pos = self.ps.occurrences[pivot].positive
        for partner in sorted(cands):
            neg, pos = (partner, pivot) if pivot_pos else (pivot, partner)
            if self.cfg.step_budget is not None:
                if self.stats.attempts >= self.cfg.step_budget:
                    raise _Budget
            self.stats.attempts += 1
            linked = add_axiom_link(ps, subst, neg, pos)
            if linked is None:
                continue
            ps2, subst2 = linked
            graph2 = None
            if graph is not None:
                graph2 = graph.clone()
                graph2.add_solid(neg, pos)
                graph2.open_atoms.discard(neg)
                graph2.open_atoms.discard(pos)
                if self.cfg.early_contraction:
                    contract_fully(graph2, rules="cp")
                if self.cfg.doomed_detection:
                    reason = doomed(graph2)
                    if reason is not None:
                        tally = self.stats.doomed_prunes
                        tally[reason] = tally.get(reason, 0) + 1
                        continue
            self._search(
                ps2,
                subst2,
                graph2,
                [n for n in negs if n != neg],
                [p for p in poss if p != pos],
                chosen + ((neg, pos),),
            )


def prove(seq: Sequent, cfg: SearchConfig | None = None) -> ProveResult:
    if cfg is None:
        cfg = SearchConfig()
    stats = SearchStats()
    warnings: tuple[str, ...] = ()
    if cfg.diagnostic_two_occurrence:
        warnings = tuple(
            w
            for f in seq.antecedents + (seq.succedent,)
            for w in lint_two_occurrence(f)
        )
    ps = unfold(seq)
    counts = ps.polarity_counts()
    if any(n != p for n, p in counts.values()):
        stats.fast_failed = True
        return ProveResult((), True, False, False, stats, warnings)
    graph = None
    if cfg.early_contraction or cfg.doomed_detection:
        graph = abstract(ps, EMPTY, allow_open=True)
        if cfg.early_contraction:
            contract_fully(graph, rules="cp")
    searcher = _Searcher(ps, cfg, stats)
    exhausted = searcher.run(graph)
    readings = tuple(sorted(searcher.readings, key=lambda r: r.matching))
    stuck = tuple(sorted(searcher.stuck, key=lambda r: r.matching))
    truncated = (
        cfg.max_readings is not None and len(readings) >= cfg.max_readings
    )
    return ProveResult(
        readings, exhausted, searcher.budget_hit, truncated, stats, warnings, stuck
    )


def derivable(premise: Formula, conclusion: Formula, cfg: SearchConfig | None = None) -> bool:
    """True when premise |- conclusion has a proof net."""
    if cfg is None:
        cfg = SearchConfig(max_readings=1)
    elif cfg.max_readings is None:
        cfg = replace(cfg, max_readings=1)
    result = prove(make_sequent([premise], conclusion), cfg)
    if result.verdict == "unknown":
        raise BudgetExhausted("no verdict within step budget")
    return bool(result.readings)


def compare(formulas: "list[Formula]", cfg: SearchConfig | None = None) -> "list[list[bool]]":
    """Full derivability matrix: entry [i][j] is formula i |- formula j."""
    return [[derivable(f, g, cfg) for g in formulas] for f in formulas]
