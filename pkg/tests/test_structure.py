"""Unfolding sequents into proof structures and adding axiom links."""

import pytest

from mill1.formulas import Atom
from mill1.parsing import parse_sequent
from mill1.structure import ProofStructure, add_axiom_link, unfold
from mill1.terms import EigenVar, MetaVar
from mill1.unify import EMPTY


def links_of(seq_text):
    ps = unfold(parse_sequent(seq_text))
    return ps, ps.dump_links()


def test_atom_sequent_has_no_links():
    ps, dump = links_of("a |- a")
    assert len(ps.occurrences) == 2
    assert dump == []
    assert not ps.occurrences[0].positive
    assert ps.occurrences[1].positive


def test_negative_lolli_is_solid():
    ps, dump = links_of("a -o b, a |- b")
    assert dump == ["LINK solid2 0 1 2"]
    assert ps.occurrences[1].positive
    assert not ps.occurrences[2].positive


def test_positive_lolli_is_par():
    ps, dump = links_of("|- a -o b")
    assert dump == ["LINK par2 0 1 2"]
    assert not ps.occurrences[1].positive
    assert ps.occurrences[2].positive


def test_tensor_polarities_swap_link_kind():
    _, neg = links_of("a * b |- c")
    assert neg[0] == "LINK par2 0 1 2"
    _, pos = links_of("c |- a * b")
    assert pos == ["LINK solid2 1 2 3"]


def test_negative_forall_gets_metavar():
    ps, dump = links_of("forall x. a(x) |- a(0)")
    assert dump == ["LINK solid1 0 1"]
    body = ps.occurrences[1].formula
    assert isinstance(body, Atom)
    assert body.args == (MetaVar(0),)


def test_positive_forall_gets_eigenvar():
    ps, dump = links_of("a(0) |- forall x. a(x)")
    assert dump == ["LINK univ 1 2 eigen=e0"]
    assert ps.occurrences[2].formula.args == (EigenVar(0),)


def test_exists_flips_the_quantifier_links():
    _, neg = links_of("exists x. a(x) |- a(0)")
    assert neg == ["LINK univ 0 1 eigen=e0"]
    _, pos = links_of("a(0) |- exists x. a(x)")
    assert pos == ["LINK solid1 1 2"]


def test_underivable_example_structure():
    ps, dump = links_of("(forall x. a(x)) -o b |- exists y. (a(y) -o b)")
    assert len(ps.occurrences) == 8
    assert dump == [
        "LINK solid2 0 1 3",
        "LINK univ 1 2 eigen=e0",
        "LINK solid1 4 5",
        "LINK par2 5 6 7",
    ]


def test_quantified_verb_example_counts():
    ps, dump = links_of("np(0,1), forall x. (np(x,1) -o s(x,2)) |- s(0,2)")
    assert len(ps.occurrences) == 6
    assert len(dump) == 2
    assert sorted(ps.open_atom_ids()) == [0, 3, 4, 5]


def test_distinct_eigenvariables_per_quantifier():
    ps, _ = links_of("a(0) * b(0) |- (forall x. a(x)) * (forall y. b(y))")
    labels = ps.eigen_labels()
    assert len(labels) == 2
    assert len(set(labels)) == 2


def test_polarity_counts_by_predicate():
    ps, _ = links_of("a -o b, a |- b")
    assert ps.polarity_counts() == {"a": (1, 1), "b": (1, 1)}


def test_axiom_link_success_records_pair():
    ps = unfold(parse_sequent("a |- a"))
    linked = add_axiom_link(ps, EMPTY, 0, 1)
    assert linked is not None
    ps2, s2 = linked
    assert ps2.axiom_pairs() == [(0, 1)]
    assert ps2.dump_links() == ["LINK axiom 0 1"]


def test_axiom_link_unifies_arguments():
    ps = unfold(parse_sequent("np(0,1), forall x. (np(x,1) -o s(x,2)) |- s(0,2)"))
    linked = add_axiom_link(ps, EMPTY, 0, 3)
    assert linked is not None
    _, s2 = linked
    assert str(s2) == "{?0:=0}"


def test_axiom_link_rejects_clash():
    ps = unfold(parse_sequent("np(0,1), forall x. (np(x,1) -o s(x,2)) |- s(0,2)"))
    linked = add_axiom_link(ps, EMPTY, 4, 5)
    assert linked is not None
    _, s2 = linked
    assert add_axiom_link(ps, s2, 0, 3) is not None
    ps_bad = unfold(parse_sequent("np(0,1) |- np(2,1)"))
    assert add_axiom_link(ps_bad, EMPTY, 0, 1) is None


def test_axiom_link_wrong_polarity_raises():
    ps = unfold(parse_sequent("a, a |- a * a"))
    with pytest.raises(ValueError):
        add_axiom_link(ps, EMPTY, 0, 1)


def test_axiom_link_requires_open_atoms():
    ps = unfold(parse_sequent("a |- a"))
    ps2, s2 = add_axiom_link(ps, EMPTY, 0, 1)
    with pytest.raises(ValueError):
        add_axiom_link(ps2, s2, 0, 1)


def test_unfold_preorder_is_stable():
    a = unfold(parse_sequent("a * (b -o c) |- d"))
    b = unfold(parse_sequent("a * (b -o c) |- d"))
    assert a.dump_links() == b.dump_links()
    assert [o.formula for o in a.occurrences] == [o.formula for o in b.occurrences]
