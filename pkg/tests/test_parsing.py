"""Parser and formatter round trips for both formula languages."""

import pytest

from mill1.formulas import (
    Atom,
    Exists,
    Forall,
    LAtom,
    Lolli,
    Over,
    Prod,
    Tensor,
    Under,
    alpha_equal,
    format_lambek,
    format_mill1,
    format_sequent,
)
from mill1.parsing import (
    ParseError,
    parse_formula_file,
    parse_lambek,
    parse_mill1,
    parse_sequent,
)
from mill1.terms import Fun, Pos, Var


def test_atom_with_positions():
    f = parse_mill1("np(0,1)")
    assert f == Atom("np", (Pos(0), Pos(1)))


def test_connective_precedence():
    f = parse_mill1("a * b -o c")
    assert isinstance(f, Lolli)
    assert isinstance(f.antecedent, Tensor)


def test_lolli_right_associative():
    f = parse_mill1("a -o b -o c")
    assert isinstance(f, Lolli)
    assert isinstance(f.consequent, Lolli)


def test_quantifier_scopes_maximally():
    f = parse_mill1("forall x. a(x) -o b")
    assert isinstance(f, Forall)
    assert isinstance(f.body, Lolli)


def test_parenthesized_quantifier_stays_tight():
    f = parse_mill1("(forall x. a(x)) -o b")
    assert isinstance(f, Lolli)
    assert isinstance(f.antecedent, Forall)


def test_exists_parses():
    f = parse_mill1("exists y. (a(y) -o b)")
    assert isinstance(f, Exists)


def test_unbound_name_reads_as_constant():
    f = parse_mill1("a(x)")
    assert f == Atom("a", (Fun("x", ()),))


def test_arity_conflict_rejected():
    with pytest.raises(ParseError):
        parse_mill1("a(0) * a(0,1)")


def test_trailing_input_rejected():
    with pytest.raises(ParseError):
        parse_mill1("a b")


def test_sequent_splits_on_turnstile():
    seq = parse_sequent("a, b |- a * b")
    assert len(seq.antecedents) == 2


def test_empty_antecedents_allowed():
    seq = parse_sequent("|- a -o a")
    assert seq.antecedents == ()


MILL1_FORMS = [
    "np(0,1)",
    "forall x0. (np(x0,1) -o s(x0,2))",
    "exists x0. (a(0,x0) * b(x0,2))",
    "forall x0. ((exists x1. (np(x1,x1) -o s(4,x0))) -o forall x2. (n(x2,3) -o n(x2,x0)))",
    "a -o b -o c",
    "(a -o b) -o c",
    "forall x0. forall x1. forall x2. ((np(x1,x1) -o s(2,x2)) -o np(x0,1) -o s(x0,x2))",
]


@pytest.mark.parametrize("text", MILL1_FORMS)
def test_mill1_format_round_trip(text):
    f = parse_mill1(text)
    assert format_mill1(f) == text
    assert alpha_equal(parse_mill1(format_mill1(f)), f)


def test_lambek_atoms_and_slashes():
    f = parse_lambek("(n\\n)/(s/np)")
    assert f == Over(Under(LAtom("n"), LAtom("n")), Over(LAtom("s"), LAtom("np")))


def test_lambek_product():
    f = parse_lambek("np*(np\\s)")
    assert isinstance(f, Prod)


@pytest.mark.parametrize(
    "text", ["np", "np\\s", "(np\\s)/np", "(n\\n)/(s/np)", "np*(np\\s)", "a/(b/(c/d))"]
)
def test_lambek_format_round_trip(text):
    assert format_lambek(parse_lambek(text)) == text


def test_sequent_formats_back():
    text = "np(0,1), forall x0. (np(x0,1) -o s(x0,2)) |- s(0,2)"
    assert format_sequent(parse_sequent(text)) == text


def test_formula_file_names_and_errors():
    named = parse_formula_file("one: a\n# comment\ntwo: a -o a\n")
    assert [name for name, _ in named] == ["one", "two"]
    with pytest.raises(ParseError) as err:
        parse_formula_file("one: a\nbad line\n")
    assert "line 2" in str(err.value)


def test_formula_file_shares_arities():
    with pytest.raises(ParseError):
        parse_formula_file("one: a(0)\ntwo: a(0,1)\n")


def test_error_position_reported():
    with pytest.raises(ParseError) as err:
        parse_mill1("a -o")
    assert err.value.pos is not None


def test_bound_variable_shadowing():
    f = parse_mill1("forall x. (a(x) * exists x. b(x))")
    inner = f.body.right
    assert isinstance(inner, Exists)
    assert inner.body == Atom("b", (Var(inner.var),))
