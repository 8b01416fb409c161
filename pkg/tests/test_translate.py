"""Lambek-to-first-order translation goldens and the occurrence lint."""

import pytest

from mill1.formulas import alpha_equal, format_mill1
from mill1.parsing import parse_lambek, parse_mill1
from mill1.terms import FreshNames, Pos
from mill1.translate import Span, lint_two_occurrence, span_at, translate_lambek


def tr(text, left, right):
    f = translate_lambek(parse_lambek(text), Span(Pos(left), Pos(right)), FreshNames())
    return format_mill1(f)


GOLDENS = [
    ("np", 0, 1, "np(0,1)"),
    ("np\\s", 1, 2, "forall x0. (np(x0,1) -o s(x0,2))"),
    ("(np\\s)/np", 1, 2, "forall x0. (np(2,x0) -o forall x1. (np(x1,1) -o s(x1,x0)))"),
    ("np*(np\\s)", 0, 2, "exists x0. (np(0,x0) * (forall x1. (np(x1,x0) -o s(x1,2))))"),
    (
        "(n\\n)/(s/np)",
        3,
        4,
        "forall x0. ((forall x1. (np(x0,x1) -o s(4,x1))) -o forall x2. (n(x2,3) -o n(x2,x0)))",
    ),
    (
        "(n\\n)/(np\\s)",
        3,
        4,
        "forall x0. ((forall x1. (np(x1,4) -o s(x1,x0))) -o forall x2. (n(x2,3) -o n(x2,x0)))",
    ),
]


@pytest.mark.parametrize("text,left,right,want", GOLDENS)
def test_translation_golden(text, left, right, want):
    assert tr(text, left, right) == want


def test_span_at_counts_word_boundaries():
    s = span_at(2)
    assert s.left == Pos(2)
    assert s.right == Pos(3)


def test_translation_matches_fixture_lambek_entries():
    # Formula file entries 4 and 5 are translations of the two slash
    # categories for peripheral extraction; check alpha equality.
    lambek4 = tr("(n\\n)/(np\\s)", 3, 4)
    lambek5 = tr("(n\\n)/(s/np)", 3, 4)
    fix4 = "forall x0. ((forall x1. (np(x1,4) -o s(x1,x0))) -o forall x2. (n(x2,3) -o n(x2,x0)))"
    fix5 = "forall x0. ((forall x1. (np(x0,x1) -o s(4,x1))) -o forall x2. (n(x2,3) -o n(x2,x0)))"
    assert alpha_equal(parse_mill1(lambek4), parse_mill1(fix4))
    assert alpha_equal(parse_mill1(lambek5), parse_mill1(fix5))


def test_translations_pass_two_occurrence_lint():
    for text, left, right, _ in GOLDENS:
        f = translate_lambek(parse_lambek(text), Span(Pos(left), Pos(right)), FreshNames())
        assert lint_two_occurrence(f) == []


def test_lint_flags_single_occurrence():
    f = parse_mill1("forall x. (a(x,0) -o b)")
    warnings = lint_two_occurrence(f)
    assert warnings == ["expected exactly 2 occurrences of x, found 1"]


def test_lint_flags_same_sign_occurrences():
    f = parse_mill1("forall x. (a(0,x) -o b(x,1))")
    assert lint_two_occurrence(f) != []


def test_lint_accepts_opposite_signs():
    g = parse_mill1("forall x. (a(x,0) -o b(x,1))")
    assert lint_two_occurrence(g) == []


def test_nested_quantifiers_all_checked():
    f = parse_mill1("forall x. forall y. (np(x,y) -o s(x,y))")
    assert lint_two_occurrence(f) == []
