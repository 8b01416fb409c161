"""Command line goldens: exact output lines and exit codes."""

import pytest

from mill1.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.splitlines(), out.err


def test_prove_underivable_with_trace(capsys):
    code, lines, _ = run(
        capsys, "prove", "(forall x. a(x)) -o b |- exists y. (a(y) -o b)", "--trace"
    )
    assert code == 1
    assert lines == [
        "MATCHING 1: 3-7 6-2",
        "STEP 1 CONTRACT c 0 1",
        "STEP 2 CONTRACT c 0 3",
        "STEP 3 CONTRACT c 4 5",
        "STEP 4 CONTRACT c 0 7",
        "STEP 5 CONTRACT c 2 6",
        "STUCK vertices=3",
        "BLOCKED p main=4 left=2 right=0 reason=branches-differ",
        "BLOCKED u target=0 source=2 x=e0 reason=eigen-elsewhere",
        "UNDERIVABLE",
    ]


def test_prove_derivable_with_substitution(capsys):
    code, lines, _ = run(
        capsys, "prove", "np(0,1), forall x. (np(x,1) -o s(x,2)) |- s(0,2)"
    )
    assert code == 0
    assert lines == [
        "READING 1: 0-3 4-5",
        "READING 1 SUBST: ?0:=0",
        "READINGS: 1",
    ]


def test_prove_trace_shows_net(capsys):
    code, lines, _ = run(capsys, "prove", "a |- a", "--trace")
    assert code == 0
    assert lines == [
        "MATCHING 1: 0-1",
        "STEP 1 CONTRACT c 0 1",
        "NET",
        "READING 1: 0-1",
        "READINGS: 1",
    ]


def test_prove_plain_underivable(capsys):
    code, lines, _ = run(capsys, "prove", "a |- b")
    assert code == 1
    assert lines == ["UNDERIVABLE"]


def test_prove_budget_exit(capsys):
    code, lines, _ = run(
        capsys, "prove", "a * (b * c) |- c * (b * a)", "--budget", "1"
    )
    assert code == 2
    assert lines == ["BUDGET"]


def test_prove_parse_error_exit(capsys):
    code, _, err = run(capsys, "prove", "a |- a *")
    assert code == 3
    assert "error" in err


def test_prove_oracle_flag(capsys):
    code, lines, _ = run(capsys, "prove", "a |- a", "--oracle")
    assert code == 0
    assert lines == ["ORACLE: yes"]
    code, lines, _ = run(capsys, "prove", "a |- b", "--oracle")
    assert code == 1
    assert lines == ["ORACLE: no"]


def test_parse_sentence_with_semantics(capsys, fixtures_dir):
    code, lines, _ = run(
        capsys, "parse", str(fixtures_dir / "sample.tlg"), "john sleeps", "--sem"
    )
    assert code == 0
    assert lines == [
        "SEQUENT 1: np(0,1), forall x0. (np(x0,1) -o s(x0,2)) |- s(0,2)",
        "SEQUENT 1 READINGS: 1",
        "SEM: sleep(john)",
        "READINGS: 1",
    ]


def test_parse_transitive_semantics(capsys, fixtures_dir):
    code, lines, _ = run(
        capsys, "parse", str(fixtures_dir / "sample.tlg"), "john hit mary", "--sem"
    )
    assert code == 0
    assert "SEM: hit(john,mary)" in lines


def test_parse_relative_clause_semantics(capsys, fixtures_dir):
    code, lines, _ = run(
        capsys,
        "parse",
        str(fixtures_dir / "sample.tlg"),
        "the book which mary hit sleeps",
        "--sem",
    )
    assert code == 0
    assert "SEM: sleep(the(\\x.and(book(x),hit(mary,x))))" in lines


def test_parse_unknown_word(capsys, fixtures_dir):
    code, _, err = run(capsys, "parse", str(fixtures_dir / "sample.tlg"), "john flies")
    assert code == 3
    assert "unknown word: flies" in err


def test_parse_ungrammatical_sentence(capsys, fixtures_dir):
    code, lines, _ = run(capsys, "parse", str(fixtures_dir / "sample.tlg"), "sleeps john")
    assert code == 1
    assert lines[-1] == "UNDERIVABLE"


def test_parse_goal_override(capsys, fixtures_dir):
    code, lines, _ = run(
        capsys,
        "parse",
        str(fixtures_dir / "sample.tlg"),
        "john",
        "--goal",
        "np(0,1)",
    )
    assert code == 0
    assert lines[-1] == "READINGS: 1"


def test_translate_goldens(capsys):
    for argv, want in [
        (("translate", "np", "0", "1"), "np(0,1)"),
        (("translate", "np\\s", "1", "2"), "forall x0. (np(x0,1) -o s(x0,2))"),
        (
            ("translate", "(n\\n)/(s/np)", "3", "4"),
            "forall x0. ((forall x1. (np(x0,x1) -o s(4,x1))) "
            "-o forall x2. (n(x2,3) -o n(x2,x0)))",
        ),
    ]:
        code, lines, _ = run(capsys, *argv)
        assert code == 0
        assert lines == [want]


def test_translate_lint_clean(capsys):
    code, lines, _ = run(
        capsys, "translate", "(np\\s)/(np\\s)", "1", "2", "--lint-two-occurrence"
    )
    assert code == 0
    assert len(lines) == 1


def test_compare_adverb_file(capsys, fixtures_dir):
    code, lines, _ = run(capsys, "compare", str(fixtures_dir / "adverbs.fol"))
    assert code == 0
    assert lines == [
        "8 -> 8",
        "9 -> 8",
        "9 -> 9",
        "10 -> 8",
        "10 -> 10",
        "11 -> 8",
        "11 -> 11",
    ]


def test_compare_missing_file(capsys):
    code, _, err = run(capsys, "compare", "no_such_file.fol")
    assert code == 3
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["prove"])
    assert e.value.code == 3
