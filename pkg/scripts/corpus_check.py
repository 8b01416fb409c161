"""Cross-check the proof-net prover against the sequent-calculus oracle.

Generates a seeded corpus of random sequents, runs both deciders, and
reports the agreement rate.  A second corpus of random Lambek sequents
checks the positional translation against the direct Lambek oracle.
"""

import argparse
import random
import sys
import time

from mill1.formulas import format_lambek, format_sequent, make_sequent
from mill1.oracle import lambek_derivable, oracle_derivable
from mill1.prover import prove
from mill1.randgen import random_lambek_sequent, random_sequent
from mill1.terms import FreshNames, Pos
from mill1.translate import Span, translate_lambek


def check_mill1(count: int, seed: int) -> int:
    bad = 0
    yes = 0
    start = time.perf_counter()
    for i in range(count):
        seq = random_sequent(random.Random(seed + i))
        verdict = prove(seq).verdict
        oracle = oracle_derivable(seq)
        yes += verdict == "derivable"
        if (verdict == "derivable") != (oracle == "yes"):
            bad += 1
            print(f"MISMATCH prover={verdict} oracle={oracle}: {format_sequent(seq)}")
    elapsed = time.perf_counter() - start
    print(
        f"mill1: {count - bad}/{count} agree "
        f"({yes} derivable) in {elapsed:.2f}s"
    )
    return bad


def check_lambek(count: int, seed: int) -> int:
    bad = 0
    yes = 0
    start = time.perf_counter()
    for i in range(count):
        ants, goal = random_lambek_sequent(random.Random(seed + i))
        fresh = FreshNames()
        mill_ants = [
            translate_lambek(f, Span(Pos(k), Pos(k + 1)), fresh)
            for k, f in enumerate(ants)
        ]
        mill_goal = translate_lambek(goal, Span(Pos(0), Pos(len(ants))), fresh)
        via_translation = prove(make_sequent(mill_ants, mill_goal)).verdict
        direct = lambek_derivable(ants, goal)
        yes += direct
        if (via_translation == "derivable") != direct:
            bad += 1
            shown = ", ".join(format_lambek(f) for f in ants)
            print(
                f"MISMATCH translation={via_translation} lambek={direct}: "
                f"{shown} |- {format_lambek(goal)}"
            )
    elapsed = time.perf_counter() - start
    print(
        f"lambek: {count - bad}/{count} agree "
        f"({yes} derivable) in {elapsed:.2f}s"
    )
    return bad


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500, help="sequents per corpus")
    ap.add_argument("--seed", type=int, default=0, help="base seed")
    ap.add_argument(
        "--skip-lambek", action="store_true", help="only run the mill1 corpus"
    )
    args = ap.parse_args(argv)
    bad = check_mill1(args.count, args.seed)
    if not args.skip_lambek:
        bad += check_lambek(args.count, args.seed)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
