"""Measure what the search-space pruning rules buy on a random corpus.

Runs every sequent twice, with pruning off and on, and confirms the
verdicts and reading sets never change while the visited node count
drops.  Prints a per-reason breakdown of doomed-branch cuts.
"""

import argparse
import random
import sys
from collections import Counter

from mill1.prover import SearchConfig, prove
from mill1.randgen import random_sequent


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=500, help="corpus size")
    ap.add_argument("--seed", type=int, default=0, help="base seed")
    args = ap.parse_args(argv)

    off = SearchConfig(early_contraction=False, doomed_detection=False)
    on = SearchConfig()
    nodes_off = 0
    nodes_on = 0
    reasons: Counter = Counter()
    changed = 0
    for i in range(args.count):
        seq = random_sequent(random.Random(args.seed + i))
        plain = prove(seq, off)
        pruned = prove(seq, on)
        nodes_off += plain.stats.nodes
        nodes_on += pruned.stats.nodes
        reasons.update(pruned.stats.doomed_prunes)
        if [r.matching for r in plain.readings] != [
            r.matching for r in pruned.readings
        ]:
            changed += 1
            print(f"READINGS CHANGED at seed {args.seed + i}")

    saved = nodes_off - nodes_on
    pct = 100.0 * saved / nodes_off if nodes_off else 0.0
    print(f"visited nodes: {nodes_off} -> {nodes_on} ({pct:.1f}% saved)")
    for reason, n in sorted(reasons.items()):
        print(f"doomed[{reason}]: {n} branches cut")
    print(f"reading sets changed: {changed}")
    return 1 if changed else 0


if __name__ == "__main__":
    sys.exit(main())
