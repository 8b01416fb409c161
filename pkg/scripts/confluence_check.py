"""Contract random complete proof structures in many random orders.

The verdict and the final vertex partition must come out identical for
every order; for structures that contract to a net the whole final
graph signature must too.
"""

import argparse
import random
import sys

from mill1.contraction import abstract, contract_fully, graph_signature
from mill1.randgen import random_structure


def partition(g):
    groups = {}
    for occ, rep in g.rep.items():
        groups.setdefault(rep, []).append(occ)
    return frozenset(frozenset(v) for v in groups.values())


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200, help="structures to check")
    ap.add_argument("--orders", type=int, default=20, help="orders per structure")
    ap.add_argument("--seed", type=int, default=0, help="generator seed")
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    found = 0
    nets = 0
    violations = 0
    while found < args.count:
        got = random_structure(rng)
        if got is None:
            continue
        found += 1
        ps, subst = got
        verdicts = set()
        partitions = set()
        signatures = set()
        for order in range(args.orders):
            g = abstract(ps, subst)
            contract_fully(g, rng=random.Random(order))
            verdicts.add(g.is_single_net())
            partitions.add(partition(g))
            signatures.add(graph_signature(g))
        ok = len(verdicts) == 1 and len(partitions) == 1
        if verdicts == {True}:
            ok = ok and len(signatures) == 1
            nets += 1
        if not ok:
            violations += 1
            print(f"ORDER DEPENDENCE at structure {found}")
    print(
        f"{found} structures x {args.orders} orders: "
        f"{nets} nets, {violations} order-dependent"
    )
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
