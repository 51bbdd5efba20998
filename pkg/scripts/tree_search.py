"""Search for trees whose hub cover has no interval coloring.

Scans all trees up to --exhaustive-up-to vertices and depth-two spiders
beyond, keeping those with pendant vertices pairwise at even distance and
|F| - (M + 2) >= gap. Each hit's cover is handed to the solver.

    python scripts/tree_search.py --max-n 21 --gap 1
"""

import argparse
import logging
import time

from intervalcolor.harness import TreeSearchConfig, run_tree_search
from intervalcolor.solver import Budget


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=21)
    ap.add_argument("--gap", type=int, default=1)
    ap.add_argument("--exhaustive-up-to", type=int, default=14)
    ap.add_argument("--budget-ms", type=float, default=60_000)
    args = ap.parse_args()
    logging.basicConfig(level=logging.WARNING)

    cfg = TreeSearchConfig(args.max_n, args.gap, args.exhaustive_up_to, True, Budget(millis=args.budget_ms))
    t0 = time.time()
    hits = run_tree_search(cfg)
    print(f"{'|V|':>4} {'|F|':>4} {'M':>3} {'gap':>4}  cover    tree")
    for h in hits:
        print(f"{h.tree.n:>4} {h.leaves:>4} {h.M:>3} {h.gap:>4}  {h.verdict:<7}  {h.tree.name}")
    print(f"{len(hits)} hits in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
