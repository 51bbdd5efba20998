"""Constructive coloring of random subcubic bipartite multigraphs.

Reports how often each reduction fires, the fallback rate and the span
histogram.

    python scripts/subcubic_sweep.py --count 2000 --max-edges 40
"""

import argparse
import random
from collections import Counter

from intervalcolor.colorers import color_subcubic_multigraph
from intervalcolor.families import random_subcubic_multigraph


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--max-edges", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    stats, spans = Counter(), Counter()
    for i in range(args.count):
        seed = args.seed + i
        g = random_subcubic_multigraph(random.Random(seed).randint(1, args.max_edges), seed)
        spans[color_subcubic_multigraph(g, stats).span] += 1
    steps = sum(stats.values())
    print("reduction steps:", dict(stats))
    print(f"fallback rate: {stats['fallback'] / max(steps, 1):.4f}")
    print("span histogram:", dict(sorted(spans.items())))


if __name__ == "__main__":
    main()
