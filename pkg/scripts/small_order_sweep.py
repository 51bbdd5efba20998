"""Desk-scale sweep: random connected bipartite graphs are interval colorable.

    python scripts/small_order_sweep.py --count 1000 --max-n 12
"""

import argparse
import random
import time
from collections import Counter

from intervalcolor.families import random_bipartite
from intervalcolor.solver import Budget, decide_interval_colorable


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--budget-ms", type=float, default=60_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    verdicts, slowest = Counter(), (0.0, None)
    t0 = time.time()
    for i in range(args.count):
        seed = args.seed + i
        rng = random.Random(seed)
        n = rng.randint(2, args.max_n)
        p = rng.randint(1, n - 1)
        g = random_bipartite(p, n - p, rng.uniform(0.2, 0.9), seed)
        out = decide_interval_colorable(g, Budget(millis=args.budget_ms))
        verdicts[out.verdict] += 1
        if out.millis > slowest[0]:
            slowest = (out.millis, g.name)
        if out.verdict != "SAT":
            print(f"{g.name}: {out.verdict} (|V|={g.n}, |E|={g.m})")
    print(dict(verdicts), f"in {time.time() - t0:.1f}s; slowest {slowest[0]:.0f} ms on {slowest[1]}")


if __name__ == "__main__":
    main()
