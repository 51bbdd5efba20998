"""Regenerate the counterexample table.

    python scripts/reproduce.py [--budget-ms 600000] [--json out.json]
"""

import argparse
import json
import logging

from intervalcolor.harness import format_table, run_reproduce
from intervalcolor.solver import Budget


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget-ms", type=float, default=600_000)
    ap.add_argument("--json", help="also write rows to this file")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    rows = run_reproduce(Budget(millis=args.budget_ms))
    print(format_table(rows))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in rows], fh, indent=1)


if __name__ == "__main__":
    main()
