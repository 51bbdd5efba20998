"""Command-line interface: ``intervalcolor <command> ...``.

Exit codes: 0 completed, 1 a supplied coloring was rejected by ``verify``,
2 invalid input, 3 the budget ran out before a verdict.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter

from . import colorers, criteria, harness
from .families import DERIVED_FAMILIES, TAGS, FamilySpec, gen_random, generate
from .graph import GraphError, Multigraph, graph_from_json, read_coloring, read_graph, verify_interval_coloring
from .solver import SAT, TIMEOUT, Budget, decide_interval_colorable, has_interval_t_coloring, min_span, spectrum

EXIT_OK, EXIT_REJECTED, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3

RANDOM_KINDS = {
    "random-tree": "tree",
    "random-bipartite": "bipartite",
    "random-subcubic": "subcubic-bipartite-multigraph",
    "random-multigraph": "multigraph",
}


def _emit(args, record: dict, text: str) -> None:
    print(json.dumps(record) if args.json else text)


def _budget(args) -> Budget:
    return Budget(millis=args.budget_ms, nodes=args.max_nodes)


def _load(args) -> Multigraph:
    if args.input == "-":
        return graph_from_json(json.load(sys.stdin))
    return read_graph(args.input)


def _fmt_colors(g: Multigraph, colors) -> str:
    return "\n".join(f"  {a}-{b}: {c}" for (a, b), c in zip(g.edges, colors))


# --- commands ------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family in RANDOM_KINDS:
        g = gen_random(RANDOM_KINDS[args.family], *args.params, seed=args.seed)
    else:
        base = read_graph(args.base) if args.base else None
        if args.family in DERIVED_FAMILIES and base is None:
            raise GraphError(f"{args.family} needs --base FILE")
        g = generate(FamilySpec(args.family, tuple(args.params)), base)
    text = json.dumps(g.to_json(), indent=None if args.json else 1)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {g.name}: |V|={g.n} |E|={g.m} Delta={g.max_degree} -> {args.output}", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load(args)
    if args.t is None:
        out = decide_interval_colorable(g, _budget(args), threads=args.threads)
    else:
        out = has_interval_t_coloring(g, args.t, _budget(args), threads=args.threads)
    text = f"{g.name}: {out.verdict}"
    if out.verdict == SAT:
        text += f" (span {out.span})\n" + _fmt_colors(g, out.witness.colors)
    text += f"\nnodes={out.nodes} millis={out.millis:.1f}"
    _emit(args, {"graph": g.name, **out.to_json()}, text)
    return EXIT_TIMEOUT if out.verdict == TIMEOUT else EXIT_OK


def cmd_spectrum(args) -> int:
    g = _load(args)
    res = spectrum(g, args.t_min, args.t_max, _budget(args), threads=args.threads)
    rec = {"graph": g.name, "feasible": res.feasible, "complete": res.complete,
           "verdicts": {str(t): o.to_json() for t, o in res.verdicts.items()}}
    lines = [f"{g.name}: feasible spans {res.feasible}"]
    lines += [f"  t={t}: {o.verdict}" for t, o in res.verdicts.items()]
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK if res.complete else EXIT_TIMEOUT


def cmd_wmin(args) -> int:
    g = _load(args)
    out = min_span(g, _budget(args), threads=args.threads)
    w = out.span if out.verdict == SAT else None
    _emit(args, {"graph": g.name, "w": w, **out.to_json()},
          f"{g.name}: w = {w}" if w is not None else f"{g.name}: {out.verdict}")
    return EXIT_TIMEOUT if out.verdict == TIMEOUT else EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args)
    c = read_coloring(args.coloring)
    verdict = verify_interval_coloring(g, c)
    rec = {"graph": g.name, "valid": verdict.valid,
           "violations": [{"kind": v.kind, "location": v.location} for v in verdict.violations]}
    text = f"{g.name}: {'valid' if verdict.valid else 'INVALID'}"
    text += "".join(f"\n  {v.kind}: {v.location}" for v in verdict.violations)
    _emit(args, rec, text)
    return EXIT_OK if verdict.valid else EXIT_REJECTED


def cmd_criteria(args) -> int:
    g = _load(args)
    if args.pivot:
        certs = [criteria.path_slack_certificate(g, args.pivot)]
    else:
        certs = [criteria.path_slack_certificate(g, v) for v in g.vertices if g.degree(v) >= 2]
    fired = [c for c in certs if c.fired]
    rec = {"graph": g.name, "fired": bool(fired),
           "certificates": [{"pivot": c.pivot, "required": c.required_spread,
                             "best_slack": None if c.best_slack == float("inf") else c.best_slack,
                             "pair": c.pair, "fired": c.fired} for c in certs]}
    lines = [f"{g.name}: path-slack {'FIRED' if fired else 'silent'}"]
    lines += [f"  {c.pivot}: need {c.required_spread}, slack {c.best_slack} via {c.pair}"
              f"{'  <- fired' if c.fired else ''}" for c in certs]
    _emit(args, rec, "\n".join(lines))
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load(args)
    extra: dict = {}
    if args.method == "four-vertex":
        c = colorers.color_four_vertex_multigraph(g)
        target = g
    elif args.method == "subcubic":
        stats: Counter = Counter()
        c = colorers.color_subcubic_multigraph(g, stats, _budget(args))
        extra["stats"] = dict(stats)
        target = g
    elif args.method == "lift":
        if args.coloring:
            alpha = read_coloring(args.coloring)
        else:
            out = decide_interval_colorable(g, _budget(args))
            if out.verdict != SAT:
                raise GraphError(f"{g.name}: no coloring to lift ({out.verdict})")
            alpha = out.witness
        c = colorers.lift_subdivision_coloring(g, alpha)
        target = colorers.gen_subdivision(g)
    else:
        res = colorers.bipartite_proper_edge_coloring(g)
        c = res.coloring
        extra["interval"] = res.interval
        target = g
    rec = {"graph": target.name, "method": args.method, **c.to_json(), **extra}
    text = f"{target.name} ({args.method}): span {c.span}\n" + _fmt_colors(target, c.colors)
    if extra:
        text += "\n" + " ".join(f"{k}={v}" for k, v in extra.items())
    _emit(args, rec, text)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    rows = harness.run_reproduce(_budget(args))
    if args.json:
        print(json.dumps([r.to_json() for r in rows]))
    else:
        print(harness.format_table(rows))
    return EXIT_TIMEOUT if any(r.verdict == TIMEOUT for r in rows) else EXIT_OK


def cmd_tree_search(args) -> int:
    if args.max_n > 24:
        raise GraphError("--max-n is limited to 24")
    cfg = harness.TreeSearchConfig(args.max_n, args.gap, args.exhaustive_up_to, not args.no_solve,
                                   _budget(args))
    hits = harness.run_tree_search(cfg)
    if args.json:
        print(json.dumps([h.to_json() for h in hits]))
    else:
        print(f"{len(hits)} tree(s) with |V| <= {args.max_n} and |F| - (M + 2) >= {args.gap}")
        for h in hits:
            print(f"  |V|={h.tree.n} |F|={h.leaves} M={h.M} cover: {h.verdict or '-'}  {h.tree.name}")
    return EXIT_TIMEOUT if any(h.verdict == TIMEOUT for h in hits) else EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--budget-ms", type=float, default=None, help="wall-clock budget per solve")
    common.add_argument("--max-nodes", type=int, default=None, help="search node cap per solve")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="intervalcolor", description="Interval edge-colorings of multigraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("-i", "--input", required=True, help="graph JSON file ('-' for stdin)")
        return s

    s = sub.add_parser("gen", parents=[common], help="generate a graph family instance")
    s.add_argument("family", choices=[*TAGS, *RANDOM_KINDS])
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--base", help="base graph file for derived families")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = graph_cmd("solve", "decide interval colorability (or a fixed span with --t)")
    s.add_argument("--t", type=int)
    s.set_defaults(func=cmd_solve)

    s = graph_cmd("spectrum", "feasible spans over a range")
    s.add_argument("--t-min", type=int)
    s.add_argument("--t-max", type=int)
    s.set_defaults(func=cmd_spectrum)

    graph_cmd("wmin", "least feasible span").set_defaults(func=cmd_wmin)

    s = graph_cmd("verify", "check a coloring")
    s.add_argument("-c", "--coloring", required=True)
    s.set_defaults(func=cmd_verify)

    s = graph_cmd("criteria", "path-slack certificates")
    s.add_argument("--pivot")
    s.set_defaults(func=cmd_criteria)

    s = graph_cmd("color", "constructive colorers")
    s.add_argument("--method", required=True, choices=["four-vertex", "subcubic", "lift", "konig"])
    s.add_argument("-c", "--coloring", help="input coloring for --method lift")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("reproduce", parents=[common], help="counterexample table")
    s.set_defaults(func=cmd_reproduce)

    s = sub.add_parser("tree-search", parents=[common], help="search trees whose cover is not colorable")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--gap", type=int, default=1)
    s.add_argument("--exhaustive-up-to", type=int, default=14)
    s.add_argument("--no-solve", action="store_true")
    s.set_defaults(func=cmd_tree_search)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
