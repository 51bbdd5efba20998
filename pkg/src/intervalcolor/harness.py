"""Reproduction table for the known counterexamples and the tree-cover search."""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .criteria import best_certificate, family_checks, pendant_distances_even, tree_metrics
from .families import (complete_bipartite, fano_plane, gen_erdos, gen_fat_triangle_cover, gen_hat,
                       gen_hat_minus_edge, gen_parachute, gen_projective_plane, gen_tree_cover,
                       star_of_stars, tripartite_222)
from .graph import Multigraph, build_multigraph
from .solver import UNSAT, Budget, decide_interval_colorable

log = logging.getLogger(__name__)

# the tree whose cover is listed in the table: a depth-2 spider with 14 leaves
TABLE_TREE = (3, 3, 3, 3, 2)


@dataclass
class ReproRow:
    name: str
    n: int
    delta: int
    criteria: tuple[str, ...]
    verdict: str
    millis: float
    note: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["criteria"] = list(self.criteria)
        d["millis"] = round(self.millis, 1)
        return d


@dataclass(frozen=True)
class ReproCase:
    name: str
    build: Callable[[], Multigraph]
    tag: str = ""
    params: tuple[int, ...] = ()
    note: str = ""
    claimed: bool = True  # a claimed counterexample (verdict must not be SAT)
    base: Callable[[], Multigraph] | None = None  # graph under the hat, for the hat criterion


def reproduce_cases() -> list[ReproCase]:
    k34 = complete_bipartite(3, 4)
    return [
        ReproCase("Delta(5,5,5)", lambda: gen_fat_triangle_cover(5, 5, 5), "fat-triangle", (5, 5, 5)),
        ReproCase("Erd-Fano(2,2,2,2,2,2,1)", lambda: gen_erdos(fano_plane(), (2, 2, 2, 2, 2, 2, 1)),
                  "erdos", (2, 2, 2, 2, 2, 2, 2, 1)),
        ReproCase("Erd-PG(2,3)(1^13)", lambda: gen_erdos(gen_projective_plane(3), (1,) * 13),
                  "erdos", (3,) + (1,) * 13),
        ReproCase("T~(star-of-stars 3,3,3,3,2)", lambda: gen_tree_cover(star_of_stars(TABLE_TREE)),
                  note="reconstruction"),
        ReproCase("K^(3,4)", lambda: gen_hat(k34), "hat", base=lambda: k34),
        ReproCase("K^'(3,4)", lambda: gen_hat_minus_edge(k34, 0)),
        ReproCase("K^(2,2,2)", lambda: gen_hat(tripartite_222()), "hat", base=tripartite_222),
        ReproCase("Par(2,2,2,2,2)", lambda: gen_parachute((2, 2, 2, 2, 2)), "parachute", (2, 2, 2, 2, 2)),
        ReproCase("Par(3,3,3)", lambda: gen_parachute((3, 3, 3)), "parachute", (3, 3, 3),
                  note="reconstruction", claimed=False),
    ]


def fired_criteria(g: Multigraph, tag: str = "", params: tuple[int, ...] = (),
                   base: Multigraph | None = None) -> tuple[str, ...]:
    """Names of the criteria that certify ``g`` has no interval coloring."""
    out = []
    if tag == "hat" and base is not None:
        checks = family_checks(tag, params, base)
    elif tag:
        checks = family_checks(tag, params, g)
    else:
        checks = {}
    out += [name for name, fired in checks.items() if fired]
    cert = best_certificate(g)
    if cert is not None:
        out.append(f"path-slack@{cert.pivot}")
    return tuple(out)


def run_case(case: ReproCase, budget: Budget | None = None) -> ReproRow:
    g = case.build()
    base = case.base() if case.base is not None else None
    crit = fired_criteria(g, case.tag, case.params, base)
    start = time.monotonic()
    out = decide_interval_colorable(g, budget)
    millis = (time.monotonic() - start) * 1000
    log.info("%s: %s in %.0f ms (%d nodes)", case.name, out.verdict, millis, out.nodes)
    return ReproRow(case.name, g.n, g.max_degree, crit, out.verdict, millis, case.note)


def run_reproduce(budget: Budget | None = None) -> list[ReproRow]:
    return [run_case(c, budget) for c in reproduce_cases()]


def format_table(rows: list[ReproRow]) -> str:
    head = f"{'graph':<30} {'|V|':>4} {'Delta':>5}  {'criteria fired':<34} {'verdict':<8} {'ms':>9}  note"
    lines = [head, "-" * len(head)]
    for r in rows:
        crit = ", ".join(r.criteria) or "none"
        lines.append(f"{r.name:<30} {r.n:>4} {r.delta:>5}  {crit:<34} {r.verdict:<8} {r.millis:>9.1f}  {r.note}")
    return "\n".join(lines)


# --- tree search -------------------------------------------------------------

@dataclass
class TreeHit:
    tree: Multigraph
    leaves: int
    M: int
    verdict: str | None = None  # solver verdict on the cover, if solved

    @property
    def gap(self) -> int:
        return self.leaves - (self.M + 2)

    def to_json(self) -> dict:
        return {"n": self.tree.n, "leaves": self.leaves, "M": self.M, "gap": self.gap,
                "verdict": self.verdict, "edges": [list(e) for e in self.tree.edges]}


@dataclass
class TreeSearchConfig:
    max_n: int
    gap: int = 1
    exhaustive_up_to: int = 14  # all non-isomorphic trees; spiders of depth two beyond
    solve: bool = True
    budget: Budget = field(default_factory=lambda: Budget(millis=60_000))


def _partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _candidate_trees(cfg: TreeSearchConfig) -> Iterator[Multigraph]:
    import networkx as nx

    top = min(cfg.max_n, cfg.exhaustive_up_to)
    for n in range(2, top + 1):
        for i, t in enumerate(nx.nonisomorphic_trees(n)):
            names = [f"t{v}" for v in sorted(t.nodes)]
            yield build_multigraph(f"tree{n}_{i}", names, [(f"t{a}", f"t{b}") for a, b in t.edges])
    # spiders of depth two: root, k children, child i carrying c_i >= 1 leaves
    for n in range(top + 1, cfg.max_n + 1):
        for k in range(2, n):
            for parts in _partitions(n - 1 - k):
                if len(parts) == k:
                    yield star_of_stars(parts)


def run_tree_search(cfg: TreeSearchConfig) -> list[TreeHit]:
    """Trees with pendant vertices pairwise at even distance and |F| >= M + 2 + gap."""
    hits = []
    for t in _candidate_trees(cfg):
        if t.n < 3 or not pendant_distances_even(t):
            continue
        # M >= Delta (take the path between two neighbours of a max-degree vertex)
        n_leaves = sum(1 for d in t.degrees if d == 1)
        if n_leaves < t.max_degree + 2 + cfg.gap:
            continue
        met = tree_metrics(t)
        if len(met.leaves) - (met.M + 2) < cfg.gap:
            continue
        hit = TreeHit(t, len(met.leaves), met.M)
        if cfg.solve:
            hit.verdict = decide_interval_colorable(gen_tree_cover(t), cfg.budget).verdict
            if hit.verdict == UNSAT:
                log.info("%s: cover UNSAT as predicted", t.name)
            else:
                log.warning("%s: cover verdict %s", t.name, hit.verdict)
        hits.append(hit)
    return hits
