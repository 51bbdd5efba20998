"""Independent brute-force references used by the tests.

Nothing here imports the solver or the criteria; the only shared code is the
Multigraph container and the coloring verifier.
"""

from __future__ import annotations

import itertools
import math

import networkx as nx

from intervalcolor.graph import EdgeColoring, Multigraph, verify_interval_coloring


def brute_force_colorings(g: Multigraph, max_color: int | None = None):
    """Yield every interval coloring with colors in 1..max_color (default |E|).

    Plain DFS over edges in index order, pruning only on properness; the
    interval conditions are checked by the verifier at the leaves.
    """
    top = g.m if max_color is None else max_color
    ends = g.ends
    colors = [0] * g.m
    at_vertex: list[set[int]] = [set() for _ in range(g.n)]

    def rec(e):
        if e == g.m:
            span = max(colors)
            c = EdgeColoring(tuple(colors), span)
            if verify_interval_coloring(g, c).valid:
                yield c
            return
        a, b = ends[e]
        for col in range(1, top + 1):
            if col in at_vertex[a] or col in at_vertex[b]:
                continue
            colors[e] = col
            at_vertex[a].add(col)
            at_vertex[b].add(col)
            yield from rec(e + 1)
            at_vertex[a].discard(col)
            at_vertex[b].discard(col)
        colors[e] = 0

    yield from rec(0)


def brute_force_colorable(g: Multigraph) -> bool:
    return next(brute_force_colorings(g), None) is not None


def brute_force_spans(g: Multigraph) -> set[int]:
    return {c.span for c in brute_force_colorings(g)}


def dijkstra_free_slack(g: Multigraph, forbidden: str, x: str, y: str) -> float:
    """Minimum over all simple x-y paths avoiding ``forbidden`` of sum(d(v) - 1)."""
    if x == y:
        return g.degree(x) - 1
    h = nx.Graph()
    h.add_nodes_from(v for v in g.vertices if v != forbidden)
    h.add_edges_from(e for e in g.edges if forbidden not in e)
    best = math.inf
    for p in nx.all_simple_paths(h, x, y):
        best = min(best, sum(g.degree(v) - 1 for v in p))
    return best


def tree_M_by_paths(g: Multigraph) -> int:
    """max over vertex pairs of (path edges + edges leaving the path), via networkx paths."""
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(g.vertices)
    best = 0
    for x in g.vertices:
        for y in g.vertices:
            p = nx.shortest_path(h, x, y)
            on = set(p)
            leaving = sum(1 for a, b in g.edges if (a in on) != (b in on))
            best = max(best, len(p) - 1 + leaving)
    return best


def to_nx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def degree_multiset(g: Multigraph) -> list[int]:
    return sorted(g.degrees)


def all_pairs(items):
    return itertools.combinations(items, 2)
