"""Necessary conditions for interval colorability.

All checks here are one-sided: a fired criterion certifies that no interval
coloring exists, a silent one says nothing.

The generic certificate: if u has the least color s and u's largest color
s + d(u) - 1 sits on the edge to a neighbour y, while the least color sits
on the edge to x, then walking any x-y path in G - u each vertex can push
the color up by at most d(v) - 1. So the largest color is at most
s + sum_{v in P} (d(v) - 1). If for every choice of x, y the cheapest path
is short of d(u) - 1, no interval coloring exists.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .families import gen_hat, is_tree, leaves
from .graph import GraphError, Multigraph, _slack_from, is_bipartite, is_triangle_free


@dataclass(frozen=True)
class SlackCertificate:
    pivot: str
    required_spread: int
    best_slack: float
    pair: tuple[str, str] | None  # the neighbour pair attaining best_slack

    @property
    def fired(self) -> bool:
        return self.best_slack < self.required_spread


def path_slack_certificate(g: Multigraph, pivot: str) -> SlackCertificate:
    if pivot not in g.index:
        raise GraphError(f"unknown vertex {pivot!r}")
    p = g.index[pivot]
    if g.degrees[p] < 1:
        raise GraphError(f"pivot {pivot!r} is isolated")
    nbrs = g.neighbors[p]
    best, pair = -math.inf, None
    for i, x in enumerate(nbrs):
        dist = _slack_from(g, p, x)
        for y in nbrs[i:]:
            # x == y: both extreme colors on edges to one neighbour
            slack = g.degrees[x] - 1 if x == y else dist[y]
            if slack > best:
                best, pair = slack, (g.vertices[x], g.vertices[y])
    return SlackCertificate(pivot, g.degrees[p] - 1, best, pair)


def best_certificate(g: Multigraph) -> SlackCertificate | None:
    """First fired certificate over all pivots (highest degree first), if any."""
    order = sorted(range(g.n), key=lambda v: -g.degrees[v])
    for v in order:
        if g.degrees[v] >= 2:
            cert = path_slack_certificate(g, g.vertices[v])
            if cert.fired:
                return cert
    return None


def check_fat_triangle(r: int, s: int, t: int) -> bool:
    if not 1 <= r <= s <= t:
        raise GraphError(f"need 1 <= r <= s <= t, got ({r}, {s}, {t})")
    return r >= 5


def _descending(r: Sequence[int]) -> None:
    if not r or any(x < 1 for x in r) or any(a < b for a, b in zip(r, r[1:])):
        raise GraphError(f"multiplicities must be positive and sorted descending, got {list(r)}")


def check_erdos(n: int, r: Sequence[int]) -> bool:
    if len(r) != n * n + n + 1:
        raise GraphError(f"need {n * n + n + 1} multiplicities, got {len(r)}")
    _descending(r)
    return sum(r[n + 1:]) > 2 * (n + 1)


def check_parachute(r: Sequence[int]) -> bool:
    _descending(r)
    return len(r) >= 3 and sum(r[2:]) >= len(r) + 1


def _tree_path(t: Multigraph, a: int, b: int) -> list[int]:
    parent = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        for w in t.neighbors[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path


def tree_L(t: Multigraph, vi: str, vj: str) -> int:
    """Edges of the vi-vj path plus edges with exactly one end on it."""
    if not is_tree(t):
        raise GraphError(f"{t.name} is not a tree")
    for v in (vi, vj):
        if v not in t.index:
            raise GraphError(f"unknown vertex {v!r}")
    p = _tree_path(t, t.index[vi], t.index[vj])
    on = set(p)
    leaving = sum(1 for v in p for w in t.neighbors[v] if w not in on)
    return len(p) - 1 + leaving


@dataclass(frozen=True)
class TreeMetrics:
    leaves: tuple[str, ...]
    M: int
    argmax: tuple[str, str]


def tree_metrics(t: Multigraph) -> TreeMetrics:
    if not is_tree(t) or t.n < 2:
        raise GraphError(f"{t.name} is not a tree with at least two vertices")
    best, arg = -1, None
    for a, b in itertools.combinations_with_replacement(t.vertices, 2):
        val = tree_L(t, a, b)
        if val > best:
            best, arg = val, (a, b)
    return TreeMetrics(tuple(leaves(t)), best, arg)


def pendant_distances_even(t: Multigraph) -> bool:
    _, (u, v) = is_bipartite(t)
    f = set(leaves(t))
    return f <= set(u) or f <= set(v)


def check_tree_cover(t: Multigraph) -> bool:
    if not is_tree(t):
        raise GraphError(f"{t.name} is not a tree")
    if not pendant_distances_even(t):
        raise GraphError("pendant vertices at odd distance")
    met = tree_metrics(t)
    return len(met.leaves) > met.M + 2


def check_hat(g: Multigraph) -> bool:
    """Subdivision-plus-hub test via the slack certificate at the hub of G^."""
    if not g.is_connected():
        raise GraphError(f"{g.name} is disconnected")
    h = gen_hat(g)
    return path_slack_certificate(h, h.vertices[-1]).fired


def kmn_spectrum(m: int, n: int) -> tuple[int, int]:
    if m < 1 or n < 1:
        raise GraphError("m, n >= 1")
    return m + n - math.gcd(m, n), m + n - 1


def span_upper_bound(g: Multigraph) -> int:
    """|V| - 1 for simple triangle-free graphs, |E| otherwise (every color is used)."""
    if g.is_simple() and is_triangle_free(g):
        return g.n - 1
    return g.m


def family_checks(tag: str, params: Sequence[int], g: Multigraph | None = None) -> dict[str, bool]:
    """Family-specific criteria applicable to a generated instance."""
    out = {}
    if tag == "fat-triangle":
        out["fat-triangle"] = check_fat_triangle(*params)
    elif tag == "erdos":
        out["erdos"] = check_erdos(params[0], params[1:])
    elif tag == "parachute":
        out["parachute"] = check_parachute(params)
    elif tag == "tree-cover" and g is not None:
        out["tree-cover"] = check_tree_cover(g)
    elif tag == "hat" and g is not None:
        out["hat"] = check_hat(g)
    return out

