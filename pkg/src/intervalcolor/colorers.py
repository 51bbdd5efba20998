"""Constructive interval colorings for the classes with algorithmic proofs."""

from __future__ import annotations

import logging
from collections import Counter
from typing import NamedTuple, Sequence

from .families import gen_subdivision
from .graph import EdgeColoring, GraphError, Multigraph, build_multigraph, is_bipartite, verify_interval_coloring
from .solver import SAT, Budget, decide_interval_colorable

log = logging.getLogger(__name__)


def _require_bipartite(g: Multigraph) -> tuple[list[str], list[str]]:
    ok, parts = is_bipartite(g)
    if not ok:
        raise GraphError(f"{g.name} is not bipartite")
    return parts


def _checked(g: Multigraph, colors: Sequence[int]) -> EdgeColoring:
    c = EdgeColoring.of(colors)
    verdict = verify_interval_coloring(g, c)
    if not verdict.valid:
        raise AssertionError(f"{g.name}: constructed coloring invalid: {verdict.violations}")
    return c


def color_tree_multigraph(g: Multigraph) -> EdgeColoring:
    """Interval coloring of a connected multigraph whose underlying graph is a tree.

    Vertices are visited parent-first; a vertex's uncolored edges continue
    upward from the largest color on its parent bundle, one contiguous
    block per neighbour.
    """
    if not g.is_connected() or len({frozenset(e) for e in g.ends}) != g.n - 1:
        raise GraphError(f"{g.name}: underlying graph is not a tree")
    colors = [0] * g.m
    stack, seen = [0], {0}
    while stack:
        v = stack.pop()
        top = max((colors[e] for e in g.incidence[v] if colors[e]), default=0)
        fresh = [e for e in g.incidence[v] if not colors[e]]
        fresh.sort(key=lambda e: sum(g.ends[e]) - v)  # group by neighbour
        for e in fresh:
            top += 1
            colors[e] = top
        for w in g.neighbors[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return _checked(g, colors)


def color_four_vertex_multigraph(g: Multigraph) -> EdgeColoring:
    if g.n > 4:
        raise GraphError(f"{g.name} has {g.n} > 4 vertices")
    if not g.is_connected() or g.m == 0:
        raise GraphError(f"{g.name} must be connected with at least one edge")
    _require_bipartite(g)
    support = {frozenset(e) for e in g.edges}
    if len(support) < 4:
        return color_tree_multigraph(g)
    # underlying 4-cycle: walk it from vertex 0
    cyc = [0]
    while len(cyc) < 4:
        nxt = [w for w in g.neighbors[cyc[-1]] if w not in cyc]
        cyc.append(nxt[0])
    names = [g.vertices[i] for i in cyc]
    mult = [g.multiplicity(names[i], names[(i + 1) % 4]) for i in range(4)]
    # rotate so the heaviest bundle closes the cycle (edge u-z)
    k = max(range(4), key=lambda i: mult[i])
    rot = [names[(k + 1 + i) % 4] for i in range(4)]
    u, v, w, z = rot
    a, b, c, d = (g.multiplicity(u, v), g.multiplicity(v, w), g.multiplicity(w, z), g.multiplicity(z, u))
    blocks = {
        frozenset((u, z)): range(1, d + 1),
        frozenset((u, v)): range(d + 1, d + a + 1),
        frozenset((v, w)): range(d - b + 1, d + 1),
        frozenset((w, z)): range(d + 1, d + c + 1),
    }
    colors = [0] * g.m
    taken = Counter()
    for e, pair in enumerate(g.edges):
        key = frozenset(pair)
        colors[e] = blocks[key][taken[key]]
        taken[key] += 1
    out = _checked(g, colors)
    assert out.span == d + max(a, c)
    return out


def _alternate(g: Multigraph) -> EdgeColoring:
    """Delta <= 2 and connected: a path or an even cycle; colors 1, 2 alternate."""
    colors = [0] * g.m
    if g.m == 0:
        return EdgeColoring((), 0)
    ends = [v for v in range(g.n) if g.degrees[v] == 1]
    v = ends[0] if ends else 0
    prev_e = None
    col = 1
    for _ in range(g.m):
        e = next(f for f in g.incidence[v] if f != prev_e and not colors[f])
        colors[e] = col
        col = 3 - col
        a, b = g.ends[e]
        v = b if a == v else a
        prev_e = e
    return _checked(g, colors)


def color_subcubic_multigraph(g: Multigraph, stats: Counter | None = None,
                              budget: Budget | None = None) -> EdgeColoring:
    """Interval coloring with span <= 4 of a bipartite multigraph with Delta <= 3.

    Components are colored independently (each from 1). ``stats`` counts
    ``base`` (simple graphs handed to the exact solver), ``case1``,
    ``case2`` reductions and ``fallback`` (a reduction step that failed to
    verify and was re-solved).
    """
    if g.max_degree > 3:
        raise GraphError(f"{g.name} has Delta {g.max_degree} > 3")
    _require_bipartite(g)
    stats = stats if stats is not None else Counter()
    colors = [0] * g.m
    for comp in g.components():
        if len(comp) < 2:
            continue
        h, edge_map = g.subgraph(comp)
        ch = _subcubic_connected(h, stats, budget)
        for i, e in enumerate(edge_map):
            colors[e] = ch.colors[i]
    out = _checked(g, colors)
    if out.span > 4:
        raise AssertionError(f"{g.name}: span {out.span} > 4")
    return out


def _solve_small_span(h: Multigraph, budget: Budget | None) -> EdgeColoring:
    out = decide_interval_colorable(h, budget, max_span=4)
    if out.verdict != SAT:
        raise GraphError(f"{h.name}: no interval coloring with span <= 4 found ({out.verdict})")
    return out.witness


def _subcubic_connected(h: Multigraph, stats: Counter, budget: Budget | None) -> EdgeColoring:
    if h.max_degree <= 2:
        return _alternate(h)
    if h.is_simple():
        stats["base"] += 1
        return _solve_small_span(h, budget)
    try:
        c = _reduce(h, stats, budget)
        if verify_interval_coloring(h, c).valid and c.span <= 4:
            return c
    except GraphError as exc:
        log.info("%s: reduction failed (%s)", h.name, exc)
    stats["fallback"] += 1
    log.info("%s: falling back to the exact solver", h.name)
    return _solve_small_span(h, budget)


def _reduce(h: Multigraph, stats: Counter, budget: Budget | None) -> EdgeColoring:
    """One reduction step on a doubled edge, then splice the recursive coloring."""
    pair = next(p for p, k in h._mult.items() if k >= 2)
    u, v = sorted(pair, key=lambda x: -h.degree(x))
    doubled = h.edges_between(u, v)
    if len(doubled) == 3:  # triple edge is a whole component
        return _checked(h, [1, 2, 3])
    du, dv = h.degree(u), h.degree(v)
    keep_idx = [i for i in range(h.m) if i not in doubled]
    if du == 3 and dv == 2:
        stats["case1"] += 1
        uw = next(i for i in keep_idx if u in h.edges[i])
        verts = [x for x in h.vertices if x != v]
        sub = build_multigraph(h.name + "-", verts, [h.edges[i] for i in keep_idx])
        sub_c = _subcubic_connected(sub, stats, budget)
        colors = [0] * h.m
        for j, i in enumerate(keep_idx):
            colors[i] = sub_c.colors[j]
        a = colors[uw]
        sign = 1 if a <= 2 else -1
        for k, e in enumerate(doubled, start=1):
            colors[e] = a + sign * k
        return EdgeColoring.of(colors)
    if du == 3 and dv == 3:
        stats["case2"] += 1
        ux = next(i for i in keep_idx if u in h.edges[i])
        vy = next(i for i in keep_idx if v in h.edges[i])
        x = next(p for p in h.edges[ux] if p != u)
        y = next(p for p in h.edges[vy] if p != v)
        rest = [i for i in keep_idx if i not in (ux, vy)]
        verts = [q for q in h.vertices if q not in (u, v)]
        sub = build_multigraph(h.name + "~", verts, [h.edges[i] for i in rest] + [(x, y)])
        if sub.max_degree > 3 or not sub.is_connected():
            raise GraphError("reduced graph left the subcubic connected class")
        sub_c = _subcubic_connected(sub, stats, budget)
        colors = [0] * h.m
        for j, i in enumerate(rest):
            colors[i] = sub_c.colors[j]
        a = sub_c.colors[-1]
        colors[ux] = colors[vy] = a
        sign = 1 if a <= 2 else -1
        for k, e in enumerate(doubled, start=1):
            colors[e] = a + sign * k
        return EdgeColoring.of(colors)
    raise GraphError(f"doubled edge {u}{v} with degrees ({du}, {dv}) outside both cases")


def lift_subdivision_coloring(g: Multigraph, alpha: EdgeColoring,
                              parts: tuple[Sequence[str], Sequence[str]] | None = None) -> EdgeColoring:
    """Interval (t+1)-coloring of S(G) from an interval t-coloring of bipartite G.

    The half of edge e at its U-side endpoint keeps alpha(e); the half at the
    V-side endpoint gets alpha(e) + 1. Edge order follows ``gen_subdivision``.
    """
    if parts is None:
        parts = _require_bipartite(g)
    else:
        _require_bipartite(g)
        if any((a in parts[0]) == (b in parts[0]) for a, b in g.edges):
            raise GraphError("parts is not a bipartition of the graph")
    verdict = verify_interval_coloring(g, alpha)
    if not verdict.valid:
        raise GraphError(f"alpha is not an interval coloring of {g.name}")
    left = set(parts[0])
    s = gen_subdivision(g)
    colors = []
    for (a, _b), col in zip(g.edges, alpha.colors):
        if a in left:
            colors += [col, col + 1]
        else:
            colors += [col + 1, col]
    return _checked(s, colors)


class KonigColoring(NamedTuple):
    coloring: EdgeColoring
    interval: bool


def bipartite_proper_edge_coloring(g: Multigraph) -> KonigColoring:
    """Proper Delta-edge-coloring of a bipartite multigraph by alternating-path recoloring."""
    _require_bipartite(g)
    delta = g.max_degree
    # at[v][c] = edge of color c at v
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]
    colors = [0] * g.m
    for e, (x, y) in enumerate(g.ends):
        a = next(c for c in range(1, delta + 1) if c not in at[x])
        b = next(c for c in range(1, delta + 1) if c not in at[y])
        if a in at[y]:
            # swap a/b along the a-b path starting at y; it cannot reach x
            path = []
            v, col = y, a
            while col in at[v]:
                f = at[v][col]
                path.append(f)
                p, q = g.ends[f]
                v = q if p == v else p
                col = b if col == a else a
            for f in path:
                p, q = g.ends[f]
                del at[p][colors[f]]
                del at[q][colors[f]]
            for f in path:
                p, q = g.ends[f]
                colors[f] = b if colors[f] == a else a
                at[p][colors[f]] = f
                at[q][colors[f]] = f
        colors[e] = a
        at[x][a] = e
        at[y][a] = e
    c = EdgeColoring(tuple(colors), delta)
    return KonigColoring(c, verify_interval_coloring(g, c).valid)
