"""Multigraph container, interval-coloring verification and slack paths.

Vertices are opaque string labels; every algorithm works on dense integer
indices (position in ``Multigraph.vertices``). Edges are identified by their
position in ``Multigraph.edges`` so parallel edges stay distinguishable.
"""

from __future__ import annotations

import heapq
import json
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs, colorings or arguments."""


@dataclass(frozen=True)
class Multigraph:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def ends(self) -> tuple[tuple[int, int], ...]:
        idx = self.index
        return tuple((idx[a], idx[b]) for a, b in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in self.vertices]
        for e, (a, b) in enumerate(self.ends):
            inc[a].append(e)
            inc[b].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Distinct neighbours of each vertex, in first-seen edge order."""
        out = []
        for v, inc in enumerate(self.incidence):
            seen: dict[int, None] = {}
            for e in inc:
                a, b = self.ends[e]
                seen[b if a == v else a] = None
            out.append(tuple(seen))
        return tuple(out)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: str) -> int:
        return len(self.incidence[self.index[v]])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(inc) for inc in self.incidence)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def multiplicity(self, u: str, v: str) -> int:
        return self._mult.get(frozenset((u, v)), 0) if u != v else 0

    @cached_property
    def _mult(self) -> Counter:
        return Counter(frozenset(e) for e in self.edges)

    @property
    def max_multiplicity(self) -> int:
        return max(self._mult.values(), default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity <= 1

    def edges_between(self, u: str, v: str) -> list[int]:
        """E(uv) as edge indices."""
        key = {u, v}
        return [i for i, e in enumerate(self.edges) if set(e) == key]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_reach(self, 0)) == self.n

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(self.n):
            if v not in seen:
                comp = sorted(_reach(self, v))
                seen.update(comp)
                comps.append(comp)
        return comps

    def subgraph(self, vertex_ids: Iterable[int], name: str | None = None) -> tuple["Multigraph", list[int]]:
        """Induced subgraph on the given vertex indices.

        Returns the subgraph and the list mapping its edge indices back to
        edge indices of ``self``.
        """
        keep = set(vertex_ids)
        verts = [self.vertices[i] for i in range(self.n) if i in keep]
        edge_map = [e for e, (a, b) in enumerate(self.ends) if a in keep and b in keep]
        edges = [self.edges[e] for e in edge_map]
        return build_multigraph(name or self.name, verts, edges), edge_map

    def to_json(self) -> dict:
        return {"name": self.name, "vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def _reach(g: Multigraph, start: int, forbidden: int | None = None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if w != forbidden and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def build_multigraph(name: str, vertices: Sequence, edges: Iterable[Sequence]) -> Multigraph:
    verts = tuple(str(v) for v in vertices)
    if len(set(verts)) != len(verts):
        raise GraphError(f"{name}: duplicate vertex labels")
    known = set(verts)
    out = []
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"{name}: edge {pair!r} is not a pair")
        a, b = str(pair[0]), str(pair[1])
        if a == b:
            raise GraphError(f"{name}: loop at {a}")
        if a not in known or b not in known:
            raise GraphError(f"{name}: edge ({a}, {b}) has an unknown endpoint")
        out.append((a, b))
    return Multigraph(name, verts, tuple(out))


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    span: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    @classmethod
    def of(cls, colors: Sequence[int], span: int | None = None) -> "EdgeColoring":
        colors = tuple(colors)
        return cls(colors, max(colors, default=0) if span is None else span)

    def at(self, g: Multigraph, v: str) -> list[int]:
        """Colors on the edges incident to ``v`` (the multiset behind S(v, alpha))."""
        return [self.colors[e] for e in g.incidence[g.index[v]]]

    def to_json(self) -> dict:
        return {"span": self.span, "colors": list(self.colors)}

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class Violation:
    kind: str  # not-proper | not-interval | color-unused | color-out-of-range
    location: object


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def verify_interval_coloring(g: Multigraph, c: EdgeColoring) -> Verdict:
    """Check that ``c`` is an interval ``c.span``-coloring of ``g``."""
    if len(c.colors) != g.m:
        raise GraphError(f"coloring has {len(c.colors)} colors for {g.m} edges")
    bad: list[Violation] = []
    for e, col in enumerate(c.colors):
        if not 1 <= col <= c.span:
            bad.append(Violation("color-out-of-range", e))
    for v, inc in enumerate(g.incidence):
        cols = [c.colors[e] for e in inc]
        if len(set(cols)) != len(cols):
            bad.append(Violation("not-proper", g.vertices[v]))
        elif cols and max(cols) - min(cols) + 1 != len(cols):
            bad.append(Violation("not-interval", g.vertices[v]))
    used = set(c.colors)
    for col in range(1, c.span + 1):
        if col not in used:
            bad.append(Violation("color-unused", col))
    return Verdict(tuple(bad))


def is_locally_interval(g: Multigraph, colors: Sequence[int]) -> bool:
    """Proper, positive, and every S(v, alpha) is an interval (no global conditions)."""
    if len(colors) != g.m or any(c < 1 for c in colors):
        return False
    for inc in g.incidence:
        cols = {colors[e] for e in inc}
        if len(cols) != len(inc):
            return False
        if cols and max(cols) - min(cols) + 1 != len(cols):
            return False
    return True


def normalize_coloring(g: Multigraph, colors: Sequence[int] | EdgeColoring) -> EdgeColoring:
    """Compress a proper locally-interval coloring into an interval t-coloring.

    A globally unused color lies inside no vertex's interval, so deleting it
    (shifting every larger color down by one) keeps properness and every
    S(v, alpha) consecutive. Doing this for every gap and translating the
    minimum to 1 yields a coloring with all colors 1..t used, t = number of
    distinct colors. The relative order of colors is unchanged.
    """
    if isinstance(colors, EdgeColoring):
        colors = colors.colors
    colors = list(colors)
    if not is_locally_interval(g, colors):
        raise GraphError("coloring is not proper with interval color sets")
    rank = {col: i + 1 for i, col in enumerate(sorted(set(colors)))}
    return EdgeColoring(tuple(rank[col] for col in colors), len(rank))


def is_bipartite(g: Multigraph) -> tuple[bool, tuple[list[str], list[str]] | None]:
    """2-color the underlying graph; returns (ok, (U, V)) with U holding the first vertex of each component."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False, None
    parts = ([g.vertices[v] for v in range(g.n) if side[v] == 0],
             [g.vertices[v] for v in range(g.n) if side[v] == 1])
    return True, parts


def is_triangle_free(g: Multigraph) -> bool:
    nbr = [set(x) for x in g.neighbors]
    for a, b in g.ends:
        if nbr[a] & nbr[b]:
            return False
    return True


def min_slack_path(g: Multigraph, forbidden: str, x: str, y: str) -> float:
    """Least sum of (d_G(v) - 1) over the vertices of an x-y path avoiding ``forbidden``.

    Degrees come from the full graph. Returns ``math.inf`` when y is
    unreachable from x in G - forbidden.
    """
    for v in (forbidden, x, y):
        if v not in g.index:
            raise GraphError(f"unknown vertex {v!r}")
    f, s, t = g.index[forbidden], g.index[x], g.index[y]
    if s == f or t == f:
        raise GraphError("path endpoints must differ from the forbidden vertex")
    return _slack_from(g, f, s)[t]


def _slack_from(g: Multigraph, forbidden: int, source: int) -> list[float]:
    """Dijkstra with vertex weights d(v) - 1; both endpoints are charged."""
    w = [d - 1 for d in g.degrees]
    dist = [math.inf] * g.n
    dist[source] = w[source]
    heap = [(w[source], source)]
    while heap:
        d, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for u in g.neighbors[v]:
            if u == forbidden:
                continue
            nd = d + w[u]
            if nd < dist[u]:
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


# JSON I/O -----------------------------------------------------------------

def graph_from_json(data: dict) -> Multigraph:
    try:
        return build_multigraph(data.get("name", "G"), data["vertices"], data["edges"])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"bad graph JSON: {exc}") from exc


def coloring_from_json(data: dict) -> EdgeColoring:
    try:
        return EdgeColoring(tuple(int(c) for c in data["colors"]), int(data["span"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad coloring JSON: {exc}") from exc


def read_graph(path: str | Path) -> Multigraph:
    return graph_from_json(json.loads(Path(path).read_text()))


def write_graph(g: Multigraph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(g.to_json(), indent=1) + "\n")


def read_coloring(path: str | Path) -> EdgeColoring:
    return coloring_from_json(json.loads(Path(path).read_text()))
