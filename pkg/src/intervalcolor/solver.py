"""Exact interval edge-colorability search.

Model: every edge gets an integer color, every vertex v a window start s_v;
the colors at v must be exactly the d(v) integers s_v, ..., s_v + d(v) - 1.
Domains are Python ints used as bitsets (bit k = color k allowed).

Translation symmetry is removed by pinning the window of a maximum-degree
vertex (the hub). Because a connected graph's used colors form one interval,
all colors then live in [0, 2U - Delta) where U bounds the span. Reflection
is broken at the hub; parallel edges are ordered by color.

Propagation per vertex:
  * window starts must see every incident edge and have every window value
    covered by some incident edge (erosion of the union of domains);
  * edge domains shrink to the union of the vertex's possible windows;
  * fixed colors are removed from the other edges at the vertex, and a
    value forced into every possible window with a single candidate edge
    is assigned to it;
  * a bipartite matching check rejects windows that cannot be filled.
A global check keeps every color within U - 1 of every other.

The span-free decision first spends a few nodes looking for a span-Delta
coloring; this is cheap and makes witnesses compact when it succeeds.
"""

from __future__ import annotations

import logging
import math
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .criteria import span_upper_bound
from .graph import EdgeColoring, GraphError, Multigraph, normalize_coloring, verify_interval_coloring

log = logging.getLogger(__name__)

SAT, UNSAT, TIMEOUT = "SAT", "UNSAT", "TIMEOUT"


@dataclass
class SolveOutcome:
    verdict: str
    witness: EdgeColoring | None = None
    nodes: int = 0
    millis: float = 0.0

    @property
    def span(self) -> int | None:
        return self.witness.span if self.witness is not None else None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "span": self.span,
            "colors": list(self.witness.colors) if self.witness else None,
            "nodes": self.nodes,
            "millis": round(self.millis, 3),
        }


@dataclass
class SpectrumResult:
    graph: str
    verdicts: dict[int, SolveOutcome] = field(default_factory=dict)

    @property
    def feasible(self) -> list[int]:
        return sorted(t for t, o in self.verdicts.items() if o.verdict == SAT)

    @property
    def min_span(self) -> int | None:
        f = self.feasible
        return f[0] if f else None

    @property
    def complete(self) -> bool:
        return all(o.verdict != TIMEOUT for o in self.verdicts.values())


@dataclass
class Budget:
    millis: float | None = None
    nodes: int | None = None

    def deadline(self) -> float | None:
        return None if self.millis is None else time.monotonic() + self.millis / 1000


class _Timeout(Exception):
    pass


class _Restart(Exception):
    pass


STRATEGIES = ("slack", "edge")
FIRST_RUN = 256
PROBE_NODES = 64


def _mask(lo: int, hi: int) -> int:
    """Bits lo..hi inclusive (empty when hi < lo)."""
    lo = max(lo, 0)
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << lo


def _smear_down(x: int, d: int) -> int:
    # OR of x >> k for k in [0, d)
    r, span = x, 1
    while span < d:
        s = min(span, d - span)
        r |= r >> s
        span += s
    return r


def _smear_up(x: int, d: int) -> int:
    r, span = x, 1
    while span < d:
        s = min(span, d - span)
        r |= r << s
        span += s
    return r


def _erode(x: int, d: int) -> int:
    # AND of x >> k for k in [0, d): starts s with all of s..s+d-1 in x
    r, span = x, 1
    while span < d:
        s = min(span, d - span)
        r &= r >> s
        span += s
    return r


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _high(x: int) -> int:
    return x.bit_length() - 1


class _Search:
    """One search over a connected multigraph with span at most ``limit``.

    ``exact`` demands span exactly ``limit``.
    """

    def __init__(self, g: Multigraph, limit: int, exact: bool = False):
        self.g = g
        self.n, self.m = g.n, g.m
        self.ends = g.ends
        self.inc = g.incidence
        self.deg = g.degrees
        self.limit = limit
        self.exact = exact
        delta = g.max_degree
        self.hub = self.deg.index(delta)
        self.width = 2 * limit - delta
        self.full = (1 << self.width) - 1
        # parallel bundles: consecutive pairs (e, f) with color(e) < color(f)
        bundles: dict[tuple[int, int], list[int]] = {}
        for e, (a, b) in enumerate(self.ends):
            bundles.setdefault((min(a, b), max(a, b)), []).append(e)
        self.order_pairs = [(es[i], es[i + 1]) for es in bundles.values() for i in range(len(es) - 1)]
        self.pairs_of: list[list[tuple[int, int]]] = [[] for _ in range(self.m)]
        for p in self.order_pairs:
            self.pairs_of[p[0]].append(p)
            self.pairs_of[p[1]].append(p)
        # reflection break: rank of the hub neighbour for each hub edge
        nbr_rank = {w: i for i, w in enumerate(g.neighbors[self.hub])}
        self.hub_rank = {}
        for e in self.inc[self.hub]:
            a, b = self.ends[e]
            self.hub_rank[e] = nbr_rank[b if a == self.hub else a]
        self.static_rank = self._static_order()
        self.nodes = 0
        self.deadline: float | None = None
        self.node_cap: int | None = None
        self.run_cap: int | None = None
        self.strategy = "slack"

    def _static_order(self) -> list[int]:
        """BFS layer from the hub, then larger endpoint-degree sum first."""
        layer = [math.inf] * self.n
        layer[self.hub] = 0
        q = deque([self.hub])
        while q:
            v = q.popleft()
            for w in self.g.neighbors[v]:
                if layer[w] == math.inf:
                    layer[w] = layer[v] + 1
                    q.append(w)
        key = []
        for e, (a, b) in enumerate(self.ends):
            key.append((min(layer[a], layer[b]), -(self.deg[a] + self.deg[b]), e))
        rank = [0] * self.m
        for r, (_, _, e) in enumerate(sorted(key)):
            rank[e] = r
        return rank

    # -- initial state -----------------------------------------------------

    def root(self) -> tuple[list[int], list[int]] | None:
        delta = self.deg[self.hub]
        hub_start = self.limit - delta
        win = []
        for v in range(self.n):
            d = self.deg[v]
            win.append(_mask(0, self.width - d) if d else 0)
        win[self.hub] = 1 << hub_start
        dom = [self.full] * self.m
        if self.propagate(dom, win, range(self.n)):
            return dom, win
        return None

    # -- propagation --------------------------------------------------------

    def propagate(self, dom: list[int], win: list[int], seeds) -> bool:
        inc, ends, deg = self.inc, self.ends, self.deg
        queue = deque(seeds)
        queued = [False] * self.n
        for v in queue:
            queued[v] = True
        check_global = True
        while queue:
            while queue:
                v = queue.popleft()
                queued[v] = False
                changed = self._revise(v, dom, win)
                if changed is None:
                    return False
                for e in changed:
                    for x in ends[e]:
                        if not queued[x]:
                            queued[x] = True
                            queue.append(x)
                    for (e1, e2) in self.pairs_of[e]:
                        ch = self._order(e1, e2, dom)
                        if ch is None:
                            return False
                        for f in ch:
                            for x in ends[f]:
                                if not queued[x]:
                                    queued[x] = True
                                    queue.append(x)
                if changed:
                    check_global = True
            if check_global:
                check_global = False
                changed = self._global(dom, win)
                if changed is None:
                    return False
                for v in changed:
                    if not queued[v]:
                        queued[v] = True
                        queue.append(v)
        return True

    def _order(self, e1: int, e2: int, dom: list[int]):
        a, b = dom[e1], dom[e2]
        if not a or not b:
            return None
        na = a & ((1 << _high(b)) - 1)  # below max of b
        nb = b & ~((1 << (_low(a) + 1)) - 1)  # above min of a
        if not na or not nb:
            return None
        out = []
        if na != a:
            dom[e1] = na
            out.append(e1)
        if nb != b:
            dom[e2] = nb
            out.append(e2)
        return out

    def _revise(self, v: int, dom: list[int], win: list[int]):
        d = self.deg[v]
        if d == 0:
            return []
        es = self.inc[v]
        changed: list[int] = []
        while True:
            w = win[v]
            union = 0
            allowed = w
            for e in es:
                x = dom[e]
                union |= x
                allowed &= _smear_down(x, d)
            allowed &= _erode(union, d)
            if not allowed:
                return None
            if allowed != w:
                win[v] = allowed
            cover = _smear_up(allowed, d)
            # values present in every possible window
            core = _mask(_high(allowed), _low(allowed) + d - 1)
            again = False
            fixed = 0
            for e in es:
                x = dom[e]
                nx = x & cover
                if nx != x:
                    if not nx:
                        return None
                    dom[e] = nx
                    changed.append(e)
                    x = nx
                if not x & (x - 1):
                    if fixed & x:
                        return None
                    fixed |= x
            if fixed:
                for e in es:
                    x = dom[e]
                    if x & (x - 1) and x & fixed:
                        nx = x & ~fixed
                        if not nx:
                            return None
                        dom[e] = nx
                        changed.append(e)
                        again = True
            # hidden singles on values every window must contain
            free = core & ~fixed
            while free:
                bit = free & -free
                free ^= bit
                cand = -1
                count = 0
                for e in es:
                    if dom[e] & bit:
                        count += 1
                        cand = e
                        if count > 1:
                            break
                if count == 0:
                    return None
                if count == 1:
                    dom[cand] = bit
                    changed.append(cand)
                    again = True
            if again:
                continue
            if not self._matchable(v, dom, win):
                return None
            if v == self.hub:
                r = self._reflect(dom)
                if r is None:
                    return None
                if r:
                    changed.extend(r)
                    continue
            return changed

    def _matchable(self, v: int, dom: list[int], win: list[int]) -> bool:
        """Drop window starts whose values cannot be matched to the incident edges."""
        d = self.deg[v]
        es = [e for e in self.inc[v] if dom[e] & (dom[e] - 1)]
        if len(es) <= 1:
            return True
        w = win[v]
        keep = 0
        starts = w
        while starts:
            bit = starts & -starts
            starts ^= bit
            s = bit.bit_length() - 1
            window = ((1 << d) - 1) << s
            if _perfect(es, dom, window):
                keep |= bit
        if not keep:
            return False
        win[v] = keep
        return True

    def _reflect(self, dom: list[int]):
        """Hub edge holding the least color goes to a neighbour no later than the one holding the largest."""
        hub = self.hub
        d = self.deg[hub]
        lo_bit = 1 << (self.limit - d)
        hi_bit = 1 << (self.limit - 1)
        es = self.inc[hub]
        lo_r = [self.hub_rank[e] for e in es if dom[e] & lo_bit]
        hi_r = [self.hub_rank[e] for e in es if dom[e] & hi_bit]
        if not lo_r or not hi_r:
            return None
        lo_min, hi_max = min(lo_r), max(hi_r)
        out = []
        for e in es:
            x = dom[e]
            nx = x
            r = self.hub_rank[e]
            if r < lo_min:
                nx &= ~hi_bit
            if r > hi_max:
                nx &= ~lo_bit
            if nx != x:
                if not nx:
                    return None
                dom[e] = nx
                out.append(e)
        return out

    def _global(self, dom: list[int], win: list[int]):
        """Every color within limit - 1 of every other (and, if exact, some pair at distance limit - 1)."""
        lo_max = -1
        hi_min = self.width
        for x in dom:
            l, h = _low(x), _high(x)
            if l > lo_max:
                lo_max = l
            if h < hi_min:
                hi_min = h
        span = self.limit
        allowed = _mask(lo_max - span + 1, hi_min + span - 1)
        if self.exact:
            glo = min(_low(x) for x in dom)
            ghi = max(_high(x) for x in dom)
            if ghi - glo + 1 < span:
                return None
        changed_v = []
        for e, x in enumerate(dom):
            nx = x & allowed
            if nx != x:
                if not nx:
                    return None
                dom[e] = nx
                changed_v.extend(self.ends[e])
        return changed_v

    # -- search ------------------------------------------------------------

    def choose(self, dom: list[int], win: list[int]):
        """Next branching, or None when every edge is fixed.

        ``slack``: the hub's least and largest colors first, then the
        smaller of (edge domain, candidates for a window-extreme value),
        values winning ties. ``edge``: smallest edge domain, BFS order on ties.
        """
        best = None
        best_size = math.inf
        rank = self.static_rank
        for e, x in enumerate(dom):
            if x & (x - 1):
                c = x.bit_count()
                if c < best_size or (c == best_size and rank[e] < rank[best[1]]):
                    best_size = c
                    best = ("edge", e)
        if best is None or self.strategy == "edge":
            return best
        hub_es = self.inc[self.hub]
        for bit in (1 << (self.limit - self.deg[self.hub]), 1 << (self.limit - 1)):
            cands = [e for e in hub_es if dom[e] & bit]
            if len(cands) > 1:
                return ("value", bit, cands)
        for v in range(self.n):
            d = self.deg[v]
            w = win[v]
            core = _mask(_high(w), _low(w) + d - 1)
            if not core:
                continue
            es = self.inc[v]
            free = core
            for e in es:
                x = dom[e]
                if not x & (x - 1):
                    free &= ~x
            if not free:
                continue
            lo, hi = free & -free, 1 << _high(free)
            for bit in (lo, hi):
                cands = [e for e in es if dom[e] & bit]
                if len(cands) <= best_size and (len(cands) < best_size or best[0] == "edge"):
                    best_size = len(cands)
                    best = ("value", bit, cands)
        return best

    def alternatives(self, dom: list[int], branch) -> list[tuple[int, int]]:
        if branch[0] == "edge":
            e = branch[1]
            x = dom[e]
            out = []
            while x:
                bit = x & -x
                x ^= bit
                out.append((e, bit))
            return out
        _, bit, cands = branch
        return [(e, bit) for e in cands]

    def dfs(self, dom: list[int], win: list[int]) -> list[int] | None:
        self.nodes += 1
        if self.nodes & 255 == 0:
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise _Timeout
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise _Timeout
        if self.run_cap is not None and self.nodes > self.run_cap:
            raise _Restart
        branch = self.choose(dom, win)
        if branch is None:
            return self.leaf(dom)
        for e, bit in self.alternatives(dom, branch):
            d2 = dom[:]
            w2 = win[:]
            d2[e] = bit
            if self.propagate(d2, w2, self.ends[e]):
                res = self.dfs(d2, w2)
                if res is not None:
                    return res
        return None

    def leaf(self, dom: list[int]) -> list[int] | None:
        colors = [_low(x) for x in dom]
        lo, hi = min(colors), max(colors)
        if hi - lo + 1 > self.limit or (self.exact and hi - lo + 1 != self.limit):
            return None
        return [c - lo + 1 for c in colors]


def _perfect(es: list[int], dom: list[int], window: int) -> bool:
    """Can the (unfixed) edges take distinct values inside ``window``?

    Greedy lowest-free assignment, then augmenting paths for the leftovers.
    """
    doms = []
    for e in es:
        x = dom[e] & window
        if not x:
            return False
        doms.append(x)
    used = 0
    owner: dict[int, int] = {}
    pending = []
    for i, x in enumerate(doms):
        free = x & ~used
        if free:
            b = free & -free
            used |= b
            owner[b] = i
        else:
            pending.append(i)
    if not pending:
        return True
    seen = 0

    def augment(i: int) -> bool:
        nonlocal seen, used
        x = doms[i] & ~seen
        free = x & ~used
        if free:
            b = free & -free
            used |= b
            owner[b] = i
            return True
        seen |= x
        while x:
            b = x & -x
            x ^= b
            if augment(owner[b]):
                owner[b] = i
                return True
        return False

    for i in pending:
        seen = 0
        if not augment(i):
            return False
    return True


def _check_connected(g: Multigraph) -> None:
    if g.m == 0:
        raise GraphError("graph has no edges")
    if not g.is_connected():
        raise GraphError(f"{g.name} is disconnected; solve components separately")


def _finish(g: Multigraph, colors: list[int] | None, search: _Search, start: float, verdict=None) -> SolveOutcome:
    millis = (time.monotonic() - start) * 1000
    if verdict == TIMEOUT:
        return SolveOutcome(TIMEOUT, None, search.nodes, millis)
    if colors is None:
        return SolveOutcome(UNSAT, None, search.nodes, millis)
    witness = normalize_coloring(g, colors)
    verdict_check = verify_interval_coloring(g, witness)
    if not verdict_check.valid:  # pragma: no cover - would be a solver bug
        raise AssertionError(f"solver produced an invalid coloring: {verdict_check.violations}")
    return SolveOutcome(SAT, witness, search.nodes, millis)


def _portfolio(search: _Search, dom: list[int], win: list[int]) -> list[int] | None:
    """Alternate the strategies with doubling node limits until one run completes.

    Each run is a complete search, so whichever finishes first decides.
    """
    quota = FIRST_RUN
    while True:
        for strategy in STRATEGIES:
            search.strategy = strategy
            search.run_cap = search.nodes + quota
            try:
                return search.dfs(dom[:], win[:])
            except _Restart:
                continue
            finally:
                search.run_cap = None
        quota *= 2
        log.debug("%s: restart quota %d after %d nodes", search.g.name, quota, search.nodes)


def _solve_sub(args) -> tuple[str, list[int] | None, int]:
    g, limit, exact, dom, win, millis, node_cap = args
    s = _Search(g, limit, exact)
    s.deadline = None if millis is None else time.monotonic() + millis / 1000
    s.node_cap = node_cap
    try:
        res = _portfolio(s, dom, win)
    except _Timeout:
        return TIMEOUT, None, s.nodes
    return (SAT if res is not None else UNSAT), res, s.nodes


def _run(g: Multigraph, limit: int, exact: bool, budget: Budget | None, threads: int) -> SolveOutcome:
    budget = budget or Budget()
    start = time.monotonic()
    search = _Search(g, limit, exact)
    search.deadline = budget.deadline()
    search.node_cap = budget.nodes
    state = search.root()
    if state is None:
        return _finish(g, None, search, start)
    dom, win = state
    if threads <= 1:
        try:
            colors = _portfolio(search, dom, win)
        except _Timeout:
            return _finish(g, None, search, start, TIMEOUT)
        return _finish(g, colors, search, start)
    # split on the hub's least color among worker processes; reduce in branch order
    branch = search.choose(dom, win)
    if branch is None:
        return _finish(g, search.leaf(dom), search, start)
    jobs = []
    for e, bit in search.alternatives(dom, branch):
        d2, w2 = dom[:], win[:]
        d2[e] = bit
        if search.propagate(d2, w2, search.ends[e]):
            jobs.append((g, limit, exact, d2, w2, budget.millis, budget.nodes))
    search.nodes += 1
    timed_out = False
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for verdict, colors, nodes in pool.map(_solve_sub, jobs):
            search.nodes += nodes
            if verdict == SAT:
                pool.shutdown(wait=False, cancel_futures=True)
                return _finish(g, colors, search, start)
            timed_out |= verdict == TIMEOUT
    return _finish(g, None, search, start, TIMEOUT if timed_out else None)


def decide_interval_colorable(g: Multigraph, budget: Budget | None = None, *, max_span: int | None = None,
                              threads: int = 1) -> SolveOutcome:
    """Is ``g`` interval colorable? (Optionally: with span at most ``max_span``.)

    The search is span-free: UNSAT means no proper coloring with interval
    color sets exists within the span bound, which by normalization means
    no interval t-coloring for any t.
    """
    _check_connected(g)
    limit = span_upper_bound(g)
    if max_span is not None:
        limit = min(limit, max_span)
    if limit < g.max_degree:
        return SolveOutcome(UNSAT)
    # a short probe at span Delta first: cheap, and gives compact witnesses when it succeeds
    budget = budget or Budget()
    probe_nodes = 0
    if limit > g.max_degree:
        cap = PROBE_NODES if budget.nodes is None else min(PROBE_NODES, budget.nodes)
        probe = _run(g, g.max_degree, False, Budget(budget.millis, cap), 1)
        if probe.verdict == SAT:
            return probe
        probe_nodes = probe.nodes
        budget = Budget(None if budget.millis is None else max(0.0, budget.millis - probe.millis),
                        None if budget.nodes is None else max(0, budget.nodes - probe_nodes))
    out = _run(g, limit, False, budget, threads)
    out.nodes += probe_nodes
    return out


def has_interval_t_coloring(g: Multigraph, t: int, budget: Budget | None = None, *, threads: int = 1) -> SolveOutcome:
    _check_connected(g)
    if t < g.max_degree or t > g.m:
        return SolveOutcome(UNSAT)
    return _run(g, t, True, budget, threads)


def min_span(g: Multigraph, budget: Budget | None = None, *, threads: int = 1) -> SolveOutcome:
    """w(G): scan t upward from Delta; the outcome's witness has span w(G)."""
    _check_connected(g)
    budget = budget or Budget()
    start = time.monotonic()
    nodes = 0
    first = decide_interval_colorable(g, budget, threads=threads)
    nodes += first.nodes
    if first.verdict != SAT:
        first.millis = (time.monotonic() - start) * 1000
        return first
    for t in range(g.max_degree, first.span + 1):
        left = None if budget.millis is None else budget.millis - (time.monotonic() - start) * 1000
        if left is not None and left <= 0:
            return SolveOutcome(TIMEOUT, None, nodes, (time.monotonic() - start) * 1000)
        out = first if t == first.span else has_interval_t_coloring(g, t, Budget(left, budget.nodes), threads=threads)
        nodes += out.nodes if out is not first else 0
        if out.verdict == TIMEOUT:
            return SolveOutcome(TIMEOUT, None, nodes, (time.monotonic() - start) * 1000)
        if out.verdict == SAT:
            return SolveOutcome(SAT, out.witness, nodes, (time.monotonic() - start) * 1000)
    raise AssertionError("unreachable: the span-free witness bounds w(G)")  # pragma: no cover


def spectrum(g: Multigraph, t_min: int | None = None, t_max: int | None = None,
             budget: Budget | None = None, *, threads: int = 1) -> SpectrumResult:
    """Per-t verdicts over [t_min, t_max] (defaults: [Delta, span_upper_bound])."""
    _check_connected(g)
    lo = g.max_degree if t_min is None else t_min
    hi = span_upper_bound(g) if t_max is None else t_max
    res = SpectrumResult(g.name)
    for t in range(lo, hi + 1):
        res.verdicts[t] = has_interval_t_coloring(g, t, budget, threads=threads)
    return res
