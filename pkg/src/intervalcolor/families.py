"""Generators for the counterexample families and the standard test graphs."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .graph import GraphError, Multigraph, build_multigraph, is_bipartite


@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    points: tuple[int, ...]
    lines: tuple[frozenset[int], ...]

    def lines_through(self, p: int) -> list[int]:
        return [i for i, line in enumerate(self.lines) if p in line]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def _projective_points(n: int) -> list[tuple[int, int, int]]:
    # canonical representative: first nonzero coordinate equal to 1
    pts = []
    for v in itertools.product(range(n), repeat=3):
        nz = next((c for c in v if c), 0)
        if nz == 1:
            pts.append(v)
    return pts


def gen_projective_plane(n: int) -> ProjectivePlane:
    """PG(2, n) over the integers mod a prime n.

    Points and lines are both the projective points of (Z_n)^3; a point lies
    on a line when their representatives are orthogonal mod n.
    """
    if not _is_prime(n):
        raise GraphError(f"projective plane of order {n} unsupported (prime orders only)")
    reps = _projective_points(n)
    lines = []
    for a in reps:
        lines.append(frozenset(i + 1 for i, p in enumerate(reps)
                               if sum(x * y for x, y in zip(a, p)) % n == 0))
    return ProjectivePlane(n, tuple(range(1, len(reps) + 1)), tuple(lines))


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano_plane() -> ProjectivePlane:
    """The hard-coded Fano incidence list."""
    return ProjectivePlane(2, tuple(range(1, 8)), tuple(frozenset(l) for l in FANO_LINES))


def _check_descending(r: Sequence[int], what: str) -> None:
    if not r or any(x < 1 for x in r) or any(a < b for a, b in zip(r, r[1:])):
        raise GraphError(f"{what}: multiplicities must be positive and sorted descending, got {list(r)}")


def gen_fat_triangle_cover(r: int, s: int, t: int) -> Multigraph:
    if not 1 <= r <= s <= t:
        raise GraphError(f"need 1 <= r <= s <= t, got ({r}, {s}, {t})")
    a = [f"a{i}" for i in range(1, r + 1)]
    b = [f"b{i}" for i in range(1, s + 1)]
    c = [f"c{i}" for i in range(1, t + 1)]
    edges = []
    for ai in a:
        edges += [("v", ai), ("x", ai), ("y", ai)]
    for bj in b:
        edges += [("v", bj), ("x", bj), ("z", bj)]
    for ck in c:
        edges += [("v", ck), ("y", ck), ("z", ck)]
    return build_multigraph(f"Delta_{r},{s},{t}", ["v", "x", "y", "z", *a, *b, *c], edges)


def gen_erdos(plane: ProjectivePlane, r: Sequence[int]) -> Multigraph:
    """Erd(r_1, ..., r_N): r_i copies of line i, each copy joined to the hub and to the line's points.

    Multiplicity r_i goes to ``plane.lines[i]``.
    """
    n = plane.order
    size = n * n + n + 1
    if len(r) != size:
        raise GraphError(f"need {size} multiplicities for a plane of order {n}, got {len(r)}")
    _check_descending(r, "Erd")
    points = [f"p{k}" for k in plane.points]
    verts = ["u", *points]
    edges = []
    for i, (line, ri) in enumerate(zip(plane.lines, r), start=1):
        for j in range(1, ri + 1):
            copy = f"l{i}_{j}"
            verts.append(copy)
            edges.append(("u", copy))
            edges += [(copy, f"p{k}") for k in sorted(line)]
    return build_multigraph(f"Erd({','.join(map(str, r))})", verts, edges)


def _fresh(base: str, taken: set[str]) -> str:
    name, k = base, 0
    while name in taken:
        k += 1
        name = f"{base}{k}"
    return name


def is_tree(g: Multigraph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def leaves(g: Multigraph) -> list[str]:
    return [v for v, d in zip(g.vertices, g.degrees) if d == 1]


def gen_tree_cover(tree: Multigraph) -> Multigraph:
    """T~: the tree plus a new vertex joined to every pendant vertex."""
    if not is_tree(tree):
        raise GraphError(f"{tree.name} is not a tree")
    ok, parts = is_bipartite(tree)
    pendant = leaves(tree)
    if any(p in parts[0] for p in pendant) and any(p in parts[1] for p in pendant):
        raise GraphError("pendant vertices at odd distance; the cover would not be bipartite")
    hub = _fresh("u", set(tree.vertices))
    return build_multigraph(f"cover({tree.name})", [*tree.vertices, hub],
                            [*tree.edges, *((hub, p) for p in pendant)])


def _subdivision_parts(g: Multigraph) -> tuple[list[str], list[tuple[str, str]], list[str]]:
    taken = set(g.vertices)
    mids = []
    for k in range(g.m):
        w = _fresh(f"w{k}", taken)
        taken.add(w)
        mids.append(w)
    edges = []
    for (a, b), w in zip(g.edges, mids):
        edges += [(a, w), (b, w)]
    return [*g.vertices, *mids], edges, mids


def gen_subdivision(g: Multigraph) -> Multigraph:
    """S(G). Edge k of G becomes edges 2k (first endpoint, w_k) and 2k+1 (second endpoint, w_k)."""
    verts, edges, _ = _subdivision_parts(g)
    return build_multigraph(f"S({g.name})", verts, edges)


def gen_hat(g: Multigraph) -> Multigraph:
    """G^: S(G) plus a hub adjacent to every subdivision vertex (hub edges come last)."""
    verts, edges, mids = _subdivision_parts(g)
    hub = _fresh("u", set(verts))
    return build_multigraph(f"hat({g.name})", [*verts, hub], [*edges, *((hub, w) for w in mids)])


def gen_hat_minus_edge(g: Multigraph, edge: int) -> Multigraph:
    if not 0 <= edge < g.m:
        raise GraphError(f"edge index {edge} out of range for {g.m} edges")
    h = gen_hat(g)
    drop = 2 * g.m + edge
    return build_multigraph(f"hat'({g.name},{edge})", h.vertices,
                            [e for i, e in enumerate(h.edges) if i != drop])


def gen_parachute(r: Sequence[int]) -> Multigraph:
    _check_descending(r, "Par")
    vs = [f"v{i}" for i in range(1, len(r) + 1)]
    edges = [("u", v) for v, ri in zip(vs, r) for _ in range(ri)]
    edges += [(v, "w") for v in vs]
    return build_multigraph(f"Par({','.join(map(str, r))})", ["u", "w", *vs], edges)


def star_of_stars(children: Sequence[int]) -> Multigraph:
    """Root joined to len(children) vertices, child i carrying children[i] pendant vertices."""
    verts, edges = ["r"], []
    for i, k in enumerate(children, start=1):
        verts.append(f"c{i}")
        edges.append(("r", f"c{i}"))
        for j in range(1, k + 1):
            verts.append(f"c{i}_{j}")
            edges.append((f"c{i}", f"c{i}_{j}"))
    return build_multigraph(f"stars({','.join(map(str, children))})", verts, edges)


# standard graphs ----------------------------------------------------------

def complete_bipartite(m: int, n: int) -> Multigraph:
    if m < 1 or n < 1:
        raise GraphError("K_{m,n} needs m, n >= 1")
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{j}" for j in range(1, n + 1)]
    return build_multigraph(f"K_{m},{n}", a + b, [(x, y) for x in a for y in b])


def complete(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    vs = [f"v{i}" for i in range(1, n + 1)]
    return build_multigraph(f"K_{n}", vs, list(itertools.combinations(vs, 2)))


def hypercube(k: int) -> Multigraph:
    if k < 1:
        raise GraphError("Q_k needs k >= 1")
    vs = [format(i, f"0{k}b") for i in range(2 ** k)]
    edges = [(vs[i], vs[i ^ (1 << b)]) for i in range(2 ** k) for b in reversed(range(k)) if i < i ^ (1 << b)]
    return build_multigraph(f"Q_{k}", vs, edges)


def tripartite_222() -> Multigraph:
    vs = [f"v{i}" for i in range(1, 7)]
    skip = {(1, 2), (3, 4), (5, 6)}
    edges = [(f"v{i}", f"v{j}") for i in range(1, 7) for j in range(i + 1, 7) if (i, j) not in skip]
    return build_multigraph("K_2,2,2", vs, edges)


def path(n: int) -> Multigraph:
    """Path on n vertices."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    vs = [f"p{i}" for i in range(1, n + 1)]
    return build_multigraph(f"P{n}", vs, list(zip(vs, vs[1:])))


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    vs = [f"c{i}" for i in range(1, n + 1)]
    return build_multigraph(f"C{n}", vs, list(zip(vs, vs[1:] + vs[:1])))


def star(k: int) -> Multigraph:
    """K_{1,k}, center first."""
    if k < 1:
        raise GraphError("star needs k >= 1")
    vs = ["s0", *(f"s{i}" for i in range(1, k + 1))]
    return build_multigraph(f"K_1,{k}", vs, [("s0", v) for v in vs[1:]])


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()


_ARITY = {
    "fat-triangle": 3, "complete-bipartite": 2, "complete": 1, "hypercube": 1,
    "tripartite-222": 0, "path": 1, "cycle": 1, "star": 1,
}

TAGS = ("fat-triangle", "erdos", "tree-cover", "subdivision", "hat", "hat-minus", "parachute",
        "complete-bipartite", "complete", "hypercube", "tripartite-222", "path", "cycle", "star",
        "star-of-stars")

# families built from another graph rather than from integers alone
DERIVED_FAMILIES = ("tree-cover", "subdivision", "hat", "hat-minus")


def generate(fam: FamilySpec, base: Multigraph | None = None) -> Multigraph:
    """Dispatch on ``fam.tag``. Derived families take ``base``; erdos takes (n, r_1, ..., r_N)."""
    tag, p = fam.tag, tuple(fam.params)
    if tag in _ARITY and len(p) != _ARITY[tag]:
        raise GraphError(f"{tag} takes {_ARITY[tag]} parameters, got {len(p)}")
    if tag in DERIVED_FAMILIES:
        if base is None:
            raise GraphError(f"{tag} needs a base graph")
        if tag == "tree-cover":
            return gen_tree_cover(base)
        if tag == "subdivision":
            return gen_subdivision(base)
        if tag == "hat":
            return gen_hat(base)
        if len(p) != 1:
            raise GraphError("hat-minus takes one edge index")
        return gen_hat_minus_edge(base, p[0])
    if tag == "fat-triangle":
        return gen_fat_triangle_cover(*p)
    if tag == "erdos":
        if not p:
            raise GraphError("erdos needs the plane order followed by the multiplicities")
        plane = fano_plane() if p[0] == 2 else gen_projective_plane(p[0])
        return gen_erdos(plane, p[1:])
    if tag == "parachute":
        return gen_parachute(p)
    if tag == "star-of-stars":
        return star_of_stars(p)
    return gen_standard(fam)


def gen_standard(fam: FamilySpec) -> Multigraph:
    p = fam.params
    makers = {
        "complete-bipartite": complete_bipartite, "complete": complete, "hypercube": hypercube,
        "tripartite-222": tripartite_222, "path": path, "cycle": cycle, "star": star,
    }
    if fam.tag not in makers:
        raise GraphError(f"{fam.tag!r} is not a standard family")
    if len(p) != _ARITY[fam.tag]:
        raise GraphError(f"{fam.tag} takes {_ARITY[fam.tag]} parameters")
    return makers[fam.tag](*p)


# random instances -----------------------------------------------------------

def _prufer_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Multigraph:
    if n < 1:
        raise GraphError("tree needs n >= 1")
    rng = random.Random(seed)
    return build_multigraph(f"tree(n={n},seed={seed})", [f"t{i}" for i in range(n)],
                            [(f"t{a}", f"t{b}") for a, b in _prufer_tree(n, rng)])


def random_bipartite(p: int, q: int, density: float, seed: int, connected: bool = True) -> Multigraph:
    """Simple bipartite graph on parts of sizes p and q.

    With ``connected`` a random spanning tree respecting the bipartition is
    laid down first, then every other cross pair is added with probability
    ``density``.
    """
    if p < 1 or q < 1:
        raise GraphError("both parts must be nonempty")
    rng = random.Random(seed)
    a = [f"a{i}" for i in range(p)]
    b = [f"b{j}" for j in range(q)]
    chosen: set[tuple[int, int]] = set()
    if connected:
        # grow a tree: each new vertex attaches to an already placed vertex of the other part
        order = [("a", i) for i in range(p)] + [("b", j) for j in range(q)]
        rng.shuffle(order)
        first = order[0]
        rest = order[1:]
        placed = {first}
        while rest:
            progress = False
            for item in list(rest):
                other = [x for x in placed if x[0] != item[0]]
                if other:
                    tgt = rng.choice(sorted(other))
                    pair = (item[1], tgt[1]) if item[0] == "a" else (tgt[1], item[1])
                    chosen.add(pair)
                    placed.add(item)
                    rest.remove(item)
                    progress = True
                    break
            if not progress:  # only same-side vertices placed so far
                raise GraphError("cannot connect a one-sided bipartite graph")
    for i in range(p):
        for j in range(q):
            if (i, j) not in chosen and rng.random() < density:
                chosen.add((i, j))
    edges = [(a[i], b[j]) for i, j in sorted(chosen)]
    return build_multigraph(f"bip({p},{q},seed={seed})", a + b, edges)


def random_subcubic_multigraph(edges: int, seed: int, max_degree: int = 3,
                               max_tries: int = 200) -> Multigraph:
    """Bipartite multigraph with Delta <= max_degree, grown by degree-constrained edge addition.

    Parts are sized so ``edges`` edges fit; pairs are drawn at random and
    rejected when either endpoint is saturated. The result may be
    disconnected.
    """
    if edges < 1:
        raise GraphError("need at least one edge")
    rng = random.Random(seed)
    side = max(2, -(-edges // max_degree) + rng.randrange(0, 3))
    a = [f"a{i}" for i in range(side)]
    b = [f"b{j}" for j in range(side)]
    deg = {v: 0 for v in a + b}
    out: list[tuple[str, str]] = []
    tries = 0
    while len(out) < edges and tries < max_tries * edges:
        tries += 1
        x, y = rng.choice(a), rng.choice(b)
        if deg[x] < max_degree and deg[y] < max_degree:
            out.append((x, y))
            deg[x] += 1
            deg[y] += 1
    if len(out) < edges:
        raise GraphError(f"could not place {edges} edges with max degree {max_degree}")
    used = [v for v in a + b if deg[v]]
    return build_multigraph(f"subcubic(m={edges},seed={seed})", used, out)


def random_multigraph(n: int, m: int, seed: int) -> Multigraph:
    """Connected loopless multigraph: random spanning tree plus m - n + 1 random extra edges."""
    if n < 2 or m < n - 1:
        raise GraphError("need n >= 2 and m >= n - 1")
    rng = random.Random(seed)
    edges = _prufer_tree(n, rng)
    while len(edges) < m:
        x, y = rng.sample(range(n), 2)
        edges.append((x, y))
    rng.shuffle(edges)
    return build_multigraph(f"multi(n={n},m={m},seed={seed})", [f"v{i}" for i in range(n)],
                            [(f"v{x}", f"v{y}") for x, y in edges])


def gen_random(kind: str, *sizes: int, seed: int = 0) -> Multigraph:
    """kind in {tree, bipartite, subcubic-bipartite-multigraph, multigraph}.

    sizes: tree (n); bipartite (p, q[, density in percent]);
    subcubic-bipartite-multigraph (edges); multigraph (n, m).
    """
    if any(s < 1 for s in sizes):
        raise GraphError("sizes must be positive")
    if kind == "tree":
        return random_tree(sizes[0], seed)
    if kind == "bipartite":
        density = sizes[2] / 100 if len(sizes) > 2 else 0.4
        return random_bipartite(sizes[0], sizes[1], density, seed)
    if kind == "subcubic-bipartite-multigraph":
        return random_subcubic_multigraph(sizes[0], seed)
    if kind == "multigraph":
        return random_multigraph(sizes[0], sizes[1], seed)
    raise GraphError(f"unknown random kind {kind!r}")
