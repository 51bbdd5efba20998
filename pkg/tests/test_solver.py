import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from intervalcolor.criteria import kmn_spectrum, span_upper_bound, tree_metrics
from intervalcolor.families import (complete_bipartite, cycle, gen_fat_triangle_cover, gen_hat, hypercube, path,
                                    random_bipartite, random_multigraph, random_subcubic_multigraph, random_tree,
                                    tripartite_222)
from intervalcolor.graph import GraphError, build_multigraph, is_triangle_free, verify_interval_coloring
from intervalcolor.solver import (SAT, TIMEOUT, UNSAT, Budget, decide_interval_colorable, has_interval_t_coloring,
                                  min_span, spectrum)

from oracles import brute_force_colorable, brute_force_spans


def _check_witness(g, out):
    assert out.verdict == SAT
    assert verify_interval_coloring(g, out.witness).valid
    assert out.span <= span_upper_bound(g)
    if g.is_simple() and is_triangle_free(g):
        assert out.span <= g.n - 1


# --- decide -------------------------------------------------------------------

def test_decide_c4():
    out = decide_interval_colorable(cycle(4))
    _check_witness(cycle(4), out)
    assert out.span == 2


def test_decide_counterexamples():
    assert decide_interval_colorable(gen_fat_triangle_cover(5, 5, 5)).verdict == UNSAT
    assert decide_interval_colorable(gen_hat(tripartite_222())).verdict == UNSAT


def test_disconnected_is_input_error():
    g = build_multigraph("2K2", "abcd", [("a", "b"), ("c", "d")])
    with pytest.raises(GraphError):
        decide_interval_colorable(g)


def test_timeout_distinct_from_unsat():
    out = decide_interval_colorable(gen_fat_triangle_cover(4, 4, 4), Budget(nodes=0))
    assert out.verdict == TIMEOUT and out.witness is None


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(2, 6), st.integers(0, 6), st.integers(0, 10**6))
def test_matches_brute_force(n, extra, seed):
    m = min(7, n - 1 + extra)
    if m < n - 1:
        return
    g = random_multigraph(n, m, seed)
    out = decide_interval_colorable(g)
    assert (out.verdict == SAT) == brute_force_colorable(g)
    if out.verdict == SAT:
        _check_witness(g, out)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(0, 3), st.integers(0, 10**6))
def test_spectrum_matches_brute_force(n, extra, seed):
    g = random_multigraph(n, n - 1 + extra, seed)
    res = spectrum(g, 1, g.m)
    assert set(res.feasible) == brute_force_spans(g)
    for t in res.feasible:
        assert res.verdicts[t].span == t


# --- fixed span ---------------------------------------------------------------

def test_t_coloring_examples():
    k23 = complete_bipartite(2, 3)
    assert has_interval_t_coloring(k23, 3).verdict == UNSAT
    out = has_interval_t_coloring(k23, 4)
    _check_witness(k23, out)
    assert out.span == 4
    assert has_interval_t_coloring(cycle(4), 2).verdict == SAT
    assert has_interval_t_coloring(cycle(4), 1).verdict == UNSAT


def test_min_span_examples():
    assert min_span(cycle(4)).span == 2
    assert min_span(complete_bipartite(2, 3)).span == 4
    assert min_span(complete_bipartite(3, 3)).span == 3


def test_min_span_unsat_passthrough():
    assert min_span(gen_fat_triangle_cover(5, 5, 5)).verdict == UNSAT


def test_spectrum_examples():
    assert spectrum(path(4), 2, 3).feasible == [2, 3]
    assert spectrum(complete_bipartite(2, 2), 2, 3).feasible == [2, 3]
    assert spectrum(hypercube(2), 2, 3).feasible == [2, 3]


@pytest.mark.parametrize("m,n", [(m, n) for n in range(1, 5) for m in range(1, n + 1)])
def test_kmn_spectrum(m, n):
    g = complete_bipartite(m, n)
    lo, hi = kmn_spectrum(m, n)
    res = spectrum(g, g.max_degree, span_upper_bound(g))
    assert res.feasible == list(range(lo, hi + 1))


# --- class properties ---------------------------------------------------------

@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12), st.integers(0, 10**6))
def test_tree_spectrum(n, seed):
    t = random_tree(n, seed)
    res = spectrum(t, t.max_degree, t.n - 1)
    assert res.feasible == list(range(t.max_degree, tree_metrics(t).M + 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 9), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_small_part_bipartite_colorable(p, q, density, seed):
    g = random_bipartite(p, q, density, seed)
    if g.m == 0:
        return
    _check_witness(g, decide_interval_colorable(g))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 24), st.integers(0, 10**6))
def test_simple_subcubic_w_at_most_4(m, seed):
    g = random_subcubic_multigraph(m, seed)
    for comp in g.components():
        h, _ = g.subgraph(comp)
        if h.m == 0 or not h.is_simple():
            continue
        out = decide_interval_colorable(h, max_span=4)
        _check_witness(h, out)
        assert out.span <= 4


# --- determinism and threads --------------------------------------------------

def test_deterministic_single_thread():
    g = random_multigraph(6, 10, 3)
    a, b = decide_interval_colorable(g), decide_interval_colorable(g)
    assert a.verdict == b.verdict and a.witness == b.witness and a.nodes == b.nodes


@pytest.mark.parametrize("g", [gen_fat_triangle_cover(5, 5, 5), gen_hat(complete_bipartite(3, 4)),
                               complete_bipartite(3, 4), random_bipartite(4, 5, 0.5, 11)],
                         ids=lambda g: g.name)
def test_threads_agree(g):
    one = decide_interval_colorable(g)
    two = decide_interval_colorable(g, threads=2)
    assert one.verdict == two.verdict
    if two.verdict == SAT:
        _check_witness(g, two)
