import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intervalcolor.criteria import (best_certificate, check_erdos, check_fat_triangle, check_hat, check_parachute,
                                    check_tree_cover, kmn_spectrum, path_slack_certificate, span_upper_bound,
                                    tree_L, tree_metrics)
from intervalcolor.families import (complete, complete_bipartite, cycle, gen_fat_triangle_cover, gen_parachute,
                                    path, random_multigraph, random_tree, star, star_of_stars)
from intervalcolor.graph import GraphError, build_multigraph
from intervalcolor.solver import UNSAT, Budget, decide_interval_colorable

from oracles import dijkstra_free_slack, tree_M_by_paths


# --- path-slack certificate ---------------------------------------------------

def test_certificate_fat_triangle():
    c = path_slack_certificate(gen_fat_triangle_cover(5, 5, 5), "v")
    assert (c.required_spread, c.best_slack, c.fired) == (14, 13, True)


def test_certificate_star_silent():
    c = path_slack_certificate(star(3), "s0")
    assert c.required_spread == 2 and c.best_slack == math.inf and not c.fired


def test_certificate_parachute():
    c = path_slack_certificate(gen_parachute((2, 2, 2, 2, 2)), "u")
    assert (c.required_spread, c.best_slack, c.fired) == (9, 8, True)


def test_certificate_unknown_pivot():
    with pytest.raises(GraphError):
        path_slack_certificate(star(3), "nope")


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 6), st.integers(0, 10**6))
def test_certificate_matches_pairwise_oracle(n, extra, seed):
    g = random_multigraph(n, n - 1 + extra, seed)
    for pivot in g.vertices:
        nb = sorted({w for a, b in g.edges for w in (a, b) if pivot in (a, b) and w != pivot})
        want = max(dijkstra_free_slack(g, pivot, x, y) for x, y in itertools.combinations_with_replacement(nb, 2))
        assert path_slack_certificate(g, pivot).best_slack == want


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(1, 8))
def test_fat_triangle_rule_implies_certificate(a, b, c):
    r, s, t = sorted((a, b, c))
    if check_fat_triangle(r, s, t):
        assert path_slack_certificate(gen_fat_triangle_cover(r, s, t), "v").fired


# --- family criteria ----------------------------------------------------------

def test_fat_triangle_criterion():
    assert check_fat_triangle(5, 5, 5)
    assert not check_fat_triangle(4, 9, 9)
    assert not check_fat_triangle(1, 1, 1)


def test_erdos_criterion():
    assert check_erdos(2, (2, 2, 2, 2, 2, 2, 1))
    assert check_erdos(3, (1,) * 13)
    assert not check_erdos(2, (1,) * 7)
    with pytest.raises(GraphError):
        check_erdos(2, (1, 2, 1, 1, 1, 1, 1))


def test_parachute_criterion():
    assert check_parachute((2, 2, 2, 2, 2))
    assert not check_parachute((3, 3, 3))
    assert check_parachute((4, 4, 4))


def test_hat_criterion():
    assert check_hat(complete(7))
    assert not check_hat(complete_bipartite(3, 4))
    assert not check_hat(complete_bipartite(2, 5))


def test_kmn_spectrum_examples():
    assert kmn_spectrum(2, 3) == (4, 4)
    assert kmn_spectrum(2, 2) == (2, 3)
    assert kmn_spectrum(1, 1) == (1, 1)


def test_span_upper_bound_examples():
    assert span_upper_bound(cycle(4)) == 3
    assert span_upper_bound(complete(3)) == 3
    assert span_upper_bound(build_multigraph("5K2", "uv", [("u", "v")] * 5)) == 5


# --- tree metrics -------------------------------------------------------------

def test_tree_L_examples():
    assert tree_L(path(3), "p1", "p3") == 2
    assert tree_L(star(4), "s1", "s2") == 4
    t = star_of_stars((3, 3, 3, 3, 2))
    # leaf under child 1 to leaf under child 2
    assert tree_L(t, "c1_1", "c2_1") == 11
    with pytest.raises(GraphError):
        tree_L(t, "c1_1", "nope")


def test_tree_metrics_examples():
    m = tree_metrics(path(3))
    assert (m.M, len(m.leaves)) == (2, 2)
    m = tree_metrics(star(4))
    assert (m.M, len(m.leaves)) == (4, 4)
    m = tree_metrics(star_of_stars((3, 3, 3, 3, 2)))
    assert (m.M, len(m.leaves)) == (11, 14)


def test_tree_cover_criterion():
    assert check_tree_cover(star_of_stars((3, 3, 3, 3, 2)))
    assert not check_tree_cover(star(4))
    assert check_tree_cover(star_of_stars((3, 3, 3, 3, 3)))
    with pytest.raises(GraphError):
        check_tree_cover(path(4))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(0, 10**6))
def test_tree_M_matches_path_scan(n, seed):
    t = random_tree(n, seed)
    assert tree_metrics(t).M == tree_M_by_paths(t)


# --- soundness on small instances ---------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(3, 7), st.integers(0, 8), st.integers(0, 10**6))
def test_fired_certificate_means_unsat(n, extra, seed):
    g = random_multigraph(n, n - 1 + extra, seed)
    cert = best_certificate(g)
    if cert is not None:
        out = decide_interval_colorable(g, Budget(millis=20_000))
        assert out.verdict == UNSAT
