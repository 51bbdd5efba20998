from intervalcolor.criteria import tree_metrics
from intervalcolor.harness import ReproRow, TreeSearchConfig, format_table, reproduce_cases, run_case, run_tree_search
from intervalcolor.solver import SAT, UNSAT

SHAPES = {
    "Delta(5,5,5)": (19, 15), "Erd-Fano(2,2,2,2,2,2,1)": (21, 13), "Erd-PG(2,3)(1^13)": (27, 13),
    "T~(star-of-stars 3,3,3,3,2)": (21, 14), "K^(3,4)": (20, 12), "K^'(3,4)": (20, 11),
    "K^(2,2,2)": (19, 12), "Par(2,2,2,2,2)": (7, 10), "Par(3,3,3)": (5, 9),
}


def test_case_shapes():
    cases = reproduce_cases()
    assert [c.name for c in cases] == list(SHAPES)
    for c in cases:
        g = c.build()
        assert (g.n, g.max_degree) == SHAPES[c.name]


def test_rows_consistent():
    for case in reproduce_cases():
        row = run_case(case)
        assert isinstance(row, ReproRow)
        if case.claimed:
            assert row.verdict == UNSAT
        if row.criteria:
            assert row.verdict != SAT


def test_specific_rows():
    rows = {c.name: run_case(c) for c in reproduce_cases() if c.name in ("K^(2,2,2)", "Delta(5,5,5)", "K^'(3,4)")}
    assert rows["K^(2,2,2)"].criteria == () and rows["K^(2,2,2)"].verdict == UNSAT
    assert "path-slack@v" in rows["Delta(5,5,5)"].criteria
    assert rows["K^'(3,4)"].criteria == () and rows["K^'(3,4)"].verdict == UNSAT
    assert "none" in format_table(list(rows.values()))


def test_tree_search_small_is_empty():
    assert run_tree_search(TreeSearchConfig(8, 1)) == []


def test_tree_search_finds_fourteen_leaf_tree():
    hits = run_tree_search(TreeSearchConfig(20, 1))
    assert any(h.tree.n == 20 and (h.leaves, h.M) == (14, 11) for h in hits)
    for h in hits:
        assert h.verdict == UNSAT
        assert tree_metrics(h.tree).M == h.M


def test_tree_search_gap_two():
    hits = run_tree_search(TreeSearchConfig(21, 2, solve=False))
    assert any(h.tree.name == "stars(3,3,3,3,3)" and (h.leaves, h.M) == (15, 11) for h in hits)
    assert all(h.gap >= 2 for h in hits)
