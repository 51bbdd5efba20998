"""Interval edge-colorings of bipartite graphs and multigraphs."""
