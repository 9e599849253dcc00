"""Shared hypothesis strategies for small graphs."""

from __future__ import annotations

from hypothesis import strategies as st

from semipaired.graph import Graph, build_graph, is_connected


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(1, v - 1)) for v in range(2, n + 1)]
    perm = draw(st.permutations(list(range(1, n + 1))))
    return build_graph(n, [(perm[v - 1], perm[p - 1]) for v, p in zip(range(2, n + 1), parents)])


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 9) -> Graph:
    """A random spanning tree plus a random set of extra edges."""
    t = draw(trees(min_n, max_n))
    n = t.n
    extra = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=2 * n))
    edges = list(t.edges()) + [(u, v) for u, v in extra if u != v]
    g = build_graph(n, edges)
    assert is_connected(g)
    return g


@st.composite
def interval_models(draw, min_n: int = 2, max_n: int = 10):
    """Endpoints are a random permutation of 1..2n paired in order of appearance."""
    from semipaired.interval import IntervalModel

    n = draw(st.integers(min_n, max_n))
    owners = draw(st.permutations([i for i in range(n) for _ in (0, 1)]))
    spans: dict[int, list[int]] = {}
    for pos, owner in enumerate(owners, start=1):
        spans.setdefault(owner, []).append(pos)
    return IntervalModel([tuple(spans[i]) for i in range(n)])
