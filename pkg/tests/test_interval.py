from pathlib import Path

import pytest
from hypothesis import given, settings

from semipaired.errors import InvalidGraphError
from semipaired.exact import exact_semi_pd
from semipaired.formats import parse_intervals
from semipaired.graph import build_graph, complete_graph, is_connected, path_graph, relabel
from semipaired.interval import (
    IntervalModel,
    LeftEndOrdering,
    compute_indices,
    interval_graph_from_model,
    interval_trace,
    left_end_order,
    semi_paired_dom_interval,
    solve_model,
)
from semipaired.verify import verify_solution

from conftest import interval_models

DATA = Path(__file__).parent / "data"
CHAIN = IntervalModel([(1, 3), (2, 5), (4, 7), (6, 8)])


def test_left_end_order():
    assert left_end_order(IntervalModel([(1, 3), (2, 5), (4, 7)])).order == (1, 2, 3)
    assert left_end_order(IntervalModel([(2, 5), (1, 3), (4, 7)])).order == (2, 1, 3)


@pytest.mark.parametrize("ivs", [[(1, 3), (1, 4)], [(1, 3), (3, 4)], [(3, 1)]])
def test_bad_models_rejected(ivs):
    with pytest.raises(InvalidGraphError):
        IntervalModel(ivs)


def test_model_graphs():
    assert interval_graph_from_model(CHAIN).edges() == path_graph(4).edges()
    nested = interval_graph_from_model(IntervalModel([(1, 10), (2, 3), (4, 5)]))
    assert list(nested.edges()) == [(1, 2), (1, 3)]
    assert interval_graph_from_model(IntervalModel([(1, 2), (3, 4)])).m == 0


def test_indices():
    ident = LeftEndOrdering.identity
    p4 = compute_indices(path_graph(4), ident(4))
    assert p4.F[1:] == (1, 1, 2, 3) and p4.L[1:] == (0, 0, 1, 2)
    star = interval_graph_from_model(IntervalModel([(1, 10), (2, 3), (4, 5), (6, 7)]))
    s = compute_indices(star, ident(4))
    assert s.F[1:] == (1, 1, 1, 1) and s.L[1:] == (0, 0, 2, 3)
    k3 = compute_indices(complete_graph(3), ident(3))
    assert k3.F[1:] == (1, 1, 1) and k3.L[1:] == (0, 0, 0)


def test_p4_chain_solution():
    g, sol = solve_model(CHAIN)
    assert sol.pair_set() == {(1, 3)}


def test_p2():
    assert semi_paired_dom_interval(path_graph(2), LeftEndOrdering.identity(2)).pairs == ((1, 2),)


def test_disconnected_rejected():
    g = interval_graph_from_model(IntervalModel([(1, 2), (3, 4)]))
    with pytest.raises(InvalidGraphError):
        semi_paired_dom_interval(g, LeftEndOrdering.identity(2))


def test_worked_example_reconstruction():
    model = parse_intervals((DATA / "worked_example_intervals.txt").read_text())
    g = interval_graph_from_model(model)
    sol, steps = interval_trace(g, LeftEndOrdering.identity(g.n))
    assert sol.vertices == {1, 2, 6, 9, 13, 15}
    assert sol.pair_set() == {(13, 15), (6, 9), (1, 2)}
    assert [(s.i, s.added, s.s) for s in steps] == [
        (16, ((15, 13),), 10),
        (10, ((9, 6),), 4),
        (4, ((1, 2),), 0),
    ]
    assert exact_semi_pd(g).cardinality == 6


def test_bare_graph_with_supplied_ordering():
    # vertex ids shuffled; the caller supplies where each sits along the left ends
    g = relabel(path_graph(4), [3, 1, 4, 2])
    order = LeftEndOrdering((2, 4, 1, 3))
    sol = semi_paired_dom_interval(g, order)
    assert verify_solution(g, sol) and sol.cardinality == 2


def _all_models(n):
    """Every endpoint pattern on 2n points (one model per perfect matching)."""
    def match(points):
        if not points:
            yield []
            return
        a = points[0]
        for idx in range(1, len(points)):
            rest = points[1:idx] + points[idx + 1:]
            for tail in match(rest):
                yield [(a, points[idx])] + tail

    for m in match(list(range(1, 2 * n + 1))):
        yield IntervalModel(m)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_exhaustive_small_models(n):
    checked = 0
    for model in _all_models(n):
        g = interval_graph_from_model(model)
        if not is_connected(g):
            continue
        sol = semi_paired_dom_interval(g, LeftEndOrdering.identity(n))
        assert verify_solution(g, sol), model
        assert sol.cardinality == exact_semi_pd(g).cardinality, model
        checked += 1
    assert checked > 0


@settings(max_examples=150, deadline=None)
@given(interval_models(max_n=12))
def test_matches_oracle(model):
    g = interval_graph_from_model(model)
    if not is_connected(g):
        return
    sol, steps = interval_trace(g, LeftEndOrdering.identity(g.n))
    assert verify_solution(g, sol)
    assert sol.cardinality == exact_semi_pd(g).cardinality
    # each iteration restarts strictly further left
    starts = [s.i for s in steps]
    assert starts == sorted(starts, reverse=True) and len(set(starts)) == len(starts)


@given(interval_models(max_n=12))
def test_neighbourhoods_are_consecutive_from_the_left(model):
    # if v_i ~ v_j with i < j then v_i ~ v_k for every i < k < j
    g = interval_graph_from_model(model)
    for i, j in g.edges():
        assert all(g.has_edge(i, k) for k in range(i + 1, j))


@given(interval_models(max_n=12))
def test_prefixes_stay_connected(model):
    g = interval_graph_from_model(model)
    if not is_connected(g):
        return
    for i in range(1, g.n + 1):
        assert is_connected(build_graph(i, [(u, v) for u, v in g.edges() if v <= i]))
