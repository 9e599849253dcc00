import itertools

import pytest
from hypothesis import given

from semipaired.graph import VertexSet, build_graph, complete_graph, cycle_graph, distance, path_graph
from semipaired.verify import (
    NOT_DOMINATING,
    PAIR_TOO_FAR,
    VERTEX_REPEATED,
    SemipairedSolution,
    find_pairing,
    pair_distances,
    verify_solution,
)

from conftest import connected_graphs


def test_p5_distance_two_pair_is_valid():
    assert verify_solution(path_graph(5), SemipairedSolution([(2, 4)]))


def test_p4_far_pair_rejected():
    v = verify_solution(path_graph(4), SemipairedSolution([(1, 4)]))
    assert not v
    assert v.failure_reason == PAIR_TOO_FAR
    assert v.witness == (1, 4)


def test_c4_adjacent_pair_valid():
    assert verify_solution(cycle_graph(4), SemipairedSolution([(1, 2)]))


def test_repeated_vertex_rejected():
    v = verify_solution(path_graph(5), SemipairedSolution([(1, 2), (2, 3)]))
    assert v.failure_reason == VERTEX_REPEATED and v.witness == 2


def test_undominated_reports_lowest_vertex():
    v = verify_solution(path_graph(6), SemipairedSolution([(1, 2)]))
    assert v.failure_reason == NOT_DOMINATING and v.witness == 4


def test_pairs_normalized():
    sol = SemipairedSolution([(4, 2)])
    assert sol.pairs == ((2, 4),)
    assert sol.cardinality == 2 and sol.vertices == {2, 4}


def test_find_pairing_examples():
    assert find_pairing(path_graph(5), VertexSet([2, 4])).pairs == ((2, 4),)
    assert find_pairing(path_graph(4), VertexSet([1, 4])) is None
    assert find_pairing(complete_graph(5), VertexSet([1, 2, 3])) is None


def test_find_pairing_needs_backtracking():
    # path 1-2-3-4-5 with a pendant 6 on 2: pairing 1 with 2 strands 4 and 6
    g = build_graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])
    assert find_pairing(g, VertexSet([1, 2, 4, 6])).pairs == ((1, 6), (2, 4))
    assert find_pairing(g, VertexSet([2, 3, 4, 6])).pairs == ((2, 4), (3, 6))


@given(connected_graphs(max_n=8))
def test_find_pairing_agrees_with_enumeration(g):
    for size in (2, 4):
        for s in itertools.combinations(g.vertices, size):
            sol = find_pairing(g, VertexSet(s))
            brute = any(
                all(distance(g, a, b) <= 2 for a, b in zip(perm[::2], perm[1::2]))
                for perm in itertools.permutations(s)
            )
            assert (sol is not None) == brute
            if sol is not None:
                assert sol.vertices == set(s)
                assert all(d <= 2 for d in pair_distances(g, sol))


def test_out_of_range_vertex_is_an_error():
    with pytest.raises(ValueError):
        verify_solution(path_graph(3), SemipairedSolution([(1, 9)]))
