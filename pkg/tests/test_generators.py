import pytest
from hypothesis import given
from hypothesis import strategies as st

from semipaired.errors import SemipairedError
from semipaired.generators import FAMILIES, GenSpec, generate
from semipaired.graph import Graph, is_connected, is_tree, path_graph
from semipaired.interval import IntervalModel, interval_graph_from_model


def test_path():
    assert generate(GenSpec("path", 4)) == path_graph(4)


def test_random_tree_deterministic():
    a = generate(GenSpec("random-tree", 5, seed=7))
    b = generate(GenSpec("random-tree", 5, seed=7))
    assert a.edges() == b.edges()


def test_random_interval_distinct_endpoints():
    model = generate(GenSpec("random-interval", 6, seed=1))
    ends = [x for iv in model.intervals for x in iv]
    assert len(set(ends)) == 12


def test_cycle_needs_three_vertices():
    with pytest.raises(SemipairedError):
        generate(GenSpec("cycle", 2))


def test_unknown_family():
    with pytest.raises(SemipairedError):
        generate(GenSpec("petersen", 10))


def test_gnp_retries_exhausted():
    with pytest.raises(SemipairedError):
        generate(GenSpec("gnp", 8, seed=0, p=0.0))


def test_gp4_inner():
    g = generate(GenSpec("gp4", 3, inner=GenSpec("complete", 3)))
    assert g.n == 15 and g.m == 3 + 12


@given(st.sampled_from(FAMILIES), st.integers(2, 12), st.integers(0, 10_000))
def test_every_family_is_deterministic_and_connected(family, n, seed):
    if family == "cycle":
        n = max(n, 3)
    spec = GenSpec(family, n, seed)
    a, b = generate(spec), generate(spec)
    if isinstance(a, IntervalModel):
        assert a.intervals == b.intervals
        a = interval_graph_from_model(a)
    else:
        assert a == b
    assert isinstance(a, Graph) and is_connected(a)
    if family == "random-tree":
        assert is_tree(a) and a.n == n
