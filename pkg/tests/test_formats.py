import pytest
from hypothesis import given

from semipaired.errors import FormatError
from semipaired.formats import (
    detect_format,
    emit_edgelist,
    emit_intervals,
    emit_labels,
    emit_solution,
    parse_edgelist,
    parse_intervals,
    parse_labels,
    parse_solution,
)
from semipaired.graph import path_graph
from semipaired.interval import IntervalModel
from semipaired.verify import SemipairedSolution

from conftest import connected_graphs, interval_models


def test_parse_p2():
    g = parse_edgelist("2 1\n1 2\n")
    assert g == path_graph(2)


def test_normalization():
    raw = "# a comment\n3 2\n\n3 2\n2 1\n"
    assert emit_edgelist(parse_edgelist(raw)) == "3 2\n1 2\n2 3\n"


def test_bytes_input():
    assert parse_edgelist(b"2 1\n1 2\n").m == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n1 3\n", 2),
        ("2 1\n1 1\n", 2),
        ("2 1\n1 x\n", 2),
        ("2 1\n1 2 3\n", 2),
        ("2\n", 1),
    ],
)
def test_edgelist_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        parse_edgelist(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_edge_count_mismatch():
    with pytest.raises(FormatError):
        parse_edgelist("3 2\n1 2\n")


def test_intervals():
    model = parse_intervals("3\n1 3\n2.5 5\n4 7\n")
    assert model.intervals[1] == (2.5, 5)
    assert emit_intervals(model) == "3\n1 3\n2.5 5\n4 7\n"
    with pytest.raises(FormatError):
        parse_intervals("2\n1 3\n1 4\n")


def test_detect_format():
    assert detect_format("# x\n3\n1 2\n") == "intervals"
    assert detect_format("2 1\n1 2\n") == "edgelist"
    with pytest.raises(FormatError):
        detect_format("# only a comment\n")


def test_solution_roundtrip():
    sol = SemipairedSolution([(4, 2), (1, 3)])
    text = emit_solution(sol)
    assert text == "2\n2 4\n1 3\n"
    assert parse_solution(text) == sol
    with pytest.raises(FormatError):
        parse_solution("2\n1 2\n")


def test_labels_roundtrip():
    labels = ("v_1^1", "v_2^1", "z_1")
    assert parse_labels(emit_labels(labels)) == labels
    with pytest.raises(FormatError):
        parse_labels("1 a\n3 b\n")


@given(connected_graphs())
def test_edgelist_roundtrip(g):
    text = emit_edgelist(g)
    assert parse_edgelist(text) == g
    assert emit_edgelist(parse_edgelist(text)) == text


@given(interval_models())
def test_interval_roundtrip(model):
    again = parse_intervals(emit_intervals(model))
    assert again.intervals == model.intervals
    assert isinstance(again, IntervalModel)
