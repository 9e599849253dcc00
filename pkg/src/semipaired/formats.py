"""Plain-text instance, solution and label formats.

Edge list::

    n m
    u v        (m lines, 1-indexed)

Interval model::

    n
    a b        (n lines, integers or decimals)

Solution::

    k
    u v        (k pairs)

Labels sidecar: one ``id name`` line per gadget vertex.
Blank lines and lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

from typing import Iterator

from .errors import FormatError, SemipairedError
from .graph import Graph, build_graph
from .interval import IntervalModel
from .verify import SemipairedSolution


def _lines(data: str | bytes) -> Iterator[tuple[int, list[str]]]:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(tokens: list[str], count: int, lineno: int, what: str) -> list[int]:
    if len(tokens) != count:
        raise FormatError(f"expected {what}, got {' '.join(tokens)!r}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers for {what}, got {' '.join(tokens)!r}", lineno) from None


def _number(token: str, lineno: int) -> int | float:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise FormatError(f"not a number: {token!r}", lineno) from None


def detect_format(data: str | bytes) -> str:
    """``"intervals"`` when the header holds a single count, else ``"edgelist"``."""
    for _, tokens in _lines(data):
        return "intervals" if len(tokens) == 1 else "edgelist"
    raise FormatError("empty input")


def parse_edgelist(data: str | bytes) -> Graph:
    lines = _lines(data)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise FormatError("empty edge list") from None
    n, m = _ints(tokens, 2, lineno, "header 'n m'")
    edges = []
    for lineno, tokens in lines:
        u, v = _ints(tokens, 2, lineno, "edge 'u v'")
        if not (1 <= u <= n and 1 <= v <= n):
            raise FormatError(f"edge ({u}, {v}): vertex id out of range [1, {n}]", lineno)
        if u == v:
            raise FormatError(f"self-loop ({u}, {v})", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but {len(edges)} were given")
    try:
        return build_graph(n, edges)
    except SemipairedError as exc:
        raise FormatError(str(exc)) from None


def emit_edgelist(g: Graph) -> str:
    edges = g.edges()
    return f"{g.n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)


def parse_intervals(data: str | bytes) -> IntervalModel:
    lines = _lines(data)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise FormatError("empty interval file") from None
    (n,) = _ints(tokens, 1, lineno, "header 'n'")
    intervals = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise FormatError(f"expected interval 'a b', got {' '.join(tokens)!r}", lineno)
        intervals.append((_number(tokens[0], lineno), _number(tokens[1], lineno)))
    if len(intervals) != n:
        raise FormatError(f"header announces {n} intervals but {len(intervals)} were given")
    try:
        return IntervalModel(intervals)
    except SemipairedError as exc:
        raise FormatError(str(exc)) from None


def _fmt(x: int | float) -> str:
    return str(x) if isinstance(x, int) else repr(float(x))


def emit_intervals(model: IntervalModel) -> str:
    return f"{model.n}\n" + "".join(f"{_fmt(a)} {_fmt(b)}\n" for a, b in model.intervals)


def parse_solution(data: str | bytes) -> SemipairedSolution:
    lines = _lines(data)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise FormatError("empty solution file") from None
    (k,) = _ints(tokens, 1, lineno, "header 'k'")
    pairs = [tuple(_ints(tokens, 2, lineno, "pair 'u v'")) for lineno, tokens in lines]
    if len(pairs) != k:
        raise FormatError(f"header announces {k} pairs but {len(pairs)} were given")
    return SemipairedSolution(pairs)


def emit_solution(sol: SemipairedSolution) -> str:
    return f"{len(sol.pairs)}\n" + "".join(f"{u} {v}\n" for u, v in sol.pairs)


def parse_labels(data: str | bytes) -> tuple[str, ...]:
    entries: dict[int, str] = {}
    for lineno, tokens in _lines(data):
        if len(tokens) != 2:
            raise FormatError(f"expected 'id name', got {' '.join(tokens)!r}", lineno)
        (idx,) = _ints(tokens[:1], 1, lineno, "vertex id")
        if idx in entries:
            raise FormatError(f"vertex {idx} labelled twice", lineno)
        entries[idx] = tokens[1]
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise FormatError("label ids must be exactly 1..N")
    return tuple(entries[i] for i in range(1, len(entries) + 1))


def emit_labels(labels: tuple[str, ...]) -> str:
    return "".join(f"{i} {name}\n" for i, name in enumerate(labels, start=1))
