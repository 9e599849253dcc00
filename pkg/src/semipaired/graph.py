"""Immutable simple graphs with 1-indexed vertices and bitmask-backed vertex sets.

Bit ``v - 1`` of a mask stands for vertex ``v``. Every public function takes and
returns 1-based ids; masks are exposed for the solvers that enumerate subsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidGraphError


def bit(v: int) -> int:
    return 1 << (v - 1)


def iter_mask(mask: int) -> Iterator[int]:
    """Yield the vertex ids in ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


class VertexSet:
    """Immutable set of vertex ids with increasing-order iteration."""

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        m = 0
        for v in vertices:
            if v < 1:
                raise InvalidGraphError(f"vertex id {v} out of range")
            m |= bit(v)
        self.mask = m

    @classmethod
    def from_mask(cls, mask: int) -> VertexSet:
        vs = cls.__new__(cls)
        vs.mask = mask
        return vs

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 1 and bool(self.mask >> (v - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_mask(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet.from_mask(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet.from_mask(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet.from_mask(self.mask & ~other.mask)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``; ``adj[0]`` is unused.
    Build instances through :func:`build_graph`, which enforces the invariants.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """``closed_masks[v]`` is the bitmask of N[v]; index 0 is 0."""
        out = [0] * (self.n + 1)
        for v in range(1, self.n + 1):
            m = bit(v)
            for u in self.adj[v]:
                m |= bit(u)
            out[v] = m
        return tuple(out)

    @cached_property
    def within2_masks(self) -> tuple[int, ...]:
        """``within2_masks[v]`` is the bitmask of {u != v : d(u, v) <= 2}."""
        closed = self.closed_masks
        out = [0] * (self.n + 1)
        for v in range(1, self.n + 1):
            m = closed[v]
            for u in self.adj[v]:
                m |= closed[u]
            out[v] = m & ~bit(v)
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj[1:])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.closed_masks[u] & bit(v)) and u != v

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in self.vertices for v in self.adj[u] if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, self-loops are rejected."""
    if n < 1:
        raise InvalidGraphError(f"vertex count must be >= 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n + 1)]
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidGraphError(f"edge ({u}, {v}) has a vertex id outside [1, {n}]")
        if u == v:
            raise InvalidGraphError(f"self-loop ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def _check(g: Graph, *vs: int) -> None:
    for v in vs:
        if not 1 <= v <= g.n:
            raise InvalidGraphError(f"vertex id {v} outside [1, {g.n}]")


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Hop distances from ``source``; index 0 unused, ``None`` when unreachable."""
    _check(g, source)
    dist: list[int | None] = [None] * (g.n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path length between ``u`` and ``v``, or ``None`` if unreachable."""
    _check(g, u, v)
    return bfs_distances(g, u)[v]


def closed_neighborhood(g: Graph, u: int) -> VertexSet:
    _check(g, u)
    return VertexSet.from_mask(g.closed_masks[u])


def vertices_within_2(g: Graph, u: int) -> VertexSet:
    _check(g, u)
    return VertexSet.from_mask(g.within2_masks[u])


def dominated_mask(g: Graph, mask: int) -> int:
    closed = g.closed_masks
    covered = 0
    for v in iter_mask(mask):
        covered |= closed[v]
    return covered


def is_dominating(g: Graph, s: Iterable[int] | VertexSet) -> bool:
    mask = s.mask if isinstance(s, VertexSet) else VertexSet(s).mask
    if mask >> g.n:
        raise InvalidGraphError(f"vertex set has ids outside [1, {g.n}]")
    return dominated_mask(g, mask) == g.full_mask


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 1)[1:])


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def has_isolated_vertex(g: Graph) -> bool:
    return any(not g.adj[v] for v in g.vertices)


def relabel(g: Graph, order: Iterable[int]) -> Graph:
    """Relabel ``g`` so that ``order[i]`` becomes vertex ``i + 1``."""
    order = list(order)
    if sorted(order) != list(g.vertices):
        raise InvalidGraphError("relabeling order must be a permutation of the vertices")
    new_id = {old: i + 1 for i, old in enumerate(order)}
    return build_graph(g.n, ((new_id[u], new_id[v]) for u, v in g.edges()))


# Small named graphs used across tests, scripts and the CLI.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 1 and leaves ``2..leaves+1``."""
    return build_graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])
