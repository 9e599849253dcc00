"""Minimum semipaired domination on interval graphs.

The solver works on a left-end ordering ``v_1, ..., v_n`` (intervals sorted by
left endpoint) and sweeps from the right. Each step looks at the highest
remaining vertex ``v_i`` and follows the chain of least-index neighbours
``F(v_i) = v_j``, ``F(v_j) = v_k``, ``F(v_k) = v_r``. It adds one pair, plus
``{v_1, v_2}`` in the base case, and then either stops or continues on the
prefix ``v_1..v_s`` where ``v_s`` is the last vertex left undominated.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real
from typing import Sequence

from .errors import InvalidGraphError
from .graph import Graph, build_graph, is_connected
from .verify import SemipairedSolution


@dataclass(frozen=True)
class IntervalModel:
    intervals: tuple[tuple[Real, Real], ...]

    def __init__(self, intervals: Sequence[Sequence[Real]]):
        ivs = tuple((a, b) for a, b in intervals)
        if not ivs:
            raise InvalidGraphError("interval model is empty")
        for idx, (a, b) in enumerate(ivs, start=1):
            if not a < b:
                raise InvalidGraphError(f"interval {idx} = ({a}, {b}) needs a < b")
        seen: dict[Real, int] = {}
        for idx, (a, b) in enumerate(ivs, start=1):
            for x in (a, b):
                if x in seen:
                    raise InvalidGraphError(
                        f"duplicate endpoint {x} shared by intervals {seen[x]} and {idx}"
                    )
                seen[x] = idx
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class LeftEndOrdering:
    """``order[i - 1]`` is the vertex playing the role of ``v_i``."""

    order: tuple[int, ...]

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order, start=1)}

    @classmethod
    def identity(cls, n: int) -> LeftEndOrdering:
        return cls(tuple(range(1, n + 1)))


@dataclass(frozen=True)
class IntervalIndices:
    """Per-position F and L values; index 0 is unused and 0 encodes ``v_0``."""

    F: tuple[int, ...]
    L: tuple[int, ...]


@dataclass(frozen=True)
class IntervalStep:
    """One iteration of the sweep, in positions along the ordering."""

    i: int
    branch: str
    j: int | None = None
    k: int | None = None
    r: int | None = None
    t: int | None = None
    b: int | None = None
    s: int = 0
    added: tuple[tuple[int, int], ...] = ()

    def describe(self) -> str:
        parts = [f"i={self.i}", f"branch={self.branch}"]
        for name in ("j", "k", "r", "t", "b"):
            val = getattr(self, name)
            if val is not None:
                parts.append(f"{name}={val}")
        parts.append(f"s={self.s}")
        parts.append("added=" + " ".join(f"{{v{u},v{v}}}" for u, v in self.added))
        return " ".join(parts)


def left_end_order(model: IntervalModel) -> LeftEndOrdering:
    order = sorted(range(1, model.n + 1), key=lambda v: model.intervals[v - 1][0])
    return LeftEndOrdering(tuple(order))


def interval_graph_from_model(model: IntervalModel) -> Graph:
    """Intersection graph of the model with vertex ``i`` = ``i``-th interval by left end."""
    ivs = [model.intervals[v - 1] for v in left_end_order(model).order]
    edges = []
    for i, (a, b) in enumerate(ivs, start=1):
        for j in range(i + 1, len(ivs) + 1):
            if ivs[j - 1][0] > b:
                break
            edges.append((i, j))
    return build_graph(len(ivs), edges)


def compute_indices(g: Graph, ordering: LeftEndOrdering) -> IntervalIndices:
    n = g.n
    pos = ordering.position
    if len(pos) != n or set(pos) != set(g.vertices):
        raise InvalidGraphError("ordering is not a permutation of the graph's vertices")
    F = [0] * (n + 1)
    L = [0] * (n + 1)
    for i, v in enumerate(ordering.order, start=1):
        lower = [pos[u] for u in g.adj[v] if pos[u] < i]
        F[i] = min(lower) if lower else i
        below = set(lower)
        q = i - 1
        while q >= 1 and q in below:
            q -= 1
        L[i] = q
    F[1] = 1
    return IntervalIndices(tuple(F), tuple(L))


def interval_trace(g: Graph, ordering: LeftEndOrdering) -> tuple[SemipairedSolution, list[IntervalStep]]:
    """Run the sweep and return the solution (in ``g``'s ids) with its step log."""
    n = g.n
    if n < 2:
        raise InvalidGraphError("interval solver needs at least two vertices")
    if not is_connected(g):
        raise InvalidGraphError("interval solver needs a connected graph")
    idx = compute_indices(g, ordering)
    F, L = idx.F, idx.L
    order = ordering.order
    pos = ordering.position
    adj_pos = [frozenset()] + [frozenset(pos[u] for u in g.adj[v]) for v in order]
    for i in range(2, n + 1):
        if F[i] >= i:
            raise InvalidGraphError("ordering is not a left-end ordering of a connected interval graph")

    steps: list[IntervalStep] = []
    i = n
    while i >= 1:
        j = F[i]
        if j == 1:
            steps.append(IntervalStep(i, "F(v_i)=v_1", added=((1, i),)))
            break
        k = F[j]
        if k == 1:
            steps.append(IntervalStep(i, "F(v_j)=v_1", j=j, added=((1, j),)))
            break
        r = F[k]
        gap = range(k + 1, j)
        covered = all(l in adj_pos[j] or l in adj_pos[r] for l in gap)
        t = b = None
        if covered:
            x = r
            branch = "gap-covered"
        else:
            t = max(l for l in gap if l not in adj_pos[j])
            b = x = F[t]
            branch = "gap-uncovered"
        s = L[x]
        if s == 0:
            added = ((j, x),)
        elif s == 1:
            added = ((1, 2), (j, x))
        else:
            added = ((j, x),)
        steps.append(IntervalStep(i, branch, j=j, k=k, r=r, t=t, b=b, s=s, added=added))
        if s <= 1:
            break
        i = s

    pairs = [(order[u - 1], order[v - 1]) for step in steps for u, v in step.added]
    return SemipairedSolution(pairs), steps


def semi_paired_dom_interval(g: Graph, ordering: LeftEndOrdering) -> SemipairedSolution:
    return interval_trace(g, ordering)[0]


def solve_model(model: IntervalModel) -> tuple[Graph, SemipairedSolution]:
    """Build the interval graph (ids along the left-end ordering) and solve it."""
    g = interval_graph_from_model(model)
    return g, semi_paired_dom_interval(g, LeftEndOrdering.identity(g.n))
