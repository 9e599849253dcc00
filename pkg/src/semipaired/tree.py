"""Minimum semipaired domination on trees by a leaves-up sweep.

Vertices are processed in reverse BFS order from a pendant root, so every
vertex is handled before its parent. The sweep keeps two labels per vertex:

``L[v]``  0 = not selected, 1 = selected but still unpaired, 2 = selected and paired.
``M[v]``  position of a selected vertex that must be paired with some vertex
          of ``N[v]`` outside the solution (0 when nothing is pending).

Positions below are 1-based places in the processing order ``alpha``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotATreeError
from .graph import Graph, is_tree
from .verify import SemipairedSolution


@dataclass(frozen=True)
class RootedTreeOrder:
    """``alpha[i - 1]`` is the vertex processed at step ``i``; the root is ``alpha[-1]``.

    ``parent`` is indexed by vertex id (index 0 unused); the root is its own parent.
    """

    alpha: tuple[int, ...]
    parent: tuple[int, ...]

    @property
    def beta(self) -> tuple[int, ...]:
        return self.alpha[::-1]

    @property
    def root(self) -> int:
        return self.alpha[-1]


@dataclass
class SweepState:
    """Labels after (or during) a sweep, indexed by position in ``alpha``."""

    L: list[int]
    M: list[int]
    pairs: list[tuple[int, int]] = field(default_factory=list)
    cases: list[str] = field(default_factory=list)


def bfs_order_from_pendant(t: Graph) -> RootedTreeOrder:
    """BFS from the lowest-id leaf, neighbours in increasing id; alpha is the reverse."""
    if t.n < 2 or not is_tree(t):
        raise NotATreeError("input is not a tree on at least two vertices")
    start = min(v for v in t.vertices if t.degree(v) == 1)
    parent = [0] * (t.n + 1)
    parent[start] = start
    beta = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in t.adj[x]:
            if not parent[y]:
                parent[y] = x
                beta.append(y)
                queue.append(y)
    return RootedTreeOrder(tuple(reversed(beta)), tuple(parent))


def _free_partner(i: int, k: int, nbrs, L) -> int:
    """Lowest free position at distance <= 2 from ``k``, preferring N(i), then N(k)."""
    for group in (nbrs[i], nbrs[k]):
        free = [u for u in group if L[u] == 0]
        if free:
            return min(free)
    free = [w for u in nbrs[k] for w in nbrs[u] if L[w] == 0]
    assert free, "no free vertex within distance 2 of the pending selection"
    return min(free)


def tree_sweep(t: Graph, order: RootedTreeOrder | None = None) -> SweepState:
    if order is None:
        order = bfs_order_from_pendant(t)
    n = t.n
    pos = {v: i for i, v in enumerate(order.alpha, start=1)}
    par = [0] * (n + 1)
    nbrs: list[tuple[int, ...]] = [()] * (n + 1)
    for v, i in pos.items():
        par[i] = pos[order.parent[v]]
        nbrs[i] = tuple(pos[u] for u in t.adj[v])

    L = [0] * (n + 1)
    M = [0] * (n + 1)
    st = SweepState(L, M)

    def select(x: int, label: int) -> None:
        assert L[x] == 0, f"position {x} selected twice"
        L[x] = label

    def pair(x: int, y: int) -> None:
        L[x] = L[y] = 2
        st.pairs.append((x, y))

    for i in range(1, n + 1):
        dominated = L[i] != 0 or any(L[u] != 0 for u in nbrs[i])
        if not dominated:
            if i >= n - 1:
                st.cases.append("2")
                select(n - 1, 2)
                select(n, 2)
                pair(n - 1, n)
                continue
            p = par[i]
            closed = (p, *nbrs[p])
            pending = [u for u in closed if M[u] != 0]
            if not pending:
                st.cases.append("1.1")
                select(p, 1)
                M[par[p]] = p
            else:
                st.cases.append("1.2")
                k = min(pending)
                s = M[k]
                M[k] = 0
                select(p, 2)
                pair(p, s)
        elif M[i] != 0:
            k = M[i]
            q = par[i]
            M[i] = 0
            if L[q] == 0:
                st.cases.append("4.1")
                select(q, 2)
                pair(q, k)
            elif L[q] == 1:
                raise AssertionError("sweep reached a parent that is selected but unpaired")
            else:
                # v_i itself may already be paired; any free vertex of N[v_i] serves.
                if L[i] == 0:
                    st.cases.append("4.3")
                    x = i
                else:
                    st.cases.append("4.3*")
                    x = _free_partner(i, k, nbrs, L)
                select(x, 2)
                pair(x, k)
        else:
            st.cases.append("3")

    assert all(L[x] != 1 for x in range(1, n + 1)), "sweep left a selected vertex unpaired"
    return st


def semi_paired_dom_tree(t: Graph) -> SemipairedSolution:
    order = bfs_order_from_pendant(t)
    st = tree_sweep(t, order)
    return SemipairedSolution((order.alpha[x - 1], order.alpha[y - 1]) for x, y in st.pairs)
