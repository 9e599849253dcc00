"""Exhaustive oracles for domination-type parameters on small graphs.

Every oracle walks cardinalities upward and, inside one cardinality, subsets
in lexicographic order, so the returned witness is the lexicographically
smallest optimal set (with the canonical lowest-first pairing on top).
Pruning only discards subtrees that provably contain no hitting set, so it
never changes which witness is found.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BoundExceeded, InvalidGraphError
from .graph import Graph, VertexSet, bit, is_connected
from .verify import SemipairedSolution, perfect_pairing

# Without an upper bound the sweep is 2^n in the worst case.
MAX_UNBOUNDED_N = 32


@dataclass(frozen=True)
class OracleResult:
    cardinality: int
    witness: VertexSet | SemipairedSolution
    explored: int


class _Search:
    """Lexicographic k-subset enumeration restricted to hitting sets of ``reqs``."""

    def __init__(self, n: int, reqs: list[int], accept: Callable[[int], object] | None):
        self.n = n
        # Sorted by highest member: the first unhit requirement bounds the next pick.
        self.reqs = sorted(set(reqs), key=lambda r: (r.bit_length(), r))
        self.accept = accept
        self.explored = 0
        self.found: object = None

    def run(self, k: int) -> int | None:
        self.found = None
        return self._dfs(1, 0, k)

    def _dfs(self, start: int, chosen: int, remaining: int) -> int | None:
        below = (1 << (start - 1)) - 1  # vertices that can no longer be picked
        limit = self.n - remaining + 1
        used = 0
        packed = 0
        for r in self.reqs:
            if r & chosen:
                continue
            avail = r & ~below
            if not avail:
                return None
            if packed == 0:
                limit = min(limit, r.bit_length())
            if not avail & used:
                used |= avail
                packed += 1
                if packed > remaining:
                    return None
        if remaining == 0:
            self.explored += 1
            if self.accept is None:
                return chosen
            result = self.accept(chosen)
            if result is not None:
                self.found = result
                return chosen
            return None
        for x in range(start, limit + 1):
            hit = self._dfs(x + 1, chosen | bit(x), remaining - 1)
            if hit is not None:
                return hit
        return None


def _require_connected(g: Graph, what: str) -> None:
    if g.n < 2:
        raise InvalidGraphError(f"{what} needs at least two vertices")
    if not is_connected(g):
        raise InvalidGraphError(f"{what} needs a connected graph")


def _size_guard(g: Graph, upper_bound: int | None) -> None:
    if upper_bound is None and g.n > MAX_UNBOUNDED_N:
        raise InvalidGraphError(
            f"n = {g.n} is too large for an unbounded exhaustive sweep (max {MAX_UNBOUNDED_N}); "
            "pass upper_bound"
        )


def _sweep(search: _Search, sizes, upper_bound: int | None):
    for k in sizes:
        if upper_bound is not None and k > upper_bound:
            raise BoundExceeded(upper_bound, search.explored)
        chosen = search.run(k)
        if chosen is not None:
            return k, chosen
    raise AssertionError("exhaustive sweep found no witness")


def exact_semi_pd(g: Graph, upper_bound: int | None = None) -> OracleResult:
    """Minimum semipaired dominating set by exhaustion."""
    _require_connected(g, "semipaired domination")
    _size_guard(g, upper_bound)
    within2 = g.within2_masks
    search = _Search(g.n, list(g.closed_masks[1:]), lambda mask: perfect_pairing(mask, within2))
    k, _ = _sweep(search, range(2, g.n + 1, 2), upper_bound)
    return OracleResult(k, SemipairedSolution(search.found), search.explored)


def exact_paired_domination(g: Graph, upper_bound: int | None = None) -> OracleResult:
    """Minimum dominating set whose induced subgraph has a perfect matching."""
    _require_connected(g, "paired domination")
    _size_guard(g, upper_bound)
    open_masks = [m & ~bit(v) if v else 0 for v, m in enumerate(g.closed_masks)]
    search = _Search(g.n, list(g.closed_masks[1:]), lambda mask: perfect_pairing(mask, open_masks))
    k, _ = _sweep(search, range(2, g.n + 1, 2), upper_bound)
    return OracleResult(k, SemipairedSolution(search.found), search.explored)


def exact_domination(g: Graph, upper_bound: int | None = None) -> OracleResult:
    _size_guard(g, upper_bound)
    search = _Search(g.n, list(g.closed_masks[1:]), None)
    k, chosen = _sweep(search, range(1, g.n + 1), upper_bound)
    return OracleResult(k, VertexSet.from_mask(chosen), search.explored)


def exact_vertex_cover(g: Graph, upper_bound: int | None = None) -> OracleResult:
    _size_guard(g, upper_bound)
    if g.m == 0:
        return OracleResult(0, VertexSet(), 1)
    search = _Search(g.n, [bit(u) | bit(v) for u, v in g.edges()], None)
    k, chosen = _sweep(search, range(1, g.n + 1), upper_bound)
    return OracleResult(k, VertexSet.from_mask(chosen), search.explored)


def is_vertex_cover(g: Graph, s) -> bool:
    mask = s.mask if isinstance(s, VertexSet) else VertexSet(s).mask
    return all(mask & (bit(u) | bit(v)) for u, v in g.edges())


def domination_chain(g: Graph) -> tuple[int, int, int]:
    """(gamma, gamma_pr2, gamma_pr) of a connected graph."""
    return (
        exact_domination(g).cardinality,
        exact_semi_pd(g).cardinality,
        exact_paired_domination(g).cardinality,
    )
