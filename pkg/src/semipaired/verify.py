"""Semipaired solutions: certificate checking and pairing of bare vertex sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidGraphError
from .graph import Graph, VertexSet, bfs_distances, bit, dominated_mask, iter_mask

NOT_DOMINATING = "not-dominating"
PAIR_TOO_FAR = "pair-too-far"
VERTEX_REPEATED = "vertex-repeated"
ODD_STRUCTURE = "odd-structure"


@dataclass(frozen=True)
class SemipairedSolution:
    """A vertex set given as an explicit list of 2-element blocks.

    Each pair is stored as ``(min, max)``; pair order is kept as supplied so
    solver traces stay readable.
    """

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[Sequence[int]]):
        norm = []
        for p in pairs:
            p = tuple(p)
            if len(p) != 2:
                raise InvalidGraphError(f"pair {p} does not have exactly two entries")
            u, v = p
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "pairs", tuple(norm))

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(v for p in self.pairs for v in p)

    @property
    def cardinality(self) -> int:
        return 2 * len(self.pairs)

    def pair_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)

    def __len__(self) -> int:
        return self.cardinality


@dataclass(frozen=True)
class Verdict:
    valid: bool
    failure_reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        return f"invalid: {self.failure_reason} {self.witness}"


def verify_solution(g: Graph, sol: SemipairedSolution) -> Verdict:
    """Check ``sol`` against ``g``.

    Violations are reported in a fixed order (parity, repetition, distance,
    domination) so the first failing invariant is deterministic.
    """
    for u, v in sol.pairs:
        for x in (u, v):
            if not 1 <= x <= g.n:
                raise InvalidGraphError(f"vertex id {x} outside [1, {g.n}]")
    for u, v in sol.pairs:
        if u == v:
            return Verdict(False, ODD_STRUCTURE, (u, v))
    seen = 0
    for u, v in sol.pairs:
        for x in (u, v):
            if seen & bit(x):
                return Verdict(False, VERTEX_REPEATED, x)
            seen |= bit(x)
    within2 = g.within2_masks
    for u, v in sol.pairs:
        if not within2[u] & bit(v):
            return Verdict(False, PAIR_TOO_FAR, (u, v))
    missing = g.full_mask & ~dominated_mask(g, seen)
    if missing:
        return Verdict(False, NOT_DOMINATING, (missing & -missing).bit_length())
    return Verdict(True)


def perfect_pairing(mask: int, compat: Sequence[int]) -> list[tuple[int, int]] | None:
    """Partition the vertices of ``mask`` into pairs ``{u, v}`` with ``v`` in ``compat[u]``.

    Backtracking: the lowest unpaired vertex is paired first, partners tried in
    increasing id. Returns ``None`` when no perfect pairing exists.
    """
    if mask.bit_count() % 2:
        return None
    dead: set[int] = set()

    def solve(rest: int) -> list[tuple[int, int]] | None:
        if not rest:
            return []
        if rest in dead:
            return None
        low = rest & -rest
        u = low.bit_length()
        rest ^= low
        for v in iter_mask(compat[u] & rest):
            tail = solve(rest ^ bit(v))
            if tail is not None:
                return [(u, v)] + tail
        dead.add(rest | low)
        return None

    return solve(mask)


def find_pairing(g: Graph, s: Iterable[int] | VertexSet) -> SemipairedSolution | None:
    """Pair the vertices of ``s`` at distance at most 2, or ``None`` if impossible.

    Domination is not checked here.
    """
    mask = s.mask if isinstance(s, VertexSet) else VertexSet(s).mask
    if mask >> g.n:
        raise InvalidGraphError(f"vertex set has ids outside [1, {g.n}]")
    pairs = perfect_pairing(mask, g.within2_masks)
    return None if pairs is None else SemipairedSolution(pairs)


def pair_distances(g: Graph, sol: SemipairedSolution) -> list[int | None]:
    return [bfs_distances(g, u)[v] for u, v in sol.pairs]
