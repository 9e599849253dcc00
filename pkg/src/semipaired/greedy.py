"""Greedy pair selection for semipaired domination and its harmonic ratio bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidGraphError
from .exact import OracleResult
from .graph import Graph, VertexSet, bit, has_isolated_vertex, iter_mask
from .verify import SemipairedSolution


@dataclass(frozen=True)
class GreedyRound:
    pair: tuple[int, int]
    covered: VertexSet  # vertices newly dominated in this round
    gain: int


@dataclass(frozen=True)
class GreedyTrace:
    rounds: tuple[GreedyRound, ...]
    solution: SemipairedSolution


@dataclass(frozen=True)
class RatioCertificate:
    delta: int
    harmonic_bound: float
    log_bound: float
    achieved: float | None = None

    @property
    def holds(self) -> bool:
        return self.harmonic_bound <= self.log_bound and (
            self.achieved is None or self.achieved <= self.log_bound
        )


def approx_semi_paired(g: Graph) -> GreedyTrace:
    """Repeatedly add the pair within distance 2 that dominates the most new vertices.

    Only vertices outside the current solution are eligible, so the pairs stay
    disjoint. Ties go to the lexicographically smallest ``(u, v)`` with ``u < v``.
    """
    if g.n < 2 or has_isolated_vertex(g):
        raise InvalidGraphError("greedy needs a graph on >= 2 vertices without isolated vertices")
    closed = g.closed_masks
    within2 = g.within2_masks
    covered = 0
    chosen = 0
    rounds: list[GreedyRound] = []
    while covered != g.full_mask:
        best = None
        best_gain = 0
        for u in g.vertices:
            if chosen & bit(u):
                continue
            cu = closed[u]
            # partners above u only, so each unordered pair is scored once
            for v in iter_mask(within2[u] & ~chosen & ~((1 << u) - 1)):
                gain = ((cu | closed[v]) & ~covered).bit_count()
                if gain > best_gain:
                    best, best_gain = (u, v), gain
        # an uncovered vertex and any of its neighbours are both still outside D
        assert best is not None, "no eligible pair while vertices remain undominated"
        u, v = best
        new = (closed[u] | closed[v]) & ~covered
        covered |= new
        chosen |= bit(u) | bit(v)
        rounds.append(GreedyRound(best, VertexSet.from_mask(new), best_gain))
    return GreedyTrace(tuple(rounds), SemipairedSolution(r.pair for r in rounds))


def harmonic(b: int) -> float:
    """H(b) = 1 + 1/2 + ... + 1/b, with H(0) = 0."""
    return math.fsum(1.0 / i for i in range(1, b + 1))


def ratio_certificate(g: Graph, greedy: GreedyTrace, optimum: OracleResult | None = None) -> RatioCertificate:
    delta = g.max_degree
    if delta < 1:
        raise InvalidGraphError("ratio bound needs maximum degree >= 1")
    b = 2 * delta + 2
    achieved = None
    if optimum is not None:
        achieved = greedy.solution.cardinality / optimum.cardinality
    return RatioCertificate(delta, harmonic(b), 1 + math.log(b), achieved)
