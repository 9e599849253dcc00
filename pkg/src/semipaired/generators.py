"""Seeded instance generators. The same ``GenSpec`` always yields the same instance."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import SemipairedError
from .graph import Graph, build_graph, complete_graph, cycle_graph, is_connected, path_graph, star_graph
from .interval import IntervalModel, interval_graph_from_model

FAMILIES = ("path", "cycle", "star", "complete", "gnp", "random-tree", "random-interval", "gp4")

MAX_RETRIES = 1000


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    seed: int = 0
    p: float = 0.5
    inner: GenSpec | None = None  # base graph spec for the gp4 family

    def describe(self) -> str:
        extra = f" p={self.p}" if self.family == "gnp" else ""
        if self.family == "gp4" and self.inner is not None:
            extra = f" inner=({self.inner.describe()})"
        return f"{self.family} n={self.n} seed={self.seed}{extra}"


def generate(spec: GenSpec) -> Graph | IntervalModel:
    if spec.n < 1:
        raise SemipairedError("n must be >= 1")
    rng = random.Random(spec.seed)
    fam = spec.family
    if fam == "path":
        return path_graph(spec.n)
    if fam == "cycle":
        return cycle_graph(spec.n)
    if fam == "star":
        return star_graph(spec.n - 1)
    if fam == "complete":
        return complete_graph(spec.n)
    if fam == "random-tree":
        return _random_tree(spec.n, rng)
    if fam == "gnp":
        return _gnp_connected(spec.n, spec.p, rng)
    if fam == "random-interval":
        return _random_interval(spec.n, rng)
    if fam == "gp4":
        from .reductions import gp4_from

        inner = spec.inner or GenSpec("random-tree", spec.n, spec.seed)
        base = generate(inner)
        if isinstance(base, IntervalModel):
            base = interval_graph_from_model(base)
        return gp4_from(base).gadget
    raise SemipairedError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def _shuffled(n: int, edges, rng: random.Random) -> Graph:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u - 1], perm[v - 1]) for u, v in edges])


def _random_tree(n: int, rng: random.Random) -> Graph:
    # random parent attachment, then a random relabelling so the root is not always 1
    edges = [(v, rng.randint(1, v - 1)) for v in range(2, n + 1)]
    return _shuffled(n, edges, rng)


def _gnp_connected(n: int, p: float, rng: random.Random) -> Graph:
    for _ in range(MAX_RETRIES):
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
    raise SemipairedError(f"gnp(n={n}, p={p}): no connected sample after {MAX_RETRIES} tries")


def _random_interval(n: int, rng: random.Random) -> IntervalModel:
    """Intervals with integer endpoints 1..2n whose intersection graph is connected.

    Lengths are drawn on a per-instance scale so that sparse path-like and
    dense nested models both occur. Wherever the sorted intervals leave a gap,
    the interval reaching furthest right is stretched into the next one, so
    the model is connected by construction at every size.
    """
    scale = rng.choice((0.5, 1.0, 2.0, 4.0))
    raw = []
    for _ in range(n):
        a = rng.uniform(0, n)
        raw.append([a, a + rng.expovariate(1.0 / scale) + 1e-9])
    raw.sort()
    reach = 0
    for i in range(1, n):
        a, b = raw[i]
        if a > raw[reach][1]:
            raw[reach][1] = (a + b) / 2
        if raw[i][1] > raw[reach][1]:
            reach = i
    # rank-compress the endpoints to distinct integers, preserving their order
    points = sorted((x, i, side) for i, iv in enumerate(raw) for side, x in enumerate(iv))
    ranked = [[0, 0] for _ in range(n)]
    for rank, (_, i, side) in enumerate(points, start=1):
        ranked[i][side] = rank
    # undo the sort so vertex ids do not follow the left-end order
    perm = list(range(n))
    rng.shuffle(perm)
    return IntervalModel([ranked[i] for i in perm])
