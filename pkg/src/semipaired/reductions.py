"""Gadget constructions relating semipaired domination to other problems.

Gadget vertices are numbered by concatenating the vertex families in a fixed
order; ``labels[id - 1]`` gives the symbolic name of gadget vertex ``id``:

* ``gp4``       : v_i, w_i, x_i, y_i, z_i
* ``bipartite`` : v_i^1, v_i^2, e_j^1, e_j^2, a_i, b_i, c_i, f_i
* ``split``     : v_i^1, v_i^2, u_i^1, u_i^2
* ``hardness``  : v_i^1, v_i^2, w_i^1, w_i^2, z_i

Source edges ``e_j`` are indexed in the sorted order of ``Graph.edges()``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import InvalidGraphError, SemipairedError
from .exact import is_vertex_cover
from .graph import Graph, VertexSet, bit, build_graph, is_connected, is_dominating
from .verify import SemipairedSolution, verify_solution

KINDS = ("gp4", "bipartite", "split", "hardness")


@dataclass(frozen=True, eq=False)
class ReductionOutput:
    kind: str
    gadget: Graph
    labels: tuple[str, ...]
    source: Graph = field(repr=False)
    identity: str

    @property
    def source_n(self) -> int:
        return self.source.n

    @property
    def source_m(self) -> int:
        return self.source.m

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i + 1 for i, name in enumerate(self.labels)}

    def vertex(self, name: str) -> int:
        return self.index[name]

    def family(self, prefix: str, layer: int | None = None) -> VertexSet:
        """Gadget ids whose label is ``{prefix}_i`` (or ``{prefix}_i^{layer}``)."""
        out = []
        for i, name in enumerate(self.labels, start=1):
            head, _, rest = name.partition("_")
            if head != prefix:
                continue
            _, caret, lay = rest.partition("^")
            if layer is None and not caret or layer is not None and lay == str(layer):
                out.append(i)
        return VertexSet(out)


def _build(kind: str, source: Graph, families: list[tuple[str, int, int | None]], edges, identity: str) -> ReductionOutput:
    labels: list[str] = []
    for prefix, count, layer in families:
        suffix = "" if layer is None else f"^{layer}"
        labels.extend(f"{prefix}_{i}{suffix}" for i in range(1, count + 1))
    gadget = build_graph(len(labels), edges)
    return ReductionOutput(kind, gadget, tuple(labels), source, identity)


def gp4_from(h: Graph) -> ReductionOutput:
    """Hang a path w_i - x_i - y_i - z_i off every vertex v_i of ``h``."""
    if not is_connected(h):
        raise InvalidGraphError("gp4 base graph must be connected")
    n = h.n
    v, w, x, y, z = (lambda i, o=o: o * n + i for o in range(5))
    edges = list(h.edges())
    for i in range(1, n + 1):
        edges += [(v(i), w(i)), (w(i), x(i)), (x(i), y(i)), (y(i), z(i))]
    fams = [("v", n, None), ("w", n, None), ("x", n, None), ("y", n, None), ("z", n, None)]
    return _build("gp4", h, fams, edges, "gamma_pr2(G) = (2/5)|V(G)| = 2 n_H")


def vc_to_semipd_bipartite(g: Graph) -> ReductionOutput:
    """Vertex cover of ``g`` to semipaired domination on a bipartite gadget."""
    if g.m == 0:
        raise InvalidGraphError("vertex-cover reduction needs at least one edge")
    n, m = g.n, g.m
    v1 = lambda i: i
    v2 = lambda i: n + i
    e1 = lambda j: 2 * n + j
    e2 = lambda j: 2 * n + m + j
    a, b, c, f = (lambda i, o=o: 2 * n + 2 * m + o * n + i for o in range(4))
    edges = []
    for i in range(1, n + 1):
        edges += [(v1(i), f(i)), (v2(i), f(i)), (a(i), b(i)), (b(i), c(i)), (a(i), f(i))]
    for j, (p, q) in enumerate(g.edges(), start=1):
        edges += [(v1(p), e1(j)), (v1(q), e1(j)), (v2(p), e2(j)), (v2(q), e2(j))]
    fams = [("v", n, 1), ("v", n, 2), ("e", m, 1), ("e", m, 2),
            ("a", n, None), ("b", n, None), ("c", n, None), ("f", n, None)]
    return _build("bipartite", g, fams, edges, "gamma_pr2(H) = 2n + 2 tau(G)")


def dom_to_semipd_split(g: Graph) -> ReductionOutput:
    """Domination on ``g`` to semipaired domination on a split gadget."""
    n = g.n
    v1 = lambda i: i
    v2 = lambda i: n + i
    u1 = lambda i: 2 * n + i
    u2 = lambda i: 3 * n + i
    clique = [v1(i) for i in range(1, n + 1)] + [u1(i) for i in range(1, n + 1)]
    edges = [(p, q) for k, p in enumerate(clique) for q in clique[k + 1:]]
    for i in range(1, n + 1):
        for j in (i, *g.adj[i]):
            edges += [(v2(i), v1(j)), (u2(i), u1(j))]
    fams = [("v", n, 1), ("v", n, 2), ("u", n, 1), ("u", n, 2)]
    return _build("split", g, fams, edges, "gamma_pr2(G') = 2 gamma(G)")


def dom_to_semipd_hardness(g: Graph) -> ReductionOutput:
    """Approximation-preserving gadget with two cliques V^k + Z."""
    n = g.n
    v1 = lambda i: i
    v2 = lambda i: n + i
    w1 = lambda i: 2 * n + i
    w2 = lambda i: 3 * n + i
    z = lambda i: 4 * n + i
    edges = []
    for i in range(1, n + 1):
        for j in (i, *g.adj[i]):
            edges += [(w1(i), v1(j)), (w2(i), v2(j))]
        for j in range(i + 1, n + 1):
            edges += [(v1(i), v1(j)), (v2(i), v2(j)), (z(i), z(j))]
        for j in range(1, n + 1):
            edges += [(v1(i), z(j)), (v2(i), z(j))]
    fams = [("v", n, 1), ("v", n, 2), ("w", n, 1), ("w", n, 2), ("z", n, None)]
    return _build("hardness", g, fams, edges, "gamma_pr2(H) = 2 gamma(G)")


REDUCTIONS = {
    "gp4": gp4_from,
    "bipartite": vc_to_semipd_bipartite,
    "split": dom_to_semipd_split,
    "hardness": dom_to_semipd_hardness,
}


def expected_size(kind: str, n: int, m: int) -> tuple[int, int]:
    """Closed-form (vertex count, edge count) of a gadget."""
    if kind == "gp4":
        return 5 * n, m + 4 * n
    if kind == "bipartite":
        return 6 * n + 2 * m, 5 * n + 4 * m
    if kind == "split":
        return 4 * n, n * (2 * n - 1) + 2 * (n + 2 * m)
    if kind == "hardness":
        return 5 * n, 2 * (n + 2 * m) + 3 * n * (n - 1) // 2 + 2 * n * n
    raise ValueError(f"unknown reduction kind {kind!r}")


def claimed_optimum(kind: str, source: Graph, tau: int | None = None, gamma: int | None = None) -> int:
    if kind == "gp4":
        return 2 * source.n
    if kind == "bipartite":
        return 2 * source.n + 2 * tau
    if kind in ("split", "hardness"):
        return 2 * gamma
    raise ValueError(f"unknown reduction kind {kind!r}")


def _is_independent(g: Graph, s: VertexSet) -> bool:
    closed = g.closed_masks
    return all(not (closed[v] & ~bit(v)) & s.mask for v in s)


def _is_clique(g: Graph, s: VertexSet) -> bool:
    closed = g.closed_masks
    return all(closed[v] & s.mask == s.mask for v in s)


def structure_holds(red: ReductionOutput) -> bool:
    """Check the structural certificate each gadget is meant to satisfy."""
    g = red.gadget
    if red.kind == "bipartite":
        left = red.family("v", 1) | red.family("v", 2) | red.family("a") | red.family("c")
        right = red.family("e", 1) | red.family("e", 2) | red.family("f") | red.family("b")
        return (left.mask | right.mask) == g.full_mask and not left.mask & right.mask \
            and _is_independent(g, left) and _is_independent(g, right)
    if red.kind == "split":
        clique = red.family("v", 1) | red.family("u", 1)
        indep = red.family("v", 2) | red.family("u", 2)
        return _is_clique(g, clique) and _is_independent(g, indep)
    if red.kind == "hardness":
        z = red.family("z")
        return _is_clique(g, red.family("v", 1) | z) and _is_clique(g, red.family("v", 2) | z)
    if red.kind == "gp4":
        return all(g.degree(red.vertex(f"z_{i}")) == 1 for i in range(1, red.source_n + 1))
    raise ValueError(f"unknown reduction kind {red.kind!r}")


def semipd_from_vc(red: ReductionOutput, vc: Iterable[int]) -> SemipairedSolution:
    """Map a vertex cover of the source graph to a semipaired dominating set of the gadget."""
    if red.kind != "bipartite":
        raise SemipairedError("semipd_from_vc needs a bipartite (vertex-cover) gadget")
    vc = VertexSet(vc)
    if not is_vertex_cover(red.source, vc):
        raise SemipairedError(f"{vc} is not a vertex cover of the source graph")
    pairs = [(red.vertex(f"v_{i}^1"), red.vertex(f"v_{i}^2")) for i in vc]
    pairs += [(red.vertex(f"b_{i}"), red.vertex(f"f_{i}")) for i in red.source.vertices]
    return SemipairedSolution(pairs)


def semipd_from_dominating(red: ReductionOutput, ds: Iterable[int]) -> SemipairedSolution:
    """Map a dominating set of the source graph onto the split or hardness gadget."""
    ds = VertexSet(ds)
    if not is_dominating(red.source, ds):
        raise SemipairedError(f"{ds} does not dominate the source graph")
    if red.kind == "split":
        return SemipairedSolution((red.vertex(f"v_{i}^1"), red.vertex(f"u_{i}^1")) for i in ds)
    if red.kind == "hardness":
        return SemipairedSolution((red.vertex(f"v_{i}^1"), red.vertex(f"v_{i}^2")) for i in ds)
    raise SemipairedError("semipd_from_dominating needs a split or hardness gadget")


def choose_side(red: ReductionOutput, dsp: VertexSet) -> int:
    side1 = (red.family("v", 1) | red.family("w", 1)) & dsp
    return 1 if 2 * len(side1) <= len(dsp) else 2


def extract_dominating_set(red: ReductionOutput, dsp: SemipairedSolution) -> VertexSet:
    """Recover a dominating set of the source graph of size at most |dsp| / 2.

    Picks the layer k holding at most half of ``dsp``, swaps every w_i^k that
    has no selected neighbour for v_i^k, then reads off the selected v_i^k.
    """
    if red.kind != "hardness":
        raise SemipairedError("extraction needs a hardness gadget")
    verdict = verify_solution(red.gadget, dsp)
    if not verdict:
        raise SemipairedError(f"solution is not valid on the gadget: {verdict.describe()}")
    g = red.gadget
    chosen = dsp.vertices.mask
    k = choose_side(red, dsp.vertices)
    for i in red.source.vertices:
        w = red.vertex(f"w_{i}^{k}")
        if not (g.closed_masks[w] & ~bit(w)) & chosen:
            chosen = (chosen & ~bit(w)) | bit(red.vertex(f"v_{i}^{k}"))
    result = VertexSet(i for i in red.source.vertices if chosen & bit(red.vertex(f"v_{i}^{k}")))
    assert is_dominating(red.source, result), "extracted set does not dominate the source"
    assert 2 * len(result) <= dsp.cardinality, "extracted set exceeds half the semipaired set"
    return result


def hardness_from_files(gadget: Graph, labels: tuple[str, ...]) -> ReductionOutput:
    """Rebuild a hardness reduction from a gadget graph and its label sidecar.

    The source graph is read off the w_i^1 - v_j^1 edges and the gadget is
    rebuilt from it; any mismatch with the given gadget is an error.
    """
    if len(labels) != gadget.n:
        raise SemipairedError(f"{len(labels)} labels for a gadget with {gadget.n} vertices")
    index = {name: i for i, name in enumerate(labels, start=1)}
    n = sum(1 for name in labels if name.startswith("v_") and name.endswith("^1"))
    try:
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if gadget.has_edge(index[f"w_{i}^1"], index[f"v_{j}^1"])
        ]
    except KeyError as exc:
        raise SemipairedError(f"labels do not describe a hardness gadget (missing {exc})") from None
    red = dom_to_semipd_hardness(build_graph(n, edges))
    if red.labels != labels or red.gadget != gadget:
        raise SemipairedError("gadget does not match the hardness construction for its labels")
    return red
