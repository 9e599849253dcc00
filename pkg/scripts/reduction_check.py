"""Check gadget sizes and bounded-oracle optima for every reduction on small sources."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from semipaired.errors import SemipairedError
from semipaired.exact import exact_domination, exact_paired_domination, exact_semi_pd, exact_vertex_cover
from semipaired.graph import Graph, build_graph, complete_graph, cycle_graph, path_graph, star_graph
from semipaired.reductions import KINDS, REDUCTIONS, claimed_optimum, expected_size, structure_holds

SOURCES = {
    "K1": lambda: build_graph(1, []),
    "K2": lambda: path_graph(2),
    "P3": lambda: path_graph(3),
    "P4": lambda: path_graph(4),
    "K3": lambda: complete_graph(3),
    "C4": lambda: cycle_graph(4),
    "K13": lambda: star_graph(3),
}


@dataclass
class CheckConfig:
    sources: list[str] = field(default_factory=lambda: ["P3", "P4", "K3", "C4"])
    kinds: list[str] = field(default_factory=lambda: list(KINDS))
    slack: int = 2  # oracle bound = claimed optimum + slack
    paired_gp4: bool = True


def check(kind: str, name: str, g: Graph, cfg: CheckConfig) -> str:
    if kind == "gp4" and g.n > 3:
        return f"{kind:<10}{name:<5} skipped (gp4 oracle limited to n <= 3)"
    try:
        red = REDUCTIONS[kind](g)
    except SemipairedError as exc:
        return f"{kind:<10}{name:<5} skipped ({exc})"
    tau = exact_vertex_cover(g).cardinality if g.m else 0
    gamma = exact_domination(g).cardinality
    claim = claimed_optimum(kind, g, tau=tau, gamma=gamma)
    t0 = time.perf_counter()
    got = exact_semi_pd(red.gadget, upper_bound=claim + cfg.slack).cardinality
    dt = time.perf_counter() - t0
    sizes = (red.gadget.n, red.gadget.m)
    line = (
        f"{kind:<10}{name:<5} |V|={sizes[0]:<3} |E|={sizes[1]:<4} "
        f"size={'ok' if sizes == expected_size(kind, g.n, g.m) else 'MISMATCH'} "
        f"structure={'ok' if structure_holds(red) else 'BROKEN'} "
        f"claimed={claim} oracle={got} {'ok' if got == claim else 'MISMATCH'} ({dt:.2f}s)"
    )
    if kind == "gp4" and cfg.paired_gp4 and g.n >= 2:
        gpr_h = exact_paired_domination(g).cardinality
        gpr = exact_paired_domination(red.gadget).cardinality
        line += f" paired: {gpr} vs 2n+gpr(h)={2 * g.n + gpr_h}"
    return line


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sources", nargs="+", choices=sorted(SOURCES), default=CheckConfig().sources)
    ap.add_argument("--kinds", nargs="+", choices=KINDS, default=list(KINDS))
    ap.add_argument("--slack", type=int, default=2)
    args = ap.parse_args()
    cfg = CheckConfig(args.sources, args.kinds, args.slack)
    for kind in cfg.kinds:
        for name in cfg.sources:
            print(check(kind, name, SOURCES[name](), cfg))


if __name__ == "__main__":
    main()
