"""Empirical runtime of the interval and tree solvers against n + m.

Prints a table and the least-squares slope of log(time) on log(n + m); a
slope near 1 is consistent with linear scaling.
"""

from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass, field

from semipaired.generators import GenSpec, generate
from semipaired.interval import LeftEndOrdering, interval_graph_from_model, semi_paired_dom_interval
from semipaired.tree import semi_paired_dom_tree


@dataclass
class ScalingConfig:
    sizes: list[int] = field(default_factory=lambda: [250, 500, 1000, 2000, 4000, 8000])
    repeats: int = 3
    seed: int = 0


def _best_time(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def slope(xs: list[float], ys: list[float]) -> float:
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)


def run(cfg: ScalingConfig) -> None:
    for family in ("random-interval", "random-tree"):
        sizes, times = [], []
        print(f"{family}")
        print(f"{'n':>7}{'m':>9}{'seconds':>11}")
        for n in cfg.sizes:
            inst = generate(GenSpec(family, n, cfg.seed))
            if family == "random-interval":
                g = interval_graph_from_model(inst)
                order = LeftEndOrdering.identity(g.n)
                dt = _best_time(lambda: semi_paired_dom_interval(g, order), cfg.repeats)
            else:
                g = inst
                dt = _best_time(lambda: semi_paired_dom_tree(g), cfg.repeats)
            sizes.append(g.n + g.m)
            times.append(dt)
            print(f"{g.n:>7}{g.m:>9}{dt:>11.4f}")
        print(f"log-log slope vs n+m: {slope(sizes, times):.2f}\n")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=ScalingConfig().sizes)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    run(ScalingConfig(args.sizes, args.repeats, args.seed))


if __name__ == "__main__":
    main()
