"""Print the step-by-step sweep on the pinned 16-interval worked example."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from semipaired.exact import exact_semi_pd
from semipaired.formats import parse_intervals
from semipaired.interval import LeftEndOrdering, compute_indices, interval_graph_from_model, interval_trace

DEFAULT_MODEL = Path(__file__).resolve().parent.parent / "tests" / "data" / "worked_example_intervals.txt"


@dataclass
class TraceConfig:
    model: Path = DEFAULT_MODEL
    show_indices: bool = True


def run(cfg: TraceConfig) -> None:
    model = parse_intervals(cfg.model.read_text())
    g = interval_graph_from_model(model)
    ordering = LeftEndOrdering.identity(g.n)
    if cfg.show_indices:
        idx = compute_indices(g, ordering)
        print(f"{'v':>3} {'interval':>10} {'F':>3} {'L':>3}")
        ivs = sorted(model.intervals)
        for i in range(1, g.n + 1):
            a, b = ivs[i - 1]
            print(f"{i:>3} {f'[{a},{b}]':>10} {idx.F[i]:>3} {idx.L[i]:>3}")
        print()
    sol, steps = interval_trace(g, ordering)
    for step in steps:
        print(step.describe())
    print(f"D = {{{', '.join(f'v{v}' for v in sol.vertices)}}}  (|D| = {sol.cardinality})")
    print(f"exact optimum: {exact_semi_pd(g).cardinality}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--model", type=Path, default=DEFAULT_MODEL)
    ap.add_argument("--no-indices", action="store_true")
    args = ap.parse_args()
    run(TraceConfig(args.model, not args.no_indices))


if __name__ == "__main__":
    main()
