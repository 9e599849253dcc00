"""Seeded benchmark corpora and the oracle-comparison report behind ``semipaired bench``."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .exact import domination_chain, exact_semi_pd
from .generators import GenSpec, generate
from .graph import Graph
from .greedy import approx_semi_paired, ratio_certificate
from .interval import IntervalModel, LeftEndOrdering, interval_graph_from_model, semi_paired_dom_interval
from .tree import semi_paired_dom_tree
from .verify import verify_solution

GNP_DENSITIES = (0.25, 0.4, 0.55, 0.7)
CHAIN_MAX_N = 10


@dataclass(frozen=True)
class BenchConfig:
    count: int = 500
    seed: int = 0
    interval_max_n: int = 13
    tree_max_n: int = 14
    greedy_max_n: int = 12
    threads: int = 1

    @classmethod
    def from_env(cls, **overrides) -> BenchConfig:
        threads = int(os.environ.get("SEMIPAIR_THREADS", "1") or 1)
        return cls(threads=max(1, threads), **overrides)


def interval_corpus(count: int, seed: int = 0, max_n: int = 13) -> list[GenSpec]:
    span = max_n - 1
    return [GenSpec("random-interval", 2 + s % span, seed + s) for s in range(count)]


def tree_corpus(count: int, seed: int = 0, max_n: int = 14) -> list[GenSpec]:
    span = max_n - 1
    return [GenSpec("random-tree", 2 + s % span, seed + s) for s in range(count)]


def greedy_corpus(count: int, seed: int = 0, max_n: int = 12) -> list[GenSpec]:
    span = max_n - 1
    return [
        GenSpec("gnp", 2 + s % span, seed + s, p=GNP_DENSITIES[s % len(GNP_DENSITIES)])
        for s in range(count)
    ]


@dataclass(frozen=True)
class InstanceResult:
    corpus: str
    spec: str
    n: int
    m: int
    size: int
    optimum: int
    valid: bool
    log_bound: float | None = None
    chain: tuple[int, int, int] | None = None

    @property
    def ratio(self) -> float:
        return self.size / self.optimum


def _as_graph(inst: Graph | IntervalModel) -> Graph:
    return interval_graph_from_model(inst) if isinstance(inst, IntervalModel) else inst


def run_instance(corpus: str, spec: GenSpec) -> InstanceResult:
    g = _as_graph(generate(spec))
    log_bound = None
    if corpus == "interval":
        sol = semi_paired_dom_interval(g, LeftEndOrdering.identity(g.n))
    elif corpus == "tree":
        sol = semi_paired_dom_tree(g)
    elif corpus == "greedy":
        trace = approx_semi_paired(g)
        sol = trace.solution
        log_bound = ratio_certificate(g, trace).log_bound
    else:
        raise ValueError(f"unknown corpus {corpus!r}")
    opt = exact_semi_pd(g).cardinality
    chain = domination_chain(g) if g.n <= CHAIN_MAX_N else None
    return InstanceResult(
        corpus, spec.describe(), g.n, g.m, sol.cardinality, opt,
        bool(verify_solution(g, sol)), log_bound, chain,
    )


def _run_star(job: tuple[str, GenSpec]) -> InstanceResult:
    return run_instance(*job)


def manifest(cfg: BenchConfig) -> list[tuple[str, GenSpec]]:
    jobs = [("interval", s) for s in interval_corpus(cfg.count, cfg.seed, cfg.interval_max_n)]
    jobs += [("tree", s) for s in tree_corpus(cfg.count, cfg.seed, cfg.tree_max_n)]
    jobs += [("greedy", s) for s in greedy_corpus(cfg.count, cfg.seed, cfg.greedy_max_n)]
    return jobs


def run_bench(cfg: BenchConfig) -> list[InstanceResult]:
    jobs = manifest(cfg)
    if cfg.threads <= 1:
        return [_run_star(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        # map preserves manifest order regardless of completion order
        return list(pool.map(_run_star, jobs, chunksize=16))


def summarize(results: list[InstanceResult]) -> dict:
    out: dict = {"corpora": {}, "chain": {}}
    for corpus in ("interval", "tree", "greedy"):
        rows = [r for r in results if r.corpus == corpus]
        if not rows:
            continue
        ratios = [r.ratio for r in rows]
        entry = {
            "instances": len(rows),
            "valid": sum(r.valid for r in rows),
            "optimal": sum(r.size == r.optimum for r in rows),
            "max_ratio": round(max(ratios), 6),
            "mean_ratio": round(sum(ratios) / len(ratios), 6),
        }
        if corpus == "greedy":
            entry["within_bound"] = sum(r.ratio <= r.log_bound for r in rows)
        out["corpora"][corpus] = entry
    chains = [r.chain for r in results if r.chain is not None]
    out["chain"] = {
        "graphs": len(chains),
        "holds": sum(a <= b <= c for a, b, c in chains),
    }
    return out


def format_report(summary: dict) -> str:
    lines = [f"{'corpus':<10}{'instances':>10}{'valid':>8}{'optimal':>9}{'max_ratio':>11}{'mean_ratio':>12}{'in_bound':>10}"]
    for corpus, e in summary["corpora"].items():
        in_bound = str(e["within_bound"]) if "within_bound" in e else "-"
        lines.append(
            f"{corpus:<10}{e['instances']:>10}{e['valid']:>8}{e['optimal']:>9}"
            f"{e['max_ratio']:>11.4f}{e['mean_ratio']:>12.4f}{in_bound:>10}"
        )
    ch = summary["chain"]
    lines.append(f"chain gamma <= gamma_pr2 <= gamma_pr (n <= {CHAIN_MAX_N}): {ch['holds']}/{ch['graphs']}")
    return "\n".join(lines) + "\n"
