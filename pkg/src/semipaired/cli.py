"""Command-line entry point: ``semipaired <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import formats
from .bench import BenchConfig, format_report, run_bench, summarize
from .errors import BoundExceeded, SemipairedError
from .exact import domination_chain, exact_semi_pd
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, is_tree
from .greedy import approx_semi_paired, ratio_certificate
from .interval import IntervalModel, LeftEndOrdering, interval_graph_from_model, interval_trace
from .reductions import KINDS, REDUCTIONS, extract_dominating_set, hardness_from_files
from .tree import semi_paired_dom_tree
from .verify import SemipairedSolution, verify_solution

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

# --verify-small runs the exhaustive oracle only up to this many vertices
SMALL_N = 20


class UsageError(SemipairedError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which is reserved for failed checks
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class Report:
    """Collects text lines and a JSON mirror of one command's output."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.data: dict = {"command": command}

    def line(self, text: str) -> None:
        self.lines.append(text)

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.data, sort_keys=True) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str) -> tuple[str, Graph, IntervalModel | None]:
    text = _read(path)
    if formats.detect_format(text) == "intervals":
        model = formats.parse_intervals(text)
        return "intervals", interval_graph_from_model(model), model
    return "edgelist", formats.parse_edgelist(text), None


def _pairs_text(sol: SemipairedSolution) -> str:
    return " ".join(f"({u},{v})" for u, v in sol.pairs)


def _solution_block(sol: SemipairedSolution) -> list[str]:
    return formats.emit_solution(sol).splitlines()


def cmd_solve(args, rep: Report) -> int:
    fmt, g, model = _load_instance(args.file)
    algo = args.algo
    if algo == "auto":
        algo = "interval" if fmt == "intervals" else "tree" if is_tree(g) else "greedy"
    rep.data.update(algorithm=algo, n=g.n, m=g.m)
    rep.line(f"algorithm: {algo}")
    if fmt == "intervals":
        rep.line("vertex ids follow the left-end ordering")

    if algo == "exact":
        try:
            res = exact_semi_pd(g, upper_bound=args.bound)
        except BoundExceeded as exc:
            rep.data.update(status="bound-exceeded", bound=exc.bound)
            rep.line(f"bound-exceeded: no semipaired dominating set of size <= {exc.bound}")
            return EXIT_OK
        sol = res.witness
        rep.data["explored"] = res.explored
    elif algo == "interval":
        if fmt == "intervals":
            ordering = LeftEndOrdering.identity(g.n)
        elif args.order:
            ordering = LeftEndOrdering(tuple(int(x) for x in args.order.split(",")))
        else:
            raise UsageError("interval algorithm needs an interval file or --order for an edge list")
        sol, steps = interval_trace(g, ordering)
        rep.data["trace"] = [s.describe() for s in steps]
        for s in steps:
            rep.line(f"step {s.describe()}")
    elif algo == "tree":
        sol = semi_paired_dom_tree(g)
    elif algo == "greedy":
        trace = approx_semi_paired(g)
        sol = trace.solution
        rep.data["rounds"] = [[r.pair[0], r.pair[1], r.gain] for r in trace.rounds]
        for r in trace.rounds:
            rep.line(f"round {r.pair[0]} {r.pair[1]} {r.gain}")
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown algorithm {algo}")

    verdict = verify_solution(g, sol)
    rep.data.update(cardinality=sol.cardinality, pairs=[list(p) for p in sol.pairs], valid=verdict.valid)
    rep.line(f"γpr2 = {sol.cardinality}; pairs: {_pairs_text(sol)}")

    exact_card = None
    if args.verify_small and algo != "exact" and g.n <= SMALL_N:
        exact_card = exact_semi_pd(g).cardinality
        rep.data["exact"] = exact_card
        rep.line(f"exact γpr2 = {exact_card}")

    if algo == "greedy":
        opt = None
        if exact_card is not None:
            opt = exact_semi_pd(g)
        cert = ratio_certificate(g, trace, opt)
        rep.data["certificate"] = {
            "delta": cert.delta,
            "harmonic_bound": round(cert.harmonic_bound, 6),
            "log_bound": round(cert.log_bound, 6),
            "achieved": None if cert.achieved is None else round(cert.achieved, 6),
        }
        achieved = "" if cert.achieved is None else f" achieved={cert.achieved:.6f}"
        rep.line(
            f"ratio certificate: Δ={cert.delta} H({2 * cert.delta + 2})={cert.harmonic_bound:.6f} "
            f"1+ln({2 * cert.delta + 2})={cert.log_bound:.6f}{achieved}"
        )
        rep.line("solution:")
        rep.lines += _solution_block(sol)

    if not verdict:
        rep.line(verdict.describe())
        return EXIT_VERIFY
    if exact_card is not None and sol.cardinality < exact_card:
        rep.line("reported answer is smaller than the exact optimum")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args, rep: Report) -> int:
    _, g, _ = _load_instance(args.file)
    sol = formats.parse_solution(_read(args.solution))
    verdict = verify_solution(g, sol)
    rep.data.update(valid=verdict.valid, reason=verdict.failure_reason,
                    witness=verdict.witness, cardinality=sol.cardinality)
    rep.line(verdict.describe())
    return EXIT_OK if verdict else EXIT_VERIFY


def cmd_check_chain(args, rep: Report) -> int:
    _, g, _ = _load_instance(args.file)
    gamma, gpr2, gpr = domination_chain(g)
    holds = gamma <= gpr2 <= gpr
    rep.data.update(gamma=gamma, gamma_pr2=gpr2, gamma_pr=gpr, holds=holds)
    rep.line(f"γ = {gamma}, γpr2 = {gpr2}, γpr = {gpr}")
    rep.line(f"{gamma} ≤ {gpr2} ≤ {gpr}" if holds else f"chain violated: {gamma}, {gpr2}, {gpr}")
    return EXIT_OK if holds else EXIT_VERIFY


def cmd_reduce(args, rep: Report) -> int:
    _, g, _ = _load_instance(args.file)
    red = REDUCTIONS[args.kind](g)
    edgelist = formats.emit_edgelist(red.gadget)
    labels = formats.emit_labels(red.labels)
    rep.data.update(kind=red.kind, vertices=red.gadget.n, edges=red.gadget.m,
                    source_n=red.source_n, source_m=red.source_m, identity=red.identity)
    if args.out:
        out = Path(args.out)
        out.write_text(edgelist)
        sidecar = out.with_suffix(".labels")
        sidecar.write_text(labels)
        rep.data.update(gadget_file=str(out), labels_file=str(sidecar))
        rep.line(f"{red.kind}: {red.gadget.n} vertices, {red.gadget.m} edges -> {out}, {sidecar}")
        rep.line(f"identity: {red.identity}")
    else:
        rep.data.update(gadget=edgelist, labels=list(red.labels))
        rep.lines += edgelist.splitlines()
        rep.lines += [f"# label {line}" for line in labels.splitlines()]
    return EXIT_OK


def cmd_extract(args, rep: Report) -> int:
    gadget = formats.parse_edgelist(_read(args.gadget))
    labels = formats.parse_labels(_read(args.labels))
    sol = formats.parse_solution(_read(args.solution))
    red = hardness_from_files(gadget, labels)
    verdict = verify_solution(gadget, sol)
    if not verdict:
        rep.data.update(valid=False, reason=verdict.failure_reason)
        rep.line(f"solution rejected: {verdict.describe()}")
        return EXIT_VERIFY
    ds = extract_dominating_set(red, sol)
    rep.data.update(dominating_set=list(ds), size=len(ds), semipaired_size=sol.cardinality)
    rep.line(f"dominating set: {' '.join(map(str, ds))}")
    rep.line(f"size {len(ds)} <= {sol.cardinality}/2")
    return EXIT_OK


def cmd_gen(args, rep: Report) -> int:
    inner = GenSpec(args.inner, args.inner_n or args.n, args.seed, args.p) if args.inner else None
    spec = GenSpec(args.family, args.n, args.seed, args.p, inner)
    inst = generate(spec)
    text = formats.emit_intervals(inst) if isinstance(inst, IntervalModel) else formats.emit_edgelist(inst)
    rep.data.update(spec=spec.describe(), instance=text)
    if args.out:
        Path(args.out).write_text(text)
        rep.line(f"{spec.describe()} -> {args.out}")
    else:
        rep.lines += text.splitlines()
    return EXIT_OK


def cmd_bench(args, rep: Report) -> int:
    cfg = BenchConfig.from_env()
    cfg = replace(cfg, count=args.count, seed=args.seed)
    summary = summarize(run_bench(cfg))
    rep.data.update(summary)
    rep.lines += format_report(summary).splitlines()
    ok = all(
        e["valid"] == e["instances"] and (c == "greedy" or e["optimal"] == e["instances"])
        for c, e in summary["corpora"].items()
    ) and summary["chain"]["holds"] == summary["chain"]["graphs"]
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object instead of text")

    p = _Parser(prog="semipaired", description="Semipaired domination solvers and reductions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", parents=[common], help="compute a semipaired dominating set")
    s.add_argument("file")
    s.add_argument("--algo", choices=("exact", "interval", "tree", "greedy", "auto"), default="auto")
    s.add_argument("--bound", type=int, help="cardinality bound for --algo exact")
    s.add_argument("--order", help="comma-separated left-end ordering for an edge-list input")
    s.add_argument("--verify-small", action="store_true",
                   help=f"cross-check against the exact oracle when n <= {SMALL_N}")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", parents=[common], help="check a solution file")
    v.add_argument("file")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", parents=[common], help="build a reduction gadget")
    r.add_argument("kind", choices=KINDS)
    r.add_argument("file")
    r.add_argument("--out", help="write the gadget here and labels next to it (.labels)")
    r.set_defaults(func=cmd_reduce)

    e = sub.add_parser("extract-ds", parents=[common], help="dominating set from a hardness-gadget solution")
    e.add_argument("gadget")
    e.add_argument("labels")
    e.add_argument("solution")
    e.set_defaults(func=cmd_extract)

    gsp = sub.add_parser("gen", parents=[common], help="generate a seeded instance")
    gsp.add_argument("family", choices=FAMILIES)
    gsp.add_argument("--n", type=int, required=True)
    gsp.add_argument("--seed", type=int, default=0)
    gsp.add_argument("--p", type=float, default=0.5)
    gsp.add_argument("--inner", choices=[f for f in FAMILIES if f != "gp4"], help="base family for gp4")
    gsp.add_argument("--inner-n", type=int)
    gsp.add_argument("--out")
    gsp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", parents=[common], help="run the seeded oracle-comparison corpora")
    b.add_argument("--count", type=int, default=500, help="instances per corpus")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("check-chain", parents=[common], help="print gamma <= gamma_pr2 <= gamma_pr")
    c.add_argument("file")
    c.set_defaults(func=cmd_check_chain)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    try:
        code = args.func(args, rep)
    except (SemipairedError, ValueError) as exc:
        if args.json:
            print(json.dumps({"command": args.command, "error": str(exc)}, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(rep.render(args.json))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
