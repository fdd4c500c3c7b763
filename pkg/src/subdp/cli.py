"""Command-line front end.

Every subcommand prints ``key: value`` lines and can also write the same
values as a JSON report with ``--report PATH`` (``-`` for stdout).
Exit codes: 0 success, 1 refusal or no result, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any

import numpy as np

from subdp.bench import bench_asymptotics, format_table
from subdp.bounds import capacity_bracket
from subdp.codec import CodecConsistencyError, build_codec, simulate
from subdp.exact import DEFAULT_EXACT_LIMIT, CapacityReport, SizeLimitExceeded, exact_capacity
from subdp.fileio import (
    format_codec,
    format_coloring,
    parse_codec,
    parse_coloring,
    read_graph,
    write_report,
)
from subdp.graph import GraphInputError, avg_out_degree, degree_stats, full_selection, induced_subgraph, is_bidirectional
from subdp.lll import approx_capacity, moser_tardos
from subdp.peel import max_core, peel_half_average

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    return str(value)


def emit(report: dict[str, Any], args: argparse.Namespace) -> None:
    for key, value in report.items():
        if isinstance(value, dict):
            continue
        print(f"{key}: {_fmt(value)}")
    if getattr(args, "report", None):
        write_report(report, args.report)


def _capacity_fields(rep: CapacityReport) -> dict[str, Any]:
    fields: dict[str, Any] = {
        "capacity": rep.value,
        "exact": rep.exact,
        "lower": rep.bracket.lower,
        "upper": rep.bracket.upper,
        "witness_nodes": rep.witness_subgraph.sorted_nodes(),
        "witness_colors": [rep.witness_coloring[v] for v in rep.witness_subgraph.sorted_nodes()],
    }
    if not rep.exact:
        fields["target"] = rep.target
        fields["below_target"] = rep.below_target
        fields["rounds"] = rep.resample_log.rounds if rep.resample_log else 0
    return fields


def cmd_bounds(args) -> int:
    g = read_graph(args.graph)
    b = capacity_bracket(g)
    report: dict[str, Any] = {
        "nodes": g.n,
        "arcs": g.num_arcs,
        "bidirectional": is_bidirectional(g),
        "avg_out_degree": str(avg_out_degree(g)),
    }
    for key, value in b.components.items():
        side, name = key.split(":")
        report[f"{side}({name})"] = value
    report.update(lower=b.lower, lower_witness=b.lower_witness, upper=b.upper, upper_witness=b.upper_witness)
    emit(report, args)
    return EXIT_OK


def cmd_exact(args) -> int:
    g = read_graph(args.graph)
    try:
        rep = exact_capacity(g, limit=args.limit)
    except SizeLimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    emit(_capacity_fields(rep), args)
    if args.coloring_out:
        Path(args.coloring_out).write_text(format_coloring(rep.witness_coloring))
    return EXIT_OK


def cmd_approx(args) -> int:
    g = read_graph(args.graph)
    rep = approx_capacity(g, seed=args.seed, retries=args.retries)
    emit(_capacity_fields(rep), args)
    if args.coloring_out:
        Path(args.coloring_out).write_text(format_coloring(rep.witness_coloring))
    return EXIT_OK


def cmd_peel(args) -> int:
    g = read_graph(args.graph)
    trace = peel_half_average(g)
    core = max_core(g)
    term = trace.terminal
    report = {
        "avg_out_degree": str(avg_out_degree(g)),
        "removed": [s.node for s in trace.removed],
        "terminal_nodes": term.sorted_nodes(),
        "terminal_min_out": degree_stats(term).min_out,
        "degenerate": trace.degenerate,
        "core_k": core.k,
        "core_nodes": core.subgraph.sorted_nodes(),
    }
    emit(report, args)
    return EXIT_OK


def cmd_color(args) -> int:
    g = read_graph(args.graph)
    sel = max_core(g).subgraph if args.core else full_selection(g)
    col, log = moser_tardos(sel, args.colors, seed=args.seed, max_rounds=args.max_rounds, record_history=False)
    report = {"colors": args.colors, "succeeded": log.succeeded, "rounds": log.rounds, "seed": log.seed}
    emit(report, args)
    if col is None:
        return EXIT_REFUSED
    text = format_coloring(col)
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_codec(args) -> int:
    g = read_graph(args.graph)
    col = parse_coloring(Path(args.coloring).read_text())
    codec = build_codec(induced_subgraph(g, col.domain), col)
    text = format_codec(codec)
    if args.output:
        Path(args.output).write_text(text)
        emit({"states": len(codec.states), "messages": codec.num_messages}, args)
    else:
        print(text, end="")
    return EXIT_OK


def _messages(spec: list[str], num_messages: int, seed: int) -> list[int]:
    if spec[0] == "random":
        if len(spec) != 2:
            raise GraphInputError("use '--messages random N'")
        count = int(spec[1])
        rng = np.random.default_rng(seed)
        return rng.integers(1, num_messages + 1, size=count).tolist()
    if len(spec) != 1:
        raise GraphInputError("use '--messages FILE' or '--messages random N'")
    try:
        return [int(tok) for tok in Path(spec[0]).read_text().split()]
    except ValueError as exc:
        raise GraphInputError(f"bad message file: {exc}") from None


def cmd_simulate(args) -> int:
    codec = parse_codec(Path(args.codec).read_text())
    if args.graph:
        codec = replace(codec, subgraph=induced_subgraph(read_graph(args.graph), codec.states))
    messages = _messages(args.messages, codec.num_messages, args.seed)
    traj = simulate(codec, args.start, messages)
    report: dict[str, Any] = {
        "steps": len(traj.steps),
        "read_errors": traj.read_errors,
        "final_state": traj.states[-1],
        "checked_legality": codec.subgraph is not None,
    }
    if args.trace:
        report["states"] = traj.states
    emit(report, args)
    return EXIT_OK


def cmd_bench(args) -> int:
    n_list = [int(x) for x in args.n_list.split(",") if x]
    rows = bench_asymptotics(n_list, args.seeds, mode=args.mode, alpha=args.alpha, removed=args.removed, jobs=args.jobs)
    print(format_table(rows))
    if args.report:
        write_report({"mode": args.mode, "alpha": args.alpha, "seeds": args.seeds, "rows": [r.as_dict() for r in rows]}, args.report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subdp", description="Writing capacity of state-transition graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("graph", help="graph file")
        p.add_argument("--report", help="write a JSON report here ('-' for stdout)")
        p.set_defaults(func=func)
        return p

    add("bounds", cmd_bounds, "closed-form capacity bracket")

    p = add("exact", cmd_exact, "exact capacity by search")
    p.add_argument("--limit", type=int, default=DEFAULT_EXACT_LIMIT, help="refuse graphs with more nodes")
    p.add_argument("--coloring-out", help="write the witness coloring here")

    p = add("approx", cmd_approx, "core + LLL resampling approximation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=8)
    p.add_argument("--coloring-out", help="write the witness coloring here")

    add("peel", cmd_peel, "half-average peeling and max core")

    p = add("color", cmd_color, "resampling search for a valid coloring")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=None)
    p.add_argument("--core", action="store_true", help="color the max core instead of the whole graph")
    p.add_argument("-o", "--output", help="coloring file (default stdout)")

    p = add("codec", cmd_codec, "build encoder/decoder tables from a coloring")
    p.add_argument("--coloring", required=True)
    p.add_argument("-o", "--output", help="codec file (default stdout)")

    p = add("simulate", cmd_simulate, "write/read session on a codec", graph=False)
    p.add_argument("codec", help="codec file")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--messages", nargs="+", required=True, metavar="FILE | random N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph", help="graph file, enables transition legality checks")
    p.add_argument("--trace", action="store_true", help="include the state sequence")

    p = add("bench", cmd_bench, "asymptotic trend table", graph=False)
    p.add_argument("--n-list", required=True, help="comma-separated node counts")
    p.add_argument("--alpha", type=float, default=0.25)
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--mode", choices=("dense", "near-complete"), default="dense")
    p.add_argument("--removed", type=int, default=None, help="edges removed from K_n (near-complete)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CodecConsistencyError as exc:
        print(f"codec error: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
