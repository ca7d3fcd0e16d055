"""Command-line front end: run, compare, generate, reproduce.

Exit codes: 0 success, 1 invariant failure or table mismatch, 2 usage/input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from schedsim.algorithms import DEFAULT_FACTOR, run_algorithm
from schedsim.core import Algorithm, Schedule
from schedsim.gantt import MIN_WIDTH, render_gantt
from schedsim.metrics import InvalidSchedule, MetricsReport, compare, compute_metrics
from schedsim.reproduce import TABLES, render_reproduction, reproduce
from schedsim.workload import (
    DEFAULT_BURST_MAX,
    DEFAULT_BURST_MIN,
    GeneratorConfig,
    Workload,
    WorkloadError,
    generate_workload,
    parse_workload,
    serialize_workload,
)

FORMAT_ENV = "SCHEDSIM_FORMAT"
FORMATS = ("table", "csv", "json")
ALGO_CHOICES = ("fcfs", "sjf", "rr", "omdrrs", "all")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad flags or bad input; maps to exit code 2."""


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "table").strip().lower()
    return fmt if fmt in FORMATS else "table"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schedsim",
        description="Deterministic CPU scheduling simulator (FCFS, SJF, RR, OMDRRS).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(p: argparse.ArgumentParser, with_algo: bool) -> None:
        if with_algo:
            p.add_argument("--algo", choices=ALGO_CHOICES, required=True, type=str.lower,
                           help="algorithm to run, or 'all' for a side-by-side comparison")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--workload", metavar="PATH", help="workload file (CSV or JSON)")
        src.add_argument("--generate", metavar="SPEC",
                         help="generate a workload, e.g. count=10,min=4,max=30,seed=7")
        p.add_argument("--input-format", choices=("csv", "json"),
                       help="workload file format (default: from the file extension)")
        p.add_argument("--q", type=int, help="Round Robin quantum")
        p.add_argument("--k", type=int, help="OMDRRS initial quantum")
        p.add_argument("--F", type=int, default=DEFAULT_FACTOR, dest="F",
                       help=f"OMDRRS quantum growth factor (default {DEFAULT_FACTOR})")
        p.add_argument("--quantum-seed", type=int,
                       help="draw missing q/k uniformly from [2, max burst] with this seed")
        p.add_argument("--format", choices=FORMATS, default=None,
                       help=f"output format (default: ${FORMAT_ENV} or table)")
        p.add_argument("--gantt", action="store_true", help="include a Gantt chart")
        p.add_argument("--width", type=int, default=72, help="Gantt chart width in columns")

    add_run_flags(sub.add_parser("run", help="run one algorithm or all of them"), with_algo=True)
    add_run_flags(sub.add_parser("compare", help="run all four algorithms (run --algo all)"),
                  with_algo=False)

    gen = sub.add_parser("generate", help="write a seeded random workload file")
    gen.add_argument("--count", type=int, required=True)
    gen.add_argument("--min", type=int, default=DEFAULT_BURST_MIN, dest="burst_min")
    gen.add_argument("--max", type=int, default=DEFAULT_BURST_MAX, dest="burst_max")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default="-", help="output path ('-' for stdout)")
    gen.add_argument("--format", choices=("csv", "json"), default="csv")

    rep = sub.add_parser("reproduce", help="rebuild a published table and diff it")
    rep.add_argument("table", type=str.upper, choices=(*TABLES, "ALL"))
    return parser


def _load_workload(args: argparse.Namespace) -> Workload:
    if args.generate is not None:
        return generate_workload(GeneratorConfig.parse(args.generate))
    path = Path(args.workload)
    fmt = args.input_format or ("json" if path.suffix.lower() == ".json" else "csv")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read workload {path}: {exc.strerror or exc}") from None
    try:
        return parse_workload(text, fmt)
    except WorkloadError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _resolve_params(args: argparse.Namespace, algos: list[Algorithm], workload: Workload) -> dict:
    q, k, F = args.q, args.k, args.F
    if args.quantum_seed is not None:
        rng = random.Random(args.quantum_seed)
        hi = max(2, max(workload.bursts))
        # q is drawn before k so a given seed always yields the same pair
        drawn_q, drawn_k = rng.randint(2, hi), rng.randint(2, hi)
        q = drawn_q if q is None else q
        k = drawn_k if k is None else k
    if Algorithm.RR in algos:
        if q is None:
            raise UsageError("--q is required for rr (or pass --quantum-seed)")
        if q < 1:
            raise UsageError(f"--q must be >= 1, got {q}")
    if Algorithm.OMDRRS in algos:
        if k is None:
            raise UsageError("--k is required for omdrrs (or pass --quantum-seed)")
        if k < 1:
            raise UsageError(f"--k must be >= 1, got {k}")
        if F < 2:
            raise UsageError(f"--F must be >= 2, got {F}")
    return {"q": q, "k": k, "F": F}


def _render_csv(workload: Workload, reports: list[MetricsReport]) -> str:
    buf = io.StringIO()
    if workload.seed is not None:
        buf.write(f"# workload: generated seed={workload.seed}\n")
    writer = csv.writer(buf, lineterminator="\n")
    multi = len(reports) > 1
    writer.writerow((["algorithm"] if multi else []) + ["pid", "bt", "tat", "wt"])
    for r in reports:
        for row in r.csv_rows():
            writer.writerow(([r.algorithm] if multi else []) + row)
    buf.write("\n")
    buf.write(compare(reports).to_csv())
    return buf.getvalue()


def _render_json(workload: Workload, reports, schedules, charts) -> str:
    doc = {
        "workload": {
            "origin": workload.origin,
            "seed": workload.seed,
            "fingerprint": workload.fingerprint(),
            "processes": [{"pid": p.pid, "burst": p.burst} for p in workload.processes],
        },
        "reports": [r.to_dict() for r in reports],
        "comparison": compare(reports).to_dict(),
        "schedules": [s.to_dict() for s in schedules],
    }
    if charts:
        doc["gantt"] = charts
    return json.dumps(doc, indent=2) + "\n"


def _render_table(workload: Workload, reports, charts) -> str:
    parts = [f"workload: {workload.describe()} [{workload.fingerprint()}]"]
    for i, r in enumerate(reports):
        parts.append(r.render_table())
        if charts:
            parts.append(charts[i])
    if len(reports) > 1:
        parts.append(compare(reports).render_table())
    return "\n\n".join(parts) + "\n"


def cmd_run(args: argparse.Namespace, out) -> int:
    algos = list(Algorithm) if args.algo == "all" else [Algorithm(args.algo.upper())]
    if args.gantt and args.width < MIN_WIDTH:
        raise UsageError(f"--width must be >= {MIN_WIDTH}, got {args.width}")
    workload = _load_workload(args)
    p = _resolve_params(args, algos, workload)
    schedules: list[Schedule] = [run_algorithm(a, workload, p["q"], p["k"], p["F"]) for a in algos]
    reports = [compute_metrics(workload, s) for s in schedules]
    charts = [render_gantt(s, args.width) for s in schedules] if args.gantt else []

    fmt = args.format or _default_format()
    if fmt == "json":
        out.write(_render_json(workload, reports, schedules, charts))
    elif fmt == "csv":
        out.write(_render_csv(workload, reports))
    else:
        out.write(_render_table(workload, reports, charts))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace, out) -> int:
    try:
        config = GeneratorConfig(args.count, args.burst_min, args.burst_max, args.seed)
    except WorkloadError as exc:
        raise UsageError(str(exc)) from None
    text = serialize_workload(generate_workload(config), args.format)
    if args.out == "-":
        out.write(text)
        print(f"seed: {config.seed}", file=sys.stderr)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}") from None
    out.write(f"wrote {config.count} processes to {args.out} (seed: {config.seed})\n")
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace, out) -> int:
    tables = TABLES if args.table == "ALL" else (args.table,)
    status = EXIT_OK
    blocks = []
    for t in tables:
        rep = reproduce(t)
        blocks.append(render_reproduction(rep))
        if not rep.ok:
            status = EXIT_FAILURE
    out.write("\n\n".join(blocks) + "\n")
    return status


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "compare":
        args.algo = "all"
    handlers = {"run": cmd_run, "compare": cmd_run, "generate": cmd_generate,
                "reproduce": cmd_reproduce}
    try:
        return handlers[args.command](args, out)
    except (UsageError, WorkloadError) as exc:
        print(f"schedsim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidSchedule as exc:
        print(f"schedsim: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
