"""Rebuild the published result tables and diff them cell by cell."""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from functools import lru_cache
from importlib import resources

from schedsim.algorithms import run_fcfs, run_omdrrs, run_rr, run_sjf
from schedsim.metrics import MetricsReport, compare, compute_metrics, round_one_decimal
from schedsim.workload import Workload

TABLES = ("T1", "T2", "T3", "T4")
ALGORITHMS = ("FCFS", "SJF", "RR", "OMDRRS")
_SUMMARY_ROWS = {"CS": "CONTEXT SWITCH", "ATT": "TURNAROUND TIME", "AWT": "WAITING TIME"}


@lru_cache(maxsize=None)
def reference_data() -> dict:
    text = resources.files("schedsim").joinpath("data/reference_tables.json").read_text("utf-8")
    return json.loads(text)


def reference_workload(name: str) -> tuple[Workload, dict[str, int]]:
    """The embedded workload ``table1``/``table2`` and its pinned q, k, F."""
    table_def = reference_data()["workloads"][name]
    return Workload.from_bursts(table_def["bursts"]), {key: table_def[key] for key in ("q", "k", "F")}


def reference_reports(name: str) -> list[MetricsReport]:
    workload, p = reference_workload(name)
    schedules = [
        run_fcfs(workload),
        run_sjf(workload),
        run_rr(workload, p["q"]),
        run_omdrrs(workload, p["k"], p["F"]),
    ]
    return [compute_metrics(workload, s) for s in schedules]


@dataclass(frozen=True)
class Cell:
    table: str
    algorithm: str
    row: str
    field: str
    computed: str
    published: str
    erratum: bool = False

    @property
    def matches(self) -> bool:
        return Decimal(self.computed) == Decimal(self.published)

    def key(self) -> tuple[str, str, str, str]:
        return (self.table, self.algorithm, self.row, self.field)

    def __str__(self) -> str:
        mark = " (known erratum)" if self.erratum else ""
        return (f"{self.table} {self.algorithm} {self.row} {self.field}: "
                f"computed {self.computed} != published {self.published}{mark}")


@dataclass(frozen=True)
class Reproduction:
    table: str
    cells: tuple[Cell, ...]
    reports: tuple[MetricsReport, ...]

    @property
    def diffs(self) -> list[Cell]:
        return [c for c in self.cells if not c.matches]

    @property
    def unexpected(self) -> list[Cell]:
        return [c for c in self.diffs if not c.erratum]

    @property
    def ok(self) -> bool:
        return not self.unexpected


def errata_keys(table: str | None = None) -> set[tuple[str, str, str, str]]:
    return {
        (e["table"], e["algorithm"], e["row"], e["field"])
        for e in reference_data()["errata"]
        if table is None or e["table"] == table
    }


def reproduce(table: str) -> Reproduction:
    table = table.upper()
    if table not in TABLES:
        raise ValueError(f"unknown table {table!r}; choose from {', '.join(TABLES)}")
    table_def = reference_data()["tables"][table]
    reports = reference_reports(table_def["workload"])
    by_algo = dict(zip(ALGORITHMS, reports))
    known = errata_keys(table)
    cells = []
    for algo in ALGORITHMS:
        published = table_def["values"][algo]
        report = by_algo[algo]
        if table_def["kind"] == "per_process":
            for i, m in enumerate(report.per_process):
                for field, got in (("TAT", m.turnaround), ("WT", m.waiting)):
                    key = (table, algo, f"P{m.pid}", field)
                    cells.append(Cell(*key, str(got), str(published[field][i]), key in known))
        else:
            computed = {
                "CS": str(report.context_switches),
                "ATT": round_one_decimal(report.avg_turnaround),
                "AWT": round_one_decimal(report.avg_waiting),
            }
            for field, row in _SUMMARY_ROWS.items():
                key = (table, algo, row, field)
                cells.append(Cell(*key, computed[field], str(published[field]), key in known))
    return Reproduction(table, tuple(cells), tuple(reports))


def render_reproduction(rep: Reproduction) -> str:
    table_def = reference_data()["tables"][rep.table]
    lines = [f"== {rep.table}: {table_def['source']} =="]
    if table_def["kind"] == "per_process":
        header = "PID   BT | " + " | ".join(f"{a:>6} TAT/WT" for a in ALGORITHMS)
        lines.append("computed:")
        lines.append(header)
        for i, m in enumerate(rep.reports[0].per_process):
            vals = " | ".join(
                f"{r.per_process[i].turnaround:>7}/{r.per_process[i].waiting:<5}" for r in rep.reports
            )
            lines.append(f"P{m.pid:<3} {m.burst:>3} | {vals}".rstrip())
        lines.append("published:")
        lines.append(header)
        for i, m in enumerate(rep.reports[0].per_process):
            vals = " | ".join(
                f"{table_def['values'][a]['TAT'][i]:>7}/{table_def['values'][a]['WT'][i]:<5}" for a in ALGORITHMS
            )
            lines.append(f"P{m.pid:<3} {m.burst:>3} | {vals}".rstrip())
    else:
        lines.append("computed:")
        lines.append(compare(list(rep.reports)).render_table())
        lines.append("published:")
        for field, row in _SUMMARY_ROWS.items():
            vals = "  ".join(f"{str(table_def['values'][a][field]):>7}" for a in ALGORITHMS)
            lines.append(f"{row:<16} {vals}")
    lines.append(f"diff ({len(rep.diffs)} cells, {len(rep.unexpected)} unexpected):")
    lines.extend(f"  {c}" for c in rep.diffs)
    if not rep.diffs:
        lines.append("  none")
    return "\n".join(lines)
