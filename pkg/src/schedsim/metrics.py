"""Turnaround / waiting time, context switches, and algorithm comparison."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from schedsim.core import Schedule, dispatch_count, validate_schedule
from schedsim.workload import Workload

Number = Union[int, Fraction]

CRITERIA = ("CONTEXT SWITCH", "TURNAROUND TIME", "WAITING TIME")


class InvalidSchedule(ValueError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class MixedWorkloads(ValueError):
    pass


def round_one_decimal(value: Number) -> str:
    """Render a non-negative rational to one decimal place, rounding half up."""
    value = Fraction(value)
    if value < 0:
        return "-" + round_one_decimal(-value)
    tenths = (value.numerator * 20 + value.denominator) // (2 * value.denominator)
    return f"{tenths // 10}.{tenths % 10}"


@dataclass(frozen=True)
class ProcessMetrics:
    pid: int
    burst: int
    turnaround: int
    waiting: int


@dataclass(frozen=True)
class MetricsReport:
    algorithm: str
    params: dict[str, int]
    per_process: tuple[ProcessMetrics, ...]
    avg_turnaround: Fraction
    avg_waiting: Fraction
    context_switches: int
    workload_fingerprint: str
    workload_seed: int | None = None

    def process(self, pid: int) -> ProcessMetrics:
        for m in self.per_process:
            if m.pid == pid:
                return m
        raise KeyError(pid)

    @property
    def label(self) -> str:
        if not self.params:
            return self.algorithm
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.algorithm}({args})"

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "params": dict(self.params),
            "workload": {"fingerprint": self.workload_fingerprint, "seed": self.workload_seed},
            "per_process": [
                {"pid": m.pid, "burst": m.burst, "turnaround": m.turnaround, "waiting": m.waiting}
                for m in self.per_process
            ],
            "avg_turnaround": float(round_one_decimal(self.avg_turnaround)),
            "avg_waiting": float(round_one_decimal(self.avg_waiting)),
            "avg_turnaround_exact": str(self.avg_turnaround),
            "avg_waiting_exact": str(self.avg_waiting),
            "context_switches": self.context_switches,
        }

    def csv_rows(self) -> list[list[object]]:
        return [[m.pid, m.burst, m.turnaround, m.waiting] for m in self.per_process]

    def render_table(self) -> str:
        lines = [f"{self.label}"]
        lines.append(f"{'PID':>5} {'BT':>6} {'TAT':>6} {'WT':>6}")
        for m in self.per_process:
            lines.append(f"{'P' + str(m.pid):>5} {m.burst:>6} {m.turnaround:>6} {m.waiting:>6}")
        lines.append(f"ATT {round_one_decimal(self.avg_turnaround)}  "
                     f"AWT {round_one_decimal(self.avg_waiting)}  CS {self.context_switches}")
        return "\n".join(lines)


def compute_metrics(workload: Workload, schedule: Schedule) -> MetricsReport:
    """Per-process TAT/WT (arrival 0) plus exact averages and the dispatch count.

    Raises InvalidSchedule if the schedule does not fit the workload.
    """
    report = validate_schedule(workload, schedule)
    if not report.ok:
        raise InvalidSchedule(report.violations)
    per = []
    for p in sorted(workload.processes, key=lambda p: p.pid):
        tat = schedule.completions[p.pid]
        per.append(ProcessMetrics(p.pid, p.burst, tat, tat - p.burst))
    n = len(per)
    return MetricsReport(
        algorithm=schedule.algorithm.value,
        params=dict(schedule.params),
        per_process=tuple(per),
        avg_turnaround=Fraction(sum(m.turnaround for m in per), n),
        avg_waiting=Fraction(sum(m.waiting for m in per), n),
        context_switches=dispatch_count(schedule),
        workload_fingerprint=workload.fingerprint(),
        workload_seed=workload.seed,
    )


@dataclass(frozen=True)
class Comparison:
    """Criteria x algorithms matrix; ``minima[row]`` holds the best column indices."""

    columns: tuple[str, ...]
    rows: dict[str, tuple[Number, ...]]
    minima: dict[str, frozenset[int]]

    def value(self, criterion: str, column: str) -> Number:
        return self.rows[criterion][self.columns.index(column)]

    def render_table(self) -> str:
        cells = [["SCH. CRITERIA", *self.columns]]
        for crit in CRITERIA:
            row = [crit]
            for i, v in enumerate(self.rows[crit]):
                text = str(v) if isinstance(v, int) else round_one_decimal(v)
                row.append(text + ("*" if i in self.minima[crit] else ""))
            cells.append(row)
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        out = []
        for r in cells:
            out.append("  ".join(c.ljust(w) if j == 0 else c.rjust(w)
                                 for j, (c, w) in enumerate(zip(r, widths))).rstrip())
        out.append("(* = best in row)")
        return "\n".join(out)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["criteria", *self.columns])
        for crit in CRITERIA:
            writer.writerow([crit, *(_plain(v) for v in self.rows[crit])])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "columns": list(self.columns),
            "rows": {c: [_number(v) for v in self.rows[c]] for c in CRITERIA},
            "best": {c: [self.columns[i] for i in sorted(self.minima[c])] for c in CRITERIA},
        }


def _plain(v: Number) -> str:
    return str(v) if isinstance(v, int) else round_one_decimal(v)


def _number(v: Number) -> int | float:
    return v if isinstance(v, int) else float(round_one_decimal(v))


def compare(reports: Sequence[MetricsReport]) -> Comparison:
    """Lay reports side by side the way the published comparison tables do."""
    if not reports:
        raise ValueError("nothing to compare")
    prints = {r.workload_fingerprint for r in reports}
    if len(prints) > 1:
        raise MixedWorkloads(f"reports come from {len(prints)} different workloads")
    rows: dict[str, tuple[Number, ...]] = {
        "CONTEXT SWITCH": tuple(r.context_switches for r in reports),
        "TURNAROUND TIME": tuple(r.avg_turnaround for r in reports),
        "WAITING TIME": tuple(r.avg_waiting for r in reports),
    }
    minima = {}
    for crit, values in rows.items():
        best = min(values)
        minima[crit] = frozenset(i for i, v in enumerate(values) if v == best)
    return Comparison(tuple(r.algorithm for r in reports), rows, minima)
