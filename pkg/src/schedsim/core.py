"""Schedule trace model shared by all algorithms, plus the schedule validator."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from schedsim.workload import Workload


class Algorithm(str, enum.Enum):
    FCFS = "FCFS"
    SJF = "SJF"
    RR = "RR"
    OMDRRS = "OMDRRS"


class AllocationKind(str, enum.Enum):
    QUANTUM = "QuantumGrant"
    CONTINUATION = "ContinuationGrant"
    RUN_TO_COMPLETION = "RunToCompletion"


@dataclass(frozen=True)
class ExecutionSlice:
    pid: int
    start: int
    end: int
    kind: AllocationKind

    def __post_init__(self) -> None:
        if self.end <= self.start:
            raise ValueError(f"empty slice for pid {self.pid}: [{self.start}, {self.end})")

    @property
    def duration(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class Schedule:
    """Full execution trace of one algorithm over one workload.

    ``params`` holds ``{"q": ...}`` for RR, ``{"k": ..., "F": ...}`` for
    OMDRRS and is empty for FCFS/SJF. ``completions`` maps pid to the end tick
    of that pid's last slice.
    """

    algorithm: Algorithm
    params: dict[str, int]
    slices: tuple[ExecutionSlice, ...]
    completions: dict[int, int] = field(default_factory=dict)

    @classmethod
    def from_slices(
        cls, algorithm: Algorithm, params: dict[str, int], slices: Iterable[ExecutionSlice]
    ) -> "Schedule":
        slices = tuple(slices)
        completions: dict[int, int] = {}
        for s in slices:
            completions[s.pid] = s.end
        return cls(algorithm, dict(params), slices, completions)

    @property
    def makespan(self) -> int:
        return self.slices[-1].end if self.slices else 0

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm.value,
            "params": dict(self.params),
            "slices": [
                {"pid": s.pid, "start": s.start, "end": s.end, "kind": s.kind.value}
                for s in self.slices
            ],
            "completions": {str(pid): t for pid, t in sorted(self.completions.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    slice_index: Optional[int] = None

    def __str__(self) -> str:
        where = f"slice {self.slice_index}: " if self.slice_index is not None else ""
        return f"{self.rule}: {where}{self.message}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok


def validate_schedule(workload: Workload, schedule: Schedule) -> ValidationReport:
    """Check a schedule against its workload; violations are returned, not raised.

    Rules: ``zero-length``, ``contiguity`` (first slice starts at 0 and each
    slice starts where the previous ended), ``unknown pid``, ``continuation``
    (a ContinuationGrant must directly follow a QuantumGrant of the same pid),
    ``burst conservation``, ``completion`` and ``makespan``.
    """
    found: list[Violation] = []
    bursts = {p.pid: p.burst for p in workload.processes}
    used: dict[int, int] = {pid: 0 for pid in bursts}
    last_end: dict[int, int] = {}

    expected_start = 0
    prev: Optional[ExecutionSlice] = None
    for i, s in enumerate(schedule.slices):
        if s.end <= s.start:
            found.append(Violation("zero-length", f"pid {s.pid} has [{s.start}, {s.end})", i))
        if s.start != expected_start:
            found.append(
                Violation("contiguity", f"starts at {s.start}, expected {expected_start}", i)
            )
        if s.pid not in bursts:
            found.append(Violation("unknown pid", f"pid {s.pid} is not in the workload", i))
        else:
            used[s.pid] += s.end - s.start
            last_end[s.pid] = s.end
        if s.kind is AllocationKind.CONTINUATION:
            if (
                prev is None
                or prev.pid != s.pid
                or prev.kind is not AllocationKind.QUANTUM
                or prev.end != s.start
            ):
                found.append(
                    Violation(
                        "continuation",
                        f"continuation for pid {s.pid} does not follow its own quantum grant",
                        i,
                    )
                )
        expected_start = s.end
        prev = s

    for pid, burst in bursts.items():
        if used[pid] != burst:
            found.append(
                Violation("burst conservation", f"pid {pid} ran {used[pid]} ticks, burst is {burst}")
            )

    for pid in sorted(set(bursts) | set(schedule.completions)):
        got = schedule.completions.get(pid)
        want = last_end.get(pid)
        if got != want:
            found.append(
                Violation("completion", f"pid {pid} completion {got}, last slice ends at {want}")
            )

    total = sum(bursts.values())
    end = schedule.slices[-1].end if schedule.slices else 0
    if end != total:
        found.append(Violation("makespan", f"last slice ends at {end}, total burst is {total}"))
    return ValidationReport(tuple(found))


def dispatch_count(schedule: Schedule) -> int:
    """Number of CPU allocations, continuation grants included."""
    return len(schedule.slices)
