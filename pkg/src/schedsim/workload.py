"""Process and workload types, file ingestion, and the seeded generator."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

DEFAULT_BURST_MIN = 4
DEFAULT_BURST_MAX = 30
_SEED_LIMIT = 2**64


class WorkloadError(ValueError):
    """Base class for workload input problems.

    ``row`` is the 1-based data row (CSV, header excluded) or array index + 1
    (JSON) that caused the problem, when one can be identified.
    """

    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class MalformedInput(WorkloadError):
    pass


class DuplicatePid(WorkloadError):
    pass


class NonPositiveBurst(WorkloadError):
    pass


class EmptyWorkload(WorkloadError):
    pass


class InvalidConfig(WorkloadError):
    pass


@dataclass(frozen=True)
class ProcessSpec:
    pid: int
    burst: int

    def __post_init__(self) -> None:
        if isinstance(self.pid, bool) or not isinstance(self.pid, int) or self.pid < 1:
            raise MalformedInput(f"pid must be a positive integer, got {self.pid!r}")
        if isinstance(self.burst, bool) or not isinstance(self.burst, int):
            raise MalformedInput(f"burst must be an integer, got {self.burst!r}")
        if self.burst < 1:
            raise NonPositiveBurst(f"burst must be >= 1, got {self.burst} (pid {self.pid})")


@dataclass(frozen=True)
class Workload:
    """An ordered batch of processes, all arriving at tick 0.

    Order is significant: it is the FCFS order and the tie-break order for
    every other algorithm. ``seed`` is None for manually entered workloads.
    Equality compares only the processes.
    """

    processes: tuple[ProcessSpec, ...]
    seed: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "processes", tuple(self.processes))
        if not self.processes:
            raise EmptyWorkload("workload has no processes")
        seen: set[int] = set()
        for row, p in enumerate(self.processes, start=1):
            if p.pid in seen:
                raise DuplicatePid(f"duplicate pid {p.pid}", row=row)
            seen.add(p.pid)

    @classmethod
    def from_bursts(cls, bursts: Iterable[int]) -> "Workload":
        """Build a manual workload with pids 1..n in the given order."""
        return cls(tuple(ProcessSpec(i, b) for i, b in enumerate(bursts, start=1)))

    @property
    def origin(self) -> str:
        return "manual" if self.seed is None else "generated"

    @property
    def bursts(self) -> tuple[int, ...]:
        return tuple(p.burst for p in self.processes)

    @property
    def pids(self) -> tuple[int, ...]:
        return tuple(p.pid for p in self.processes)

    def burst_of(self, pid: int) -> int:
        for p in self.processes:
            if p.pid == pid:
                return p.burst
        raise KeyError(pid)

    def __len__(self) -> int:
        return len(self.processes)

    def fingerprint(self) -> str:
        """Short stable hash of the process list (origin is ignored)."""
        return hashlib.sha256(serialize_workload(self).encode()).hexdigest()[:16]

    def describe(self) -> str:
        if self.seed is None:
            return f"manual, {len(self)} processes"
        return f"generated seed={self.seed}, {len(self)} processes"


@dataclass(frozen=True)
class GeneratorConfig:
    count: int
    burst_min: int = DEFAULT_BURST_MIN
    burst_max: int = DEFAULT_BURST_MAX
    seed: int = 0

    def __post_init__(self) -> None:
        if self.count < 1:
            raise InvalidConfig(f"count must be >= 1, got {self.count}")
        if self.burst_min < 1:
            raise InvalidConfig(f"min burst must be >= 1, got {self.burst_min}")
        if self.burst_min > self.burst_max:
            raise InvalidConfig(
                f"min burst {self.burst_min} exceeds max burst {self.burst_max}"
            )
        if not 0 <= self.seed < _SEED_LIMIT:
            raise InvalidConfig(f"seed must be an unsigned 64-bit integer, got {self.seed}")

    @classmethod
    def parse(cls, text: str) -> "GeneratorConfig":
        """Parse ``count=10,min=4,max=30,seed=7`` (min/max/seed optional)."""
        keys = {"count": "count", "min": "burst_min", "max": "burst_max", "seed": "seed"}
        kwargs: dict[str, int] = {}
        for part in filter(None, (s.strip() for s in text.split(","))):
            name, sep, value = part.partition("=")
            name = name.strip()
            if not sep or name not in keys:
                raise InvalidConfig(f"unrecognised generator setting {part!r}")
            try:
                kwargs[keys[name]] = int(value)
            except ValueError:
                raise InvalidConfig(f"{name} must be an integer, got {value.strip()!r}") from None
        if "count" not in kwargs:
            raise InvalidConfig("generator settings need count=N")
        return cls(**kwargs)


def generate_workload(config: GeneratorConfig) -> Workload:
    """Draw ``count`` bursts uniformly from [burst_min, burst_max].

    Uses ``random.Random(seed)`` (Mersenne Twister), so a given config yields
    the same workload on every run of the same Python version.
    """
    rng = random.Random(config.seed)
    procs = tuple(
        ProcessSpec(pid, rng.randint(config.burst_min, config.burst_max))
        for pid in range(1, config.count + 1)
    )
    return Workload(procs, seed=config.seed)


def _parse_int(value: object, column: str, row: int) -> int:
    if isinstance(value, bool):
        raise MalformedInput(f"{column} must be an integer, got {value!r}", row=row)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise MalformedInput(f"{column} must be an integer, got {value!r}", row=row)


def _build(rows: list[tuple[object, object]]) -> Workload:
    procs = []
    seen: set[int] = set()
    for row, (raw_pid, raw_burst) in enumerate(rows, start=1):
        pid = _parse_int(raw_pid, "pid", row)
        burst = _parse_int(raw_burst, "burst", row)
        if pid < 1:
            raise MalformedInput(f"pid must be a positive integer, got {pid}", row=row)
        if burst < 1:
            raise NonPositiveBurst(f"burst must be >= 1, got {burst}", row=row)
        if pid in seen:
            raise DuplicatePid(f"duplicate pid {pid}", row=row)
        seen.add(pid)
        procs.append(ProcessSpec(pid, burst))
    if not procs:
        raise EmptyWorkload("workload has no processes")
    return Workload(tuple(procs))


def _csv_rows(text: str) -> list[tuple[object, object]]:
    reader = csv.reader(io.StringIO(text, newline=""))
    lines = [r for r in reader if any(cell.strip() for cell in r)]
    if not lines:
        raise EmptyWorkload("workload has no processes")
    header = [c.strip().lower() for c in lines[0]]
    if header != ["pid", "burst"]:
        raise MalformedInput(f"expected header 'pid,burst', got {','.join(lines[0])!r}")
    rows = []
    for row, cells in enumerate(lines[1:], start=1):
        if len(cells) != 2:
            raise MalformedInput(f"expected 2 fields, got {len(cells)}", row=row)
        rows.append((cells[0], cells[1]))
    return rows


def _json_rows(text: str) -> list[tuple[object, object]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise MalformedInput("JSON workload must be an array of {pid, burst} objects")
    rows = []
    for row, item in enumerate(data, start=1):
        if not isinstance(item, dict) or "pid" not in item or "burst" not in item:
            raise MalformedInput("expected an object with 'pid' and 'burst'", row=row)
        rows.append((item["pid"], item["burst"]))
    return rows


def parse_workload(text: str, fmt: str = "csv") -> Workload:
    """Parse a manually entered workload from CSV or JSON text.

    Row/array order becomes submission order. Errors carry the offending
    1-based row in ``.row``.
    """
    text = text.lstrip("\ufeff")
    fmt = fmt.lower()
    if fmt == "csv":
        return _build(_csv_rows(text))
    if fmt == "json":
        return _build(_json_rows(text))
    raise ValueError(f"unknown workload format {fmt!r}")


def serialize_workload(workload: Workload, fmt: str = "csv") -> str:
    if fmt == "csv":
        lines = ["pid,burst"] + [f"{p.pid},{p.burst}" for p in workload.processes]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([{"pid": p.pid, "burst": p.burst} for p in workload.processes]) + "\n"
    raise ValueError(f"unknown workload format {fmt!r}")
