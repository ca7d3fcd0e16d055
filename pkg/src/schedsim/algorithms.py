"""FCFS, non-preemptive SJF, fixed-quantum Round Robin and OMDRRS.

All processes arrive at tick 0, so every schedule is work-conserving and
ends at the sum of the bursts.
"""

from __future__ import annotations

from collections import deque

from schedsim.core import Algorithm, AllocationKind, ExecutionSlice, Schedule
from schedsim.workload import Workload

DEFAULT_FACTOR = 2


def _run_in_order(order, algorithm: Algorithm) -> Schedule:
    slices = []
    t = 0
    for p in order:
        slices.append(ExecutionSlice(p.pid, t, t + p.burst, AllocationKind.RUN_TO_COMPLETION))
        t += p.burst
    return Schedule.from_slices(algorithm, {}, slices)


def run_fcfs(workload: Workload) -> Schedule:
    return _run_in_order(workload.processes, Algorithm.FCFS)


def run_sjf(workload: Workload) -> Schedule:
    # sorted() is stable: equal bursts keep submission order
    order = sorted(workload.processes, key=lambda p: p.burst)
    return _run_in_order(order, Algorithm.SJF)


def run_rr(workload: Workload, q: int) -> Schedule:
    """Round Robin with a fixed quantum ``q``; preempted processes rejoin the tail."""
    if q < 1:
        raise ValueError(f"quantum must be >= 1, got {q}")
    remaining = {p.pid: p.burst for p in workload.processes}
    queue = deque(workload.pids)
    slices = []
    t = 0
    while queue:
        pid = queue.popleft()
        run = min(q, remaining[pid])
        remaining[pid] -= run
        kind = AllocationKind.QUANTUM if remaining[pid] else AllocationKind.RUN_TO_COMPLETION
        slices.append(ExecutionSlice(pid, t, t + run, kind))
        t += run
        if remaining[pid]:
            queue.append(pid)
    return Schedule.from_slices(Algorithm.RR, {"q": q}, slices)


def run_omdrrs(workload: Workload, k: int, F: int = DEFAULT_FACTOR) -> Schedule:
    """Dynamic-quantum Round Robin over an ascending-burst ready queue.

    Round ``r`` uses quantum ``k * F**(r-1)``. At the start of each round the
    unfinished processes are stably sorted by remaining burst. A process whose
    remaining burst is below the quantum runs to completion; otherwise it runs
    one full quantum, and if what is left is below quantum/F it is granted the
    CPU again until it finishes. Anything else waits for the next round.
    """
    if k < 1:
        raise ValueError(f"initial quantum k must be >= 1, got {k}")
    if F < 2:
        raise ValueError(f"factor F must be >= 2, got {F}")
    remaining = {p.pid: p.burst for p in workload.processes}
    ready = list(workload.pids)
    slices = []
    t = 0
    quantum = k
    while ready:
        ready.sort(key=lambda pid: remaining[pid])
        carried = []
        for pid in ready:
            left = remaining[pid]
            if left < quantum:
                slices.append(ExecutionSlice(pid, t, t + left, AllocationKind.RUN_TO_COMPLETION))
                t += left
                remaining[pid] = 0
                continue
            slices.append(ExecutionSlice(pid, t, t + quantum, AllocationKind.QUANTUM))
            t += quantum
            left -= quantum
            # left < quantum / F, kept in integers
            if 0 < left and left * F < quantum:
                slices.append(ExecutionSlice(pid, t, t + left, AllocationKind.CONTINUATION))
                t += left
                left = 0
            remaining[pid] = left
            if left:
                carried.append(pid)
        ready = carried
        quantum *= F
    return Schedule.from_slices(Algorithm.OMDRRS, {"k": k, "F": F}, slices)


def run_algorithm(
    algorithm: Algorithm | str,
    workload: Workload,
    q: int | None = None,
    k: int | None = None,
    F: int = DEFAULT_FACTOR,
) -> Schedule:
    if not isinstance(algorithm, Algorithm):
        algorithm = Algorithm(algorithm.upper())
    if algorithm is Algorithm.FCFS:
        return run_fcfs(workload)
    if algorithm is Algorithm.SJF:
        return run_sjf(workload)
    if algorithm is Algorithm.RR:
        if q is None:
            raise ValueError("RR needs a quantum q")
        return run_rr(workload, q)
    if k is None:
        raise ValueError("OMDRRS needs an initial quantum k")
    return run_omdrrs(workload, k, F)
