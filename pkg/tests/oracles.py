"""Reference computations that share no code with the package under test."""

from itertools import permutations


def rr_by_ticks(bursts, q):
    """Round Robin advanced one tick at a time.

    Returns (completion per process in input order, number of dispatches).
    """
    remaining = list(bursts)
    queue = list(range(len(bursts)))
    done = [0] * len(bursts)
    clock = 0
    dispatches = 0
    while queue:
        i = queue.pop(0)
        dispatches += 1
        used = 0
        while used < q and remaining[i] > 0:
            remaining[i] -= 1
            used += 1
            clock += 1
        if remaining[i] > 0:
            queue.append(i)
        else:
            done[i] = clock
    return done, dispatches


def min_total_waiting(bursts):
    """Smallest total waiting time over every non-preemptive execution order."""
    best = None
    for order in permutations(bursts):
        clock = total = 0
        for b in order:
            total += clock
            clock += b
        best = total if best is None else min(best, total)
    return best
