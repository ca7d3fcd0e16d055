"""One-lane ASCII Gantt chart."""

from __future__ import annotations

from schedsim.core import AllocationKind, Schedule

MIN_WIDTH = 20


def segments(schedule: Schedule) -> list[tuple[int, int, int]]:
    """(pid, start, end) visual segments.

    A ContinuationGrant is folded into the QuantumGrant it extends; the
    underlying slices are untouched.
    """
    out: list[tuple[int, int, int]] = []
    for s in schedule.slices:
        if s.kind is AllocationKind.CONTINUATION and out and out[-1][0] == s.pid and out[-1][2] == s.start:
            pid, start, _ = out[-1]
            out[-1] = (pid, start, s.end)
        else:
            out.append((s.pid, s.start, s.end))
    return out


def render_gantt(schedule: Schedule, width: int = 72) -> str:
    """Render ``schedule`` as bar/tick line pairs no wider than ``width`` where possible.

    Segment widths are proportional to duration but never narrower than the
    label or the tick written under their left edge. When the chart does not
    fit, it wraps at segment boundaries and the boundary tick is repeated.
    """
    if width < MIN_WIDTH:
        raise ValueError(f"width must be >= {MIN_WIDTH}, got {width}")
    segs = segments(schedule)
    if not segs:
        return "(empty schedule)"
    total = segs[-1][2]
    tail = len(str(total))
    usable = width - len(segs) - tail
    scale = usable / total if usable > 0 else 0.0

    cells = []
    for pid, start, end in segs:
        label = f"P{pid}"
        w = max(len(label), len(str(start)), int((end - start) * scale))
        cells.append((label, start, end, w))

    rows: list[list[tuple[str, int, int, int]]] = [[]]
    used = 1 + tail
    for cell in cells:
        need = cell[3] + 1
        if rows[-1] and used + need > width:
            rows.append([])
            used = 1 + tail
        rows[-1].append(cell)
        used += need

    lines = []
    for row in rows:
        bar = "|"
        ticks = ""
        for label, start, _, w in row:
            bar += label.center(w) + "|"
            ticks += str(start).ljust(w + 1)
        ticks += str(row[-1][2])
        lines.append(bar)
        lines.append(ticks)
    return "\n".join(lines)


def boundary_ticks(chart: str) -> list[int]:
    """Parse the tick lines of a rendered chart back into a sorted tick list."""
    ticks: set[int] = set()
    for line in chart.splitlines()[1::2]:
        ticks.update(int(tok) for tok in line.split())
    return sorted(ticks)
