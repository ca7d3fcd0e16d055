"""Deterministic CPU scheduling simulator: FCFS, SJF, Round Robin and OMDRRS."""

from schedsim.algorithms import run_algorithm, run_fcfs, run_omdrrs, run_rr, run_sjf
from schedsim.core import (
    Algorithm,
    AllocationKind,
    ExecutionSlice,
    Schedule,
    ValidationReport,
    Violation,
    dispatch_count,
    validate_schedule,
)
from schedsim.gantt import render_gantt
from schedsim.metrics import (
    Comparison,
    InvalidSchedule,
    MetricsReport,
    MixedWorkloads,
    ProcessMetrics,
    compare,
    compute_metrics,
    round_one_decimal,
)
from schedsim.workload import (
    DuplicatePid,
    EmptyWorkload,
    GeneratorConfig,
    InvalidConfig,
    MalformedInput,
    NonPositiveBurst,
    ProcessSpec,
    Workload,
    WorkloadError,
    generate_workload,
    parse_workload,
    serialize_workload,
)

__version__ = "0.1.0"
