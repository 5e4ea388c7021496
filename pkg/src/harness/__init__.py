"""
Experiment harness.

Multi-run, multi-function, multi-algorithm experiments with per-run
derived seeds, the archive of run/census/summary/convergence/timing files,
and the propagation simulator.
"""

from src.harness.archive import (
    MANIFEST_NAME,
    ExperimentArchive,
    RunRecord,
    load_archive,
    write_archive,
)
from src.harness.config import (
    ALGORITHMS,
    DEFAULT_CHECKPOINTS,
    AlgorithmSpec,
    ExperimentConfig,
    ExperimentConfigError,
    FunctionSpec,
)
from src.harness.experiment import (
    RunTask,
    build_tasks,
    derive_seed,
    execute_run,
    run_experiment,
)
from src.harness.reporting import (
    SummaryStats,
    convergence_table,
    summarize,
    summary_table,
    timing_report,
)
from src.harness.simulation import (
    DEFAULT_SIMULATION_EPOCHS,
    TRIVIAL_OBJECTIVE,
    simulate_propagation,
    write_census,
)

__all__ = [
    "ALGORITHMS",
    "DEFAULT_CHECKPOINTS",
    "DEFAULT_SIMULATION_EPOCHS",
    "MANIFEST_NAME",
    "TRIVIAL_OBJECTIVE",
    "AlgorithmSpec",
    "ExperimentArchive",
    "ExperimentConfig",
    "ExperimentConfigError",
    "FunctionSpec",
    "RunRecord",
    "RunTask",
    "SummaryStats",
    "build_tasks",
    "convergence_table",
    "derive_seed",
    "execute_run",
    "load_archive",
    "run_experiment",
    "simulate_propagation",
    "summarize",
    "summary_table",
    "timing_report",
    "write_census",
]
