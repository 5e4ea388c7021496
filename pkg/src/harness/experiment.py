"""
Experiment runner.

Expands an ExperimentConfig into one task per (algorithm, function, run),
executes the tasks serially or on a process pool, and writes the archive.
Each run's seed is derived from the master seed and the run's identity, so
results do not depend on the number of workers or on which other runs are
in the experiment.

Example usage:
    >>> from src.harness import ExperimentConfig, run_experiment
    >>> config = ExperimentConfig.from_file("config/examples/smoke_experiment.yaml")
    >>> archive = run_experiment(config, output_dir="results/smoke", jobs=4)
    >>> len(archive.records)
    60
"""

import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from src.baselines import BaselineConfig, baseline_optimize
from src.eosa import optimize
from src.epidemic import EpidemicRates
from src.harness.archive import ExperimentArchive, RunRecord, write_archive
from src.harness.config import AlgorithmSpec, ExperimentConfig, FunctionSpec
from src.objectives import get_objective
from src.utils.logging import (
    JSONFormatter,
    clear_run_context,
    get_logger,
    log_function_call,
    set_run_context,
    setup_logging,
)
from src.utils.metrics import get_metrics

logger = get_logger(__name__)


def derive_seed(master_seed: int, algorithm: str, function: str, run_index: int) -> int:
    """
    Stable 64-bit seed for one run.

    Independent of Python's hash randomization and of the other runs in
    the experiment.
    """
    key = f"{master_seed}\x1f{algorithm}\x1f{function}\x1f{run_index}".encode("utf-8")
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


@dataclass(frozen=True)
class RunTask:
    algorithm: AlgorithmSpec
    function: FunctionSpec
    run_index: int
    seed: int
    population_size: int
    epochs: int
    eosa: Mapping[str, Any] = field(default_factory=dict)
    rates: Mapping[str, Any] = field(default_factory=dict)

    @property
    def context(self) -> str:
        return f"{self.algorithm.label}/{self.function.id}/run-{self.run_index}"


def build_tasks(config: ExperimentConfig) -> List[RunTask]:
    """Tasks in (algorithm, function, run) order."""
    return [
        RunTask(
            algorithm=algorithm,
            function=function,
            run_index=run_index,
            seed=derive_seed(config.master_seed, algorithm.label, function.id, run_index),
            population_size=config.population_size,
            epochs=config.epochs,
            eosa=dict(config.eosa),
            rates=dict(config.rates),
        )
        for algorithm in config.algorithms
        for function in config.functions
        for run_index in range(config.runs)
    ]


def execute_run(task: RunTask) -> RunRecord:
    """Run one task; module-level so process pools can pickle it."""
    objective = get_objective(task.function.id, task.function.dim)
    config = task.algorithm.build_config(
        task.population_size,
        task.epochs,
        task.seed,
        task.eosa,
        EpidemicRates.from_mapping(task.rates),
    )

    set_run_context(task.context)
    try:
        if isinstance(config, BaselineConfig):
            result = baseline_optimize(objective, config)
        else:
            result = optimize(objective, config)
    finally:
        clear_run_context()

    return RunRecord(
        label=task.algorithm.label,
        algorithm=task.algorithm.name,
        function=task.function.id,
        run_index=task.run_index,
        seed=task.seed,
        result=result,
    )


def _init_worker(level: str, json_format: bool) -> None:
    setup_logging(level=level, json_format=json_format)


def _logging_snapshot() -> Dict[str, Any]:
    root = logging.getLogger()
    json_format = any(isinstance(h.formatter, JSONFormatter) for h in root.handlers)
    return {"level": logging.getLevelName(root.level), "json_format": json_format}


def _run_parallel(tasks: List[RunTask], jobs: int) -> List[RunRecord]:
    snapshot = _logging_snapshot()
    records: Dict[int, RunRecord] = {}
    with ProcessPoolExecutor(
        max_workers=jobs,
        initializer=_init_worker,
        initargs=(snapshot["level"], snapshot["json_format"]),
    ) as executor:
        futures = {executor.submit(execute_run, task): k for k, task in enumerate(tasks)}
        for future in as_completed(futures):
            k = futures[future]
            try:
                records[k] = future.result()
            except Exception:
                get_metrics().record_failure(tasks[k].algorithm.name)
                logger.error(f"Run {tasks[k].context} failed")
                raise
            logger.debug(f"Run {tasks[k].context} done ({len(records)}/{len(tasks)})")
    return [records[k] for k in range(len(tasks))]


def _run_serial(tasks: List[RunTask]) -> List[RunRecord]:
    records: List[RunRecord] = []
    for task in tasks:
        try:
            records.append(execute_run(task))
        except Exception:
            get_metrics().record_failure(task.algorithm.name)
            logger.error(f"Run {task.context} failed")
            raise
    return records


@log_function_call
def run_experiment(
    config: ExperimentConfig,
    output_dir: Optional[Union[str, Path]] = None,
    jobs: Optional[int] = None,
) -> ExperimentArchive:
    """
    Execute every run of an experiment and write its archive.

    Args:
        config: Validated experiment configuration
        output_dir: Overrides config.output_dir; created when missing
        jobs: Worker processes; overrides config.jobs

    Returns:
        ExperimentArchive with one record per (algorithm, function, run)

    Raises:
        ExperimentConfigError: Invalid configuration
        OSError: Output directory cannot be created or written
        ObjectiveError: An objective is undefined at a visited point
    """
    config.check()
    target = Path(output_dir if output_dir is not None else config.output_dir)
    target.mkdir(parents=True, exist_ok=True)

    workers = jobs if jobs is not None else config.jobs
    if workers < 1:
        raise ValueError(f"jobs must be >= 1 (got {workers})")

    tasks = build_tasks(config)
    logger.info(
        f"Running {len(tasks)} runs ({len(config.algorithms)} algorithms × "
        f"{len(config.functions)} functions × {config.runs} runs) with {workers} workers"
    )

    records = _run_serial(tasks) if workers == 1 else _run_parallel(tasks, workers)

    metrics = get_metrics()
    for record in records:
        metrics.record_run(
            record.algorithm, record.result.wall_time, record.result.evaluations
        )

    archive = ExperimentArchive(config=config, records=records)
    write_archive(archive, target)
    return archive
