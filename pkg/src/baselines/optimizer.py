"""
Common entry point for the baseline optimizers.

Example usage:
    >>> from src.baselines import BaselineConfig, baseline_optimize
    >>> from src.objectives import get_objective
    >>> result = baseline_optimize(
    ...     get_objective("F34", dim=10), BaselineConfig(algorithm="de", epochs=100)
    ... )
    >>> result.algorithm
    'de'
"""

import time
from typing import Callable, Dict

import numpy as np

from src.baselines.config import BaselineConfig
from src.baselines.de import run_de
from src.baselines.ga import run_ga
from src.baselines.pso import run_pso
from src.baselines.search import Objective, SearchOutcome
from src.eosa.optimizer import CountingObjective
from src.eosa.result import OptimizationResult
from src.eosa.trace import SearchTrace
from src.objectives import ObjectiveSpec
from src.utils.logging import get_logger, log_function_call

logger = get_logger(__name__)

Solver = Callable[
    [Objective, np.ndarray, np.ndarray, BaselineConfig, np.random.Generator], SearchOutcome
]

SOLVERS: Dict[str, Solver] = {
    "pso": run_pso,
    "de": run_de,
    "ga": run_ga,
}


@log_function_call
def baseline_optimize(objective: ObjectiveSpec, config: BaselineConfig) -> OptimizationResult:
    """
    Minimize an objective with PSO, DE or GA.

    Same contract as the EOSA optimize: monotone history, positions kept
    within bounds, bit-identical replay for a seed.

    Raises:
        ValueError: Invalid configuration or bounds of the wrong dimension
        ObjectiveError: The objective is undefined at a visited point
    """
    if config.bounds_lower is None or config.bounds_upper is None:
        config = config.with_bounds(*objective.bound_vectors())
    config.check()

    lower = np.asarray(config.bounds_lower, dtype=float)
    upper = np.asarray(config.bounds_upper, dtype=float)
    if lower.shape[0] != objective.dim:
        raise ValueError(
            f"Bounds have {lower.shape[0]} coordinates "
            f"but {objective.id} has dimension {objective.dim}"
        )

    run_stream, noise_stream = np.random.SeedSequence(config.seed).spawn(2)
    rng = np.random.default_rng(run_stream)
    # Each solver evaluates exactly one population per epoch
    trace = (
        SearchTrace(objective.dim, population_size=config.population_size)
        if config.record_search_history
        else None
    )
    counted = CountingObjective(objective, np.random.default_rng(noise_stream), trace=trace)

    start = time.perf_counter()
    outcome = SOLVERS[config.algorithm](counted, lower, upper, config, rng)
    wall_time = time.perf_counter() - start

    result = OptimizationResult(
        gbest_position=outcome.best_position.copy(),
        gbest_fitness=outcome.best_fitness,
        history=outcome.history,
        evaluations=counted.evaluations,
        wall_time=wall_time,
        initial_fitness=outcome.initial_fitness,
        algorithm=config.algorithm,
        seed=config.seed,
        search_trace=trace,
    )
    logger.info(
        f"{config.algorithm.upper()} on {objective.id}: "
        f"{result.initial_fitness:.6g} -> {result.gbest_fitness:.6g} "
        f"in {len(result.history)} epochs, {result.evaluations} evaluations"
    )
    return result
