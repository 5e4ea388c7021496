"""
Global-best particle swarm optimization with a velocity clamp.
"""

import numpy as np

from src.baselines.config import BaselineConfig
from src.baselines.search import (
    BestTracker,
    Objective,
    SearchOutcome,
    evaluate_rows,
    random_population,
)


def run_pso(
    objective: Objective,
    lower: np.ndarray,
    upper: np.ndarray,
    config: BaselineConfig,
    rng: np.random.Generator,
) -> SearchOutcome:
    """
    Minimize with PSO.

    Per particle and dimension, with r1, r2 ~ U(0,1):
        v = w·v + c1·r1·(pbest − x) + c2·r2·(gbest − x),  |v| <= vmax
        x = clip(x + v)
    """
    n, dim = config.population_size, lower.shape[0]
    vmax = config.vmax_fraction * (upper - lower)

    positions = random_population(n, lower, upper, rng)
    velocities = vmax * (2.0 * rng.random((n, dim)) - 1.0)
    fitness = evaluate_rows(objective, positions)

    pbest = positions.copy()
    pbest_fitness = fitness.copy()
    best = BestTracker(positions, fitness)

    for epoch in range(1, config.epochs + 1):
        r1 = rng.random((n, dim))
        r2 = rng.random((n, dim))
        velocities = (
            config.inertia * velocities
            + config.cognitive * r1 * (pbest - positions)
            + config.social * r2 * (best.position - positions)
        )
        velocities = np.clip(velocities, -vmax, vmax)
        positions = np.clip(positions + velocities, lower, upper)
        fitness = evaluate_rows(objective, positions)

        improved = fitness < pbest_fitness
        pbest[improved] = positions[improved]
        pbest_fitness[improved] = fitness[improved]

        best.offer(pbest, pbest_fitness)
        best.record(epoch)

    return best.outcome()
