"""
Differential evolution, rand/1/bin.
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


def _donors(i: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Three distinct population indices, none equal to i."""
    picks = rng.choice(n - 1, size=3, replace=False)
    picks[picks >= i] += 1
    return picks


def run_de(
    objective: Objective,
    lower: np.ndarray,
    upper: np.ndarray,
    config: BaselineConfig,
    rng: np.random.Generator,
) -> SearchOutcome:
    """
    Minimize with DE/rand/1/bin.

    Mutant v = x_r1 + F·(x_r2 − x_r3), clamped into the bounds; binomial
    crossover with rate CR and one forced coordinate; the trial replaces
    its parent when it is no worse.
    """
    n, dim = config.population_size, lower.shape[0]

    population = random_population(n, lower, upper, rng)
    fitness = evaluate_rows(objective, population)
    best = BestTracker(population, fitness)

    for epoch in range(1, config.epochs + 1):
        trials = np.empty_like(population)
        for i in range(n):
            r1, r2, r3 = _donors(i, n, rng)
            mutant = population[r1] + config.differential_weight * (
                population[r2] - population[r3]
            )
            mutant = np.clip(mutant, lower, upper)

            cross = rng.random(dim) <= config.crossover_rate
            cross[int(rng.integers(dim))] = True
            trials[i] = np.where(cross, mutant, population[i])

        trial_fitness = evaluate_rows(objective, trials)
        accepted = trial_fitness <= fitness
        population[accepted] = trials[accepted]
        fitness[accepted] = trial_fitness[accepted]

        best.offer(population, fitness)
        best.record(epoch)

    return best.outcome()
