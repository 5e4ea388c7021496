"""
Real-coded genetic algorithm: tournament selection, uniform crossover,
per-gene Gaussian mutation and single-individual elitism.
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


def tournament_select(
    fitness: np.ndarray, count: int, size: int, rng: np.random.Generator
) -> np.ndarray:
    """Indices of `count` tournament winners; entrants drawn with replacement."""
    entrants = rng.integers(fitness.shape[0], size=(count, size))
    winners = np.argmin(fitness[entrants], axis=1)
    return entrants[np.arange(count), winners]


def run_ga(
    objective: Objective,
    lower: np.ndarray,
    upper: np.ndarray,
    config: BaselineConfig,
    rng: np.random.Generator,
) -> SearchOutcome:
    """
    Minimize with a generational GA.

    Parents are paired in selection order. The previous generation's best
    replaces the worst child, so the population never loses its best point.
    """
    n, dim = config.population_size, lower.shape[0]
    sigma = config.mutation_sigma_fraction * (upper - lower)
    mutation_p = config.mutation_probability_for(dim)

    population = random_population(n, lower, upper, rng)
    fitness = evaluate_rows(objective, population)
    best = BestTracker(population, fitness)

    for epoch in range(1, config.epochs + 1):
        parents = population[tournament_select(fitness, n, config.tournament_size, rng)]
        first, second = parents[0::2], parents[1::2]

        mate = rng.random(n // 2) < config.crossover_probability
        genes = rng.random((n // 2, dim)) < 0.5
        swap = genes & mate[:, None]
        children = np.empty_like(population)
        children[0::2] = np.where(swap, second, first)
        children[1::2] = np.where(swap, first, second)

        mutate = rng.random((n, dim)) < mutation_p
        noise = rng.normal(0.0, 1.0, size=(n, dim)) * sigma
        children = np.clip(np.where(mutate, children + noise, children), lower, upper)
        child_fitness = evaluate_rows(objective, children)

        elite = int(np.argmin(fitness))
        worst = int(np.argmax(child_fitness))
        if fitness[elite] < child_fitness[worst]:
            children[worst] = population[elite]
            child_fitness[worst] = fitness[elite]

        population, fitness = children, child_fitness
        best.offer(population, fitness)
        best.record(epoch)

    return best.outcome()
