"""
Pieces shared by the baseline optimizers.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Tuple

import numpy as np

Objective = Callable[[np.ndarray], float]


@dataclass
class SearchOutcome:
    """Best point found, the fitness of the initial population's best, and per-epoch gbest."""

    best_position: np.ndarray
    best_fitness: float
    initial_fitness: float
    history: List[Tuple[int, float]] = field(default_factory=list)


def random_population(
    size: int, lower: np.ndarray, upper: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """`size` points drawn uniformly in the box, one per row."""
    return lower + rng.random((size, lower.shape[0])) * (upper - lower)


def evaluate_rows(objective: Objective, points: np.ndarray) -> np.ndarray:
    return np.array([objective(row) for row in points], dtype=float)


class BestTracker:
    """Running global best; only strictly lower fitness replaces it."""

    def __init__(self, points: np.ndarray, fitness: np.ndarray):
        k = int(np.argmin(fitness))
        self.position = points[k].copy()
        self.fitness = float(fitness[k])
        self.initial_fitness = self.fitness
        self.history: List[Tuple[int, float]] = []

    def offer(self, points: np.ndarray, fitness: np.ndarray) -> None:
        k = int(np.argmin(fitness))
        if fitness[k] < self.fitness:
            self.position = points[k].copy()
            self.fitness = float(fitness[k])

    def record(self, epoch: int) -> None:
        self.history.append((epoch, self.fitness))

    def outcome(self) -> SearchOutcome:
        return SearchOutcome(
            best_position=self.position,
            best_fitness=self.fitness,
            initial_fitness=self.initial_fitness,
            history=self.history,
        )
