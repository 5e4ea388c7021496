"""
Individuals, compartment tags and population setup.
"""

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterable, List, Optional

import numpy as np

from src.epidemic import CompartmentCensus

if TYPE_CHECKING:
    from src.eosa.config import EosaConfig


class PopulationExhaustedError(RuntimeError):
    """No susceptible individual is left to infect."""

    def __init__(self, message: str = "population exhausted"):
        super().__init__(message)


class Compartment(str, Enum):
    SUSCEPTIBLE = "susceptible"
    INFECTED = "infected"
    HOSPITALIZED = "hospitalized"
    RECOVERED = "recovered"
    VACCINATED = "vaccinated"
    DEAD = "dead"
    QUARANTINED = "quarantined"


@dataclass
class Individual:
    """
    One candidate solution.

    `fitness` is None until the individual has been evaluated.
    """

    position: np.ndarray
    fitness: Optional[float] = None
    tag: Compartment = Compartment.SUSCEPTIBLE

    @property
    def evaluated(self) -> bool:
        return self.fitness is not None

    def snapshot(self) -> "Individual":
        """Independent copy; later moves of this individual do not affect it."""
        return Individual(position=self.position.copy(), fitness=self.fitness, tag=self.tag)


def sample_position(
    lower: np.ndarray, upper: np.ndarray, rng: np.random.Generator
) -> np.ndarray:
    """Uniform point in the box: L + u·(U − L)."""
    return lower + rng.random(lower.shape[0]) * (upper - lower)


def initialize_susceptibles(config: "EosaConfig", rng: np.random.Generator) -> List[Individual]:
    """
    Sample the initial susceptible population uniformly within the bounds.

    Raises:
        ValueError: Invalid config (population_size < 1, inverted bounds) or
            bounds not set
    """
    config.check()
    if config.bounds_lower is None or config.bounds_upper is None:
        raise ValueError("initialize_susceptibles needs explicit bounds_lower/bounds_upper")

    lower = np.asarray(config.bounds_lower, dtype=float)
    upper = np.asarray(config.bounds_upper, dtype=float)
    return [
        Individual(position=sample_position(lower, upper, rng))
        for _ in range(config.population_size)
    ]


def generate_index_case(
    population: List[Individual], rng: np.random.Generator
) -> Individual:
    """
    Infect one uniformly chosen susceptible and return it.

    Raises:
        PopulationExhaustedError: No susceptible individual in the population
    """
    susceptible = [ind for ind in population if ind.tag is Compartment.SUSCEPTIBLE]
    if not susceptible:
        raise PopulationExhaustedError()

    index_case = susceptible[int(rng.integers(len(susceptible)))]
    index_case.tag = Compartment.INFECTED
    return index_case


def census_from_population(
    population: Iterable[Individual],
    previous: Optional[CompartmentCensus] = None,
    pe_load: float = 1.0,
) -> CompartmentCensus:
    """
    Census whose S and I counts are read from individual tags.

    H, R, V, D and Q are per-epoch transition counters; they are copied from
    `previous` (zero when not given).
    """
    s_count = 0
    i_count = 0
    for ind in population:
        if ind.tag is Compartment.SUSCEPTIBLE:
            s_count += 1
        elif ind.tag is Compartment.INFECTED:
            i_count += 1

    if previous is None:
        return CompartmentCensus(s_count=s_count, i_count=i_count, pe_load=pe_load)
    return CompartmentCensus(
        s_count=s_count,
        i_count=i_count,
        h_count=previous.h_count,
        r_count=previous.r_count,
        v_count=previous.v_count,
        d_count=previous.d_count,
        q_count=previous.q_count,
        pe_load=previous.pe_load,
    )
