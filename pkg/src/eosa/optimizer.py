"""
Ebola Optimization Search Algorithm.

The population is split into epidemic compartments. Infected individuals
are the only ones that move: each infected case is displaced around the
global best (a short, exploitative move or a long, exploratory one), may
infect susceptibles, and is then subject to hospitalization, recovery,
vaccination and death drawn from the compartment model. Quarantined cases
sit out one epoch. The global best only ever improves.

Example usage:
    >>> from src.eosa import EosaConfig, optimize
    >>> from src.objectives import get_objective
    >>> result = optimize(get_objective("F34", dim=10), EosaConfig(epochs=50, seed=7))
    >>> result.gbest_fitness <= result.initial_fitness
    True
"""

import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, List, Optional, Tuple

import numpy as np

from src.eosa.config import EosaConfig
from src.eosa.population import (
    Compartment,
    Individual,
    PopulationExhaustedError,
    census_from_population,
    generate_index_case,
    initialize_susceptibles,
    sample_position,
)
from src.eosa.result import OptimizationResult
from src.eosa.trace import SearchTrace
from src.epidemic import (
    CompartmentCensus,
    draw_count,
    new_infection_bound,
    transition_counts,
)
from src.objectives import ObjectiveError, ObjectiveSpec, evaluate
from src.utils.logging import get_logger, log_function_call
from src.utils.metrics import get_metrics

logger = get_logger(__name__)

Objective = Callable[[np.ndarray], float]


class Neighborhood(str, Enum):
    SHORT = "short"
    LONG = "long"


class CountingObjective:
    """
    Objective wrapper that counts evaluations and rejects non-finite values.

    Stochastic objectives draw their noise from `noise_rng`. With a `trace`,
    every accepted evaluation is recorded in it.
    """

    def __init__(
        self,
        spec: ObjectiveSpec,
        noise_rng: Optional[np.random.Generator] = None,
        trace: Optional[SearchTrace] = None,
    ):
        self.spec = spec
        self.noise_rng = noise_rng
        self.trace = trace
        self.evaluations = 0

    def __call__(self, x: np.ndarray) -> float:
        value = evaluate(self.spec, x, rng=self.noise_rng)
        self.evaluations += 1
        if not math.isfinite(value):
            raise ObjectiveError(f"objective undefined at point (got {value} from {self.spec.id})")
        if self.trace is not None:
            self.trace.record(x, value)
        return value


@dataclass
class EpidemicState:
    """Population, census and global best between epochs."""

    population: List[Individual]
    census: CompartmentCensus
    gbest: Individual
    epoch: int = 0

    def infected(self) -> List[Individual]:
        return [ind for ind in self.population if ind.tag is Compartment.INFECTED]

    def susceptible_indices(self) -> List[int]:
        return [k for k, ind in enumerate(self.population) if ind.tag is Compartment.SUSCEPTIBLE]


def classify_neighborhood(rng: Any, threshold: float = 0.5) -> Neighborhood:
    """Short (exploit, srate) when a U(0,1) draw falls below the threshold, else long."""
    return Neighborhood.SHORT if rng.random() < threshold else Neighborhood.LONG


def displace(
    individual: Individual,
    gbest: Individual,
    rate: float,
    config: EosaConfig,
    rng: np.random.Generator,
) -> np.ndarray:
    """
    New position of a moving infected case, clamped into the bounds.

    Per dimension, with u ~ U(0,1):
        literal       pos + rho·(rate·u + gbest)
        differential  pos + rho·(rate·u + (gbest − pos))
    """
    u = rng.random(individual.position.shape[0])
    if config.movement_mode == "differential":
        step = rate * u + (gbest.position - individual.position)
    else:
        step = rate * u + gbest.position
    moved = individual.position + config.rho * step
    if config.bounds_lower is None or config.bounds_upper is None:
        return moved
    return np.clip(moved, config.bounds_lower, config.bounds_upper)


def update_best(cbest: Individual, gbest: Individual) -> Individual:
    """
    Keep the strictly better individual; a tie keeps gbest.

    Raises:
        ValueError: Either individual is unevaluated
    """
    if cbest.fitness is None or gbest.fitness is None:
        raise ValueError("update_best needs two evaluated individuals")
    return cbest if cbest.fitness < gbest.fitness else gbest


def _choose(
    candidates: List[Individual], count: int, rng: np.random.Generator
) -> List[Individual]:
    if count <= 0:
        return []
    picks = rng.choice(len(candidates), size=count, replace=False)
    return [candidates[int(k)] for k in picks]


def propagate_epoch(
    state: EpidemicState,
    objective: Objective,
    config: EosaConfig,
    rng: np.random.Generator,
) -> EpidemicState:
    """
    Run one epoch of infection, movement and compartment transitions.

    The state is updated in place and returned. With no infected
    individual the state is returned unchanged.

    Raises:
        ObjectiveError: The objective is undefined at a visited point
    """
    if config.bounds_lower is None or config.bounds_upper is None:
        raise ValueError("propagate_epoch needs a config with explicit bounds")

    infected = state.infected()
    if not infected:
        return state

    rates = config.rates
    start_census = state.census

    # Quarantined cases sit this epoch out
    to_quarantine = draw_count(rates.xi_quarantine * len(infected), len(infected), rng)
    for ind in _choose(infected, to_quarantine, rng):
        ind.tag = Compartment.QUARANTINED

    evaluated: List[Individual] = []
    spreaders = [ind for ind in infected if ind.tag is Compartment.INFECTED]
    for ind in spreaders:
        neighborhood = classify_neighborhood(rng, config.neighborhood_threshold)
        rate = config.srate if neighborhood is Neighborhood.SHORT else config.lrate

        ind.position = displace(ind, state.gbest, rate, config, rng)
        ind.fitness = objective(ind.position)
        evaluated.append(ind)

        if rng.random() > config.evdincub:
            susceptible = [p for p in state.population if p.tag is Compartment.SUSCEPTIBLE]
            bound = new_infection_bound(start_census, rates, rate)
            for case in _choose(susceptible, draw_count(bound, len(susceptible), rng), rng):
                case.tag = Compartment.INFECTED

    active = state.infected()
    plan = transition_counts(
        CompartmentCensus(i_count=len(active)), rates, rng, include_quarantine=False
    )
    order = [active[int(k)] for k in rng.permutation(len(active))]
    hospitalized = order[: plan.to_hospital]
    recovered = order[plan.to_hospital : plan.to_hospital + plan.to_recovered]
    dead_start = plan.to_hospital + plan.to_recovered
    dead = order[dead_start : dead_start + plan.to_dead]
    for ind in hospitalized:
        ind.tag = Compartment.HOSPITALIZED
    for ind in hospitalized[: plan.to_vaccinated]:
        ind.tag = Compartment.VACCINATED
    for ind in recovered:
        ind.tag = Compartment.RECOVERED
    for ind in dead:
        ind.tag = Compartment.DEAD

    lower = np.asarray(config.bounds_lower, dtype=float)
    upper = np.asarray(config.bounds_upper, dtype=float)
    for k, ind in enumerate(state.population):
        if ind.tag is Compartment.DEAD:
            state.population[k] = Individual(position=sample_position(lower, upper, rng))
        elif ind.tag in (
            Compartment.HOSPITALIZED,
            Compartment.VACCINATED,
            Compartment.RECOVERED,
        ):
            ind.tag = Compartment.SUSCEPTIBLE
        elif ind.tag is Compartment.QUARANTINED:
            ind.tag = Compartment.INFECTED

    for ind in state.population:
        if ind.tag is Compartment.INFECTED and not ind.evaluated:
            ind.fitness = objective(ind.position)
            evaluated.append(ind)

    if evaluated:
        cbest = min(evaluated, key=lambda ind: ind.fitness)  # type: ignore[arg-type,return-value]
        if update_best(cbest, state.gbest) is cbest:
            state.gbest = cbest.snapshot()

    counters = CompartmentCensus(
        h_count=plan.to_hospital,
        r_count=plan.to_recovered,
        v_count=plan.to_vaccinated,
        d_count=plan.to_dead,
        q_count=to_quarantine,
        pe_load=start_census.pe_load,
    )
    state.census = census_from_population(state.population, previous=counters)
    state.epoch += 1
    return state


def _reinject_index_case(state: EpidemicState, rng: np.random.Generator) -> None:
    susceptible = state.susceptible_indices()
    if not susceptible:
        raise PopulationExhaustedError()
    case = state.population[susceptible[int(rng.integers(len(susceptible)))]]
    case.position = state.gbest.position.copy()
    case.fitness = state.gbest.fitness
    case.tag = Compartment.INFECTED
    state.census = census_from_population(state.population, previous=state.census)


@log_function_call
def optimize(objective: ObjectiveSpec, config: EosaConfig) -> OptimizationResult:
    """
    Minimize an objective with EOSA.

    Args:
        objective: Dimension-bound objective
        config: Run parameters; bounds default to the objective's bounds

    Returns:
        OptimizationResult with per-epoch history and census trace

    Raises:
        ValueError: Invalid configuration or bounds of the wrong dimension
        ObjectiveError: The objective is undefined at a visited point
    """
    if config.bounds_lower is None or config.bounds_upper is None:
        config = config.with_bounds(*objective.bound_vectors())
    config.check()
    if np.asarray(config.bounds_lower).shape[0] != objective.dim:
        raise ValueError(
            f"Bounds have {np.asarray(config.bounds_lower).shape[0]} coordinates "
            f"but {objective.id} has dimension {objective.dim}"
        )

    run_stream, noise_stream = np.random.SeedSequence(config.seed).spawn(2)
    rng = np.random.default_rng(run_stream)
    trace = SearchTrace(objective.dim) if config.record_search_history else None
    counted = CountingObjective(objective, np.random.default_rng(noise_stream), trace=trace)

    start = time.perf_counter()

    population = initialize_susceptibles(config, rng)
    index_case = generate_index_case(population, rng)
    index_case.fitness = counted(index_case.position)
    initial_fitness = float(index_case.fitness)

    state = EpidemicState(
        population=population,
        census=census_from_population(population, pe_load=config.pe_load),
        gbest=index_case.snapshot(),
    )

    history: List[Tuple[int, float]] = []
    census_trace: List[CompartmentCensus] = []
    deviation_events: List[int] = []

    for epoch in range(1, config.epochs + 1):
        if trace is not None:
            trace.start_epoch(epoch)
        if not state.infected():
            if not config.reinject_index_case:
                logger.info(f"Infection died out before epoch {epoch}; stopping")
                break
            _reinject_index_case(state, rng)
            deviation_events.append(epoch)
            logger.debug(f"Index case re-injected at epoch {epoch}")

        propagate_epoch(state, counted, config, rng)
        history.append((epoch, float(state.gbest.fitness)))  # type: ignore[arg-type]
        census_trace.append(state.census)

    wall_time = time.perf_counter() - start

    if census_trace:
        get_metrics().record_infected(census_trace[-1].i_count)

    result = OptimizationResult(
        gbest_position=state.gbest.position.copy(),
        gbest_fitness=float(state.gbest.fitness),  # type: ignore[arg-type]
        history=history,
        evaluations=counted.evaluations,
        wall_time=wall_time,
        initial_fitness=initial_fitness,
        algorithm="eosa",
        seed=config.seed,
        census_trace=census_trace,
        deviation_events=deviation_events,
        search_trace=trace,
    )
    logger.info(
        f"EOSA on {objective.id}: {initial_fitness:.6g} -> {result.gbest_fitness:.6g} "
        f"in {len(history)} epochs, {result.evaluations} evaluations"
    )
    return result
