"""
Ebola Optimization Search Algorithm.

Population setup, movement, neighborhood gating, global-best selection and
the per-epoch propagation loop, plus the OptimizationResult shared with the
baseline optimizers.
"""

from src.eosa.config import MOVEMENT_MODES, EosaConfig
from src.eosa.optimizer import (
    CountingObjective,
    EpidemicState,
    Neighborhood,
    classify_neighborhood,
    displace,
    optimize,
    propagate_epoch,
    update_best,
)
from src.eosa.population import (
    Compartment,
    Individual,
    PopulationExhaustedError,
    census_from_population,
    generate_index_case,
    initialize_susceptibles,
    sample_position,
)
from src.eosa.result import CENSUS_COLUMNS, FLOAT_FORMAT, OptimizationResult
from src.eosa.trace import SearchTrace

__all__ = [
    "CENSUS_COLUMNS",
    "FLOAT_FORMAT",
    "MOVEMENT_MODES",
    "Compartment",
    "CountingObjective",
    "EosaConfig",
    "EpidemicState",
    "Individual",
    "Neighborhood",
    "OptimizationResult",
    "PopulationExhaustedError",
    "SearchTrace",
    "census_from_population",
    "classify_neighborhood",
    "displace",
    "generate_index_case",
    "initialize_susceptibles",
    "optimize",
    "propagate_epoch",
    "sample_position",
    "update_best",
]
