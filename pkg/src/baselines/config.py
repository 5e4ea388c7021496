"""
Baseline optimizer configuration.

One frozen dataclass covers PSO, DE and GA; parameters that belong to
another algorithm are carried but ignored.
"""

import math
from dataclasses import dataclass, field, fields
from dataclasses import replace as dataclass_replace
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

BASELINE_ALGORITHMS = ("pso", "de", "ga")

# Parameters that belong to each algorithm, as accepted in a config `params` mapping
ALGORITHM_PARAMS: Dict[str, frozenset] = {
    "pso": frozenset({"inertia", "cognitive", "social", "vmax_fraction"}),
    "de": frozenset({"differential_weight", "crossover_rate"}),
    "ga": frozenset(
        {
            "crossover_probability",
            "mutation_probability",
            "mutation_sigma_fraction",
            "tournament_size",
        }
    ),
}

_RUN_KEYS = frozenset({"population_size", "epochs", "seed"})


@dataclass(frozen=True)
class BaselineConfig:
    """
    Parameters of one PSO, DE or GA run.

    mutation_probability None means 1/dim. Bounds default to the
    objective's bounds when left as None.
    """

    algorithm: str = "pso"
    population_size: int = 100
    epochs: int = 500
    seed: int = 0
    bounds_lower: Optional[np.ndarray] = field(default=None, compare=False)
    bounds_upper: Optional[np.ndarray] = field(default=None, compare=False)
    # pso
    inertia: float = 0.729
    cognitive: float = 1.49445
    social: float = 1.49445
    vmax_fraction: float = 0.2
    # de (rand/1/bin)
    differential_weight: float = 0.5
    crossover_rate: float = 0.9
    # ga
    crossover_probability: float = 0.9
    mutation_probability: Optional[float] = None
    mutation_sigma_fraction: float = 0.1
    tournament_size: int = 2
    # every evaluated point kept in the result
    record_search_history: bool = False

    def validate(self) -> List[str]:
        """Return every problem with this configuration (empty if valid)."""
        errors: List[str] = []

        if self.algorithm not in BASELINE_ALGORITHMS:
            errors.append(
                f"algorithm must be one of {BASELINE_ALGORITHMS} (got '{self.algorithm}')"
            )
        if self.epochs < 0:
            errors.append(f"epochs must be >= 0 (got {self.epochs})")
        if self.seed < 0:
            errors.append(f"seed must be non-negative (got {self.seed})")

        minimum = {"de": 4, "ga": 2}.get(self.algorithm, 1)
        if self.population_size < minimum:
            errors.append(
                f"population_size must be >= {minimum} for {self.algorithm} "
                f"(got {self.population_size})"
            )
        if self.algorithm == "ga" and self.population_size % 2:
            errors.append(f"population_size must be even for ga (got {self.population_size})")

        for name in ("crossover_rate", "crossover_probability"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                errors.append(f"{name} must be in [0, 1] (got {value})")
        if self.mutation_probability is not None and not 0.0 <= self.mutation_probability <= 1.0:
            errors.append(
                f"mutation_probability must be in [0, 1] (got {self.mutation_probability})"
            )

        for name in ("inertia", "cognitive", "social", "differential_weight"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0.0):
                errors.append(f"{name} must be a finite non-negative number (got {value})")
        for name in ("vmax_fraction", "mutation_sigma_fraction"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                errors.append(f"{name} must be a finite positive number (got {value})")
        if self.tournament_size < 1:
            errors.append(f"tournament_size must be >= 1 (got {self.tournament_size})")

        if (self.bounds_lower is None) != (self.bounds_upper is None):
            errors.append("bounds_lower and bounds_upper must be given together")
        elif self.bounds_lower is not None and self.bounds_upper is not None:
            lower = np.asarray(self.bounds_lower, dtype=float)
            upper = np.asarray(self.bounds_upper, dtype=float)
            if lower.shape != upper.shape or lower.ndim != 1:
                errors.append("bound vectors must be 1-D of equal length")
            elif np.any(lower > upper):
                errors.append("bounds_lower must not exceed bounds_upper")

        return errors

    def check(self) -> "BaselineConfig":
        errors = self.validate()
        if errors:
            raise ValueError(f"Invalid {self.algorithm} configuration: " + "; ".join(errors))
        return self

    def with_bounds(self, lower: np.ndarray, upper: np.ndarray) -> "BaselineConfig":
        return dataclass_replace(
            self,
            bounds_lower=np.asarray(lower, dtype=float),
            bounds_upper=np.asarray(upper, dtype=float),
        )

    def replace(self, **overrides: Any) -> "BaselineConfig":
        return dataclass_replace(self, **overrides)

    def mutation_probability_for(self, dim: int) -> float:
        if self.mutation_probability is None:
            return 1.0 / dim
        return self.mutation_probability

    @classmethod
    def from_mapping(
        cls, algorithm: str, params: Optional[Mapping[str, Any]] = None, **run: Any
    ) -> "BaselineConfig":
        """
        Build a config from an algorithm entry's `params` mapping.

        Run-level values (population_size, epochs, seed) are passed as
        keywords and may also appear in `params`.

        Raises:
            ValueError: Unknown algorithm or parameter names
        """
        if algorithm not in BASELINE_ALGORITHMS:
            raise ValueError(
                f"Unknown baseline algorithm '{algorithm}' (valid: {BASELINE_ALGORITHMS})"
            )
        values: Dict[str, Any] = dict(params or {})
        allowed = ALGORITHM_PARAMS[algorithm] | _RUN_KEYS
        unknown = sorted(set(values) - allowed)
        if unknown:
            raise ValueError(
                f"Unknown {algorithm} parameters {unknown} (valid: {sorted(allowed)})"
            )
        known = {f.name for f in fields(cls)}
        merged = {k: v for k, v in run.items() if k in known}
        merged.update(values)
        return cls(algorithm=algorithm, **merged)
