"""
EOSA run configuration.
"""

import math
from dataclasses import dataclass, field, fields
from dataclasses import replace as dataclass_replace
from typing import Any, List, Mapping, Optional

import numpy as np

from src.epidemic import EpidemicRates

MOVEMENT_MODES = ("literal", "differential")


@dataclass(frozen=True)
class EosaConfig:
    """
    Parameters of one EOSA run.

    Bounds default to the objective's bounds when left as None.

    movement_mode:
        literal       new = pos + rho·(rate·u + gbest)
        differential  new = pos + rho·(rate·u + (gbest − pos))

    literal is the default; it barely improves on unimodal functions, where
    differential converges.

    record_search_history keeps every evaluated point in the result
    (OptimizationResult.search_trace).
    """

    population_size: int = 100
    epochs: int = 500
    bounds_lower: Optional[np.ndarray] = field(default=None, compare=False)
    bounds_upper: Optional[np.ndarray] = field(default=None, compare=False)
    srate: float = 0.1
    lrate: float = 1.0
    rho: float = 0.5
    evdincub: float = 0.5
    neighborhood_threshold: float = 0.5
    rates: EpidemicRates = field(default_factory=EpidemicRates)
    seed: int = 0
    reinject_index_case: bool = True
    movement_mode: str = "literal"
    pe_load: float = 1.0
    record_search_history: bool = False

    def validate(self) -> List[str]:
        """Return every problem with this configuration (empty if valid)."""
        errors: List[str] = []

        if self.population_size < 1:
            errors.append(f"population_size must be >= 1 (got {self.population_size})")
        if self.epochs < 0:
            errors.append(f"epochs must be >= 0 (got {self.epochs})")
        if not 0.0 < self.srate <= 1.0:
            errors.append(f"srate must be in (0, 1] (got {self.srate})")
        if not self.lrate >= self.srate:
            errors.append(f"lrate must be >= srate (got lrate={self.lrate}, srate={self.srate})")
        if not (math.isfinite(self.rho) and self.rho >= 0.0):
            errors.append(f"rho must be a finite non-negative number (got {self.rho})")
        if not 0.0 <= self.evdincub <= 1.0:
            errors.append(f"evdincub must be in [0, 1] (got {self.evdincub})")
        if not 0.0 <= self.neighborhood_threshold <= 1.0:
            errors.append(
                f"neighborhood_threshold must be in [0, 1] (got {self.neighborhood_threshold})"
            )
        if self.seed < 0:
            errors.append(f"seed must be non-negative (got {self.seed})")
        if self.movement_mode not in MOVEMENT_MODES:
            errors.append(
                f"movement_mode must be one of {MOVEMENT_MODES} (got '{self.movement_mode}')"
            )
        if self.pe_load < 0:
            errors.append(f"pe_load must be non-negative (got {self.pe_load})")

        if (self.bounds_lower is None) != (self.bounds_upper is None):
            errors.append("bounds_lower and bounds_upper must be given together")
        elif self.bounds_lower is not None and self.bounds_upper is not None:
            lower = np.asarray(self.bounds_lower, dtype=float)
            upper = np.asarray(self.bounds_upper, dtype=float)
            if lower.shape != upper.shape or lower.ndim != 1:
                errors.append("bound vectors must be 1-D of equal length")
            elif np.any(lower > upper):
                errors.append("bounds_lower must not exceed bounds_upper")

        errors.extend(f"rates: {v}" for v in self.rates.validate(strict_ranges=False))
        return errors

    def check(self) -> "EosaConfig":
        errors = self.validate()
        if errors:
            raise ValueError("Invalid EOSA configuration: " + "; ".join(errors))
        return self

    def with_bounds(self, lower: np.ndarray, upper: np.ndarray) -> "EosaConfig":
        return dataclass_replace(
            self,
            bounds_lower=np.asarray(lower, dtype=float),
            bounds_upper=np.asarray(upper, dtype=float),
        )

    def replace(self, **overrides: Any) -> "EosaConfig":
        return dataclass_replace(self, **overrides)

    @classmethod
    def from_mapping(
        cls, mapping: Optional[Mapping[str, Any]], rates: Optional[EpidemicRates] = None
    ) -> "EosaConfig":
        """
        Build a config from an `eosa:` config-file section.

        Raises:
            ValueError: Unknown keys
        """
        values = dict(mapping or {})
        allowed = {f.name for f in fields(cls)} - {"bounds_lower", "bounds_upper", "rates"}
        unknown = sorted(set(values) - allowed)
        if unknown:
            raise ValueError(f"Unknown EOSA parameters {unknown} (valid: {sorted(allowed)})")
        if rates is not None:
            values["rates"] = rates
        return cls(**values)
