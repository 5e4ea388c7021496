"""
Epidemic compartment model.

Rate parameters, compartment census, the per-epoch rate-of-change equations
and the stochastic transition draws consumed by the EOSA optimizer.
"""

from src.epidemic.model import (
    CompartmentCensus,
    CompartmentDerivatives,
    EpidemicRates,
    RatesValidationError,
    TransitionPlan,
    compartment_derivatives,
    draw_count,
    infection_pressure,
    new_infection_bound,
    transition_counts,
)

__all__ = [
    "CompartmentCensus",
    "CompartmentDerivatives",
    "EpidemicRates",
    "RatesValidationError",
    "TransitionPlan",
    "compartment_derivatives",
    "draw_count",
    "infection_pressure",
    "new_infection_bound",
    "transition_counts",
]
