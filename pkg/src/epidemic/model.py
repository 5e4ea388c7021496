"""
SEIR-HDVQ compartment model driving EOSA's population bookkeeping.

Holds the epidemic rate parameters, evaluates the compartment rates of
change as discrete difference equations (one step per epoch), and draws the
per-epoch stochastic transition counts the optimizer applies to its
population.

Rate names follow the compartment flows they govern:

    pi_recruit               recruitment of susceptibles (π)
    eta_decay                environmental pathogen decay (η; also used where
                             the infected equation writes λ)
    alpha_hosp               hospitalization of infected (α)
    gamma_cap_death          disease-induced death (Γ), valid range [0.4, 0.9]
    beta1..beta4             contact rates with infectious, pathogen, deceased
                             and recovered individuals (β₁..β₄)
    gamma_recover            recovery (γ)
    tau_natural_death        natural death of susceptibles (τ)
    delta_burial             burial of the deceased (δ)
    vartheta_vaccinate       vaccination (ϑ)
    omega_hospital_response  hospital response (ω)
    mu_vaccine_response      vaccine response (μ)
    xi_quarantine            quarantine (ξ)

Example usage:
    >>> rates = EpidemicRates()
    >>> census = CompartmentCensus(s_count=190, i_count=10)
    >>> derivatives = compartment_derivatives(census, rates)
    >>> plan = transition_counts(census, rates, np.random.default_rng(7))
"""

import math
from dataclasses import asdict, dataclass, fields
from dataclasses import replace as dataclass_replace
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

from src.utils.logging import get_logger

logger = get_logger(__name__)


class RatesValidationError(ValueError):
    """One or more epidemic rates are outside their valid range."""

    def __init__(self, violations: List[str]):
        self.violations = violations
        super().__init__("Invalid epidemic rates: " + "; ".join(violations))


# Rates restricted to the open interval (0, 1)
_OPEN_UNIT_RATES = (
    "alpha_hosp",
    "gamma_recover",
    "tau_natural_death",
    "delta_burial",
    "vartheta_vaccinate",
    "omega_hospital_response",
    "mu_vaccine_response",
    "xi_quarantine",
)


@dataclass(frozen=True)
class EpidemicRates:
    """
    Rate parameters of the compartment model.

    Defaults sit at the low end of the documented parameter ranges; they are
    defaults, not measured constants.
    """

    pi_recruit: float = 0.05
    eta_decay: float = 0.1
    alpha_hosp: float = 0.1
    gamma_cap_death: float = 0.5
    beta1_contact_infectious: float = 0.1
    beta2_contact_pathogen: float = 0.1
    beta3_contact_deceased: float = 0.1
    beta4_contact_recovered: float = 0.1
    gamma_recover: float = 0.1
    tau_natural_death: float = 0.05
    delta_burial: float = 0.1
    vartheta_vaccinate: float = 0.1
    omega_hospital_response: float = 0.1
    mu_vaccine_response: float = 0.1
    xi_quarantine: float = 0.1
    # Multiplier on I in the quarantine equation; None reuses pi_recruit
    pi_quarantine_intake: Optional[float] = None

    @property
    def quarantine_intake(self) -> float:
        """The π multiplier applied to I in the quarantine equation."""
        if self.pi_quarantine_intake is None:
            return self.pi_recruit
        return self.pi_quarantine_intake

    def validate(self, strict_ranges: bool = True) -> List[str]:
        """
        Check every rate.

        Args:
            strict_ranges: Enforce the documented ranges (Γ in [0.4, 0.9], the
                other flow rates in (0, 1), η > 0). With False only finiteness and
                non-negativity are checked, which is what zeroed-out "what if"
                simulations need.

        Returns:
            Human-readable violations (empty if valid)
        """
        violations: List[str] = []

        for name, value in asdict(self).items():
            if value is None:
                continue
            if not math.isfinite(value):
                violations.append(f"{name} must be finite (got {value})")
            elif value < 0:
                violations.append(f"{name} must be non-negative (got {value})")

        if violations or not strict_ranges:
            return violations

        if not 0.4 <= self.gamma_cap_death <= 0.9:
            violations.append(
                f"gamma_cap_death must be in [0.4, 0.9] (got {self.gamma_cap_death})"
            )
        for name in _OPEN_UNIT_RATES:
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                violations.append(f"{name} must be in (0, 1) (got {value})")
        if self.eta_decay <= 0:
            violations.append(f"eta_decay must be > 0 (got {self.eta_decay})")

        return violations

    def check(self, strict_ranges: bool = True) -> "EpidemicRates":
        """Raise RatesValidationError listing every violation; return self otherwise."""
        violations = self.validate(strict_ranges=strict_ranges)
        if violations:
            raise RatesValidationError(violations)
        return self

    def replace(self, **overrides: float) -> "EpidemicRates":
        """Return a copy with the given rates replaced (unknown names rejected)."""
        unknown = sorted(set(overrides) - _RATE_NAMES)
        if unknown:
            raise RatesValidationError([f"unknown rate '{name}'" for name in unknown])
        return dataclass_replace(self, **overrides)

    @classmethod
    def from_mapping(cls, mapping: Optional[Mapping[str, Any]]) -> "EpidemicRates":
        """Build rates from a config mapping, defaults for anything not given."""
        if not mapping:
            return cls()
        return cls().replace(**{str(k): v for k, v in mapping.items()})

    @classmethod
    def zero(cls) -> "EpidemicRates":
        """All rates zero; one epoch leaves the compartment census unchanged."""
        return cls(**{name: 0.0 for name in _RATE_NAMES if name != "pi_quarantine_intake"})


_RATE_NAMES = frozenset(f.name for f in fields(EpidemicRates))


@dataclass(frozen=True)
class CompartmentCensus:
    """
    Compartment counts after an epoch.

    s_count and i_count are live memberships; h, r, v, d and q count the
    transitions of the epoch that produced this census.
    """

    s_count: int = 0
    i_count: int = 0
    h_count: int = 0
    r_count: int = 0
    v_count: int = 0
    d_count: int = 0
    q_count: int = 0
    pe_load: float = 1.0

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if value < 0:
                raise ValueError(f"{f.name} must be non-negative (got {value})")

    @property
    def live_population(self) -> int:
        return self.s_count + self.i_count

    def as_row(self, epoch: int) -> Dict[str, int]:
        """Census CSV row: epoch,S,I,H,R,V,D,Q."""
        return {
            "epoch": epoch,
            "S": self.s_count,
            "I": self.i_count,
            "H": self.h_count,
            "R": self.r_count,
            "V": self.v_count,
            "D": self.d_count,
            "Q": self.q_count,
        }


@dataclass(frozen=True)
class CompartmentDerivatives:
    """Per-epoch rates of change of S, I, H, R, V, D and Q."""

    ds: float
    di: float
    dh: float
    dr: float
    dv: float
    dd: float
    dq: float


@dataclass(frozen=True)
class TransitionPlan:
    """Number of individuals moving into each compartment this epoch."""

    to_quarantine: int = 0
    to_hospital: int = 0
    to_recovered: int = 0
    to_vaccinated: int = 0
    to_dead: int = 0

    @property
    def leaving_infected(self) -> int:
        """Infected individuals removed from spreading (vaccinated come out of hospital)."""
        return self.to_quarantine + self.to_hospital + self.to_recovered + self.to_dead


def infection_pressure(census: CompartmentCensus, rates: EpidemicRates) -> float:
    """Force of infection acting on each susceptible: β₁I + β₃D + β₄R + β₂·PE·η."""
    return (
        rates.beta1_contact_infectious * census.i_count
        + rates.beta3_contact_deceased * census.d_count
        + rates.beta4_contact_recovered * census.r_count
        + rates.beta2_contact_pathogen * census.pe_load * rates.eta_decay
    )


def compartment_derivatives(
    census: CompartmentCensus, rates: EpidemicRates
) -> CompartmentDerivatives:
    """
    Evaluate the seven compartment equations on a census.

    Args:
        census: Current counts (S, I, H, R, V, D, Q) and pathogen load PE
        rates: Rate parameters

    Returns:
        CompartmentDerivatives with one value per compartment

    Example:
        >>> rates = EpidemicRates(alpha_hosp=0.2, gamma_recover=0.1, omega_hospital_response=0.1)
        >>> compartment_derivatives(CompartmentCensus(i_count=10, h_count=5), rates).dh
        1.0
    """
    s = census.s_count
    i = census.i_count
    h = census.h_count
    r = census.r_count
    v = census.v_count
    d = census.d_count
    q = census.q_count

    pressure = infection_pressure(census, rates)
    deaths = rates.tau_natural_death * s + rates.gamma_cap_death * i

    ds = rates.pi_recruit - pressure * s - deaths
    di = (
        pressure * s
        - (rates.gamma_cap_death + rates.gamma_recover) * i
        - rates.tau_natural_death * s
    )
    dh = rates.alpha_hosp * i - (rates.gamma_recover + rates.omega_hospital_response) * h
    dr = rates.gamma_recover * i - rates.gamma_cap_death * r
    dv = rates.gamma_recover * i - (rates.mu_vaccine_response + rates.vartheta_vaccinate) * v
    dd = deaths - rates.delta_burial * d
    dq = (
        rates.quarantine_intake * i
        - (rates.gamma_recover * r + rates.gamma_cap_death * d)
        - rates.xi_quarantine * q
    )

    return CompartmentDerivatives(ds=ds, di=di, dh=dh, dr=dr, dv=dv, dd=dd, dq=dq)


def draw_count(bound: float, available: int, rng: np.random.Generator) -> int:
    """
    Draw an integer uniformly from [0, round(bound)], capped at `available`.

    round is Python's round-half-to-even: bounds of exactly 0.5 give 0 and
    2.5 gives 2, so a lone infected case (death bound 0.5 at the default
    gamma_cap_death) is never drawn to die. Negative bounds are clamped at
    0; an empty source always yields 0.
    """
    if available <= 0:
        return 0
    upper = int(round(max(bound, 0.0)))
    if upper <= 0:
        return 0
    return min(int(rng.integers(0, upper + 1)), available)


def new_infection_bound(
    census: CompartmentCensus, rates: EpidemicRates, rate_scale: float
) -> float:
    """
    Upper bound on the infections a single spreader causes this epoch.

    The infected-compartment rate of change scaled by the current infected
    count and the spreader's movement rate (srate or lrate); never negative.
    """
    di = compartment_derivatives(census, rates).di
    return max(di, 0.0) * census.i_count * rate_scale


def transition_counts(
    census: CompartmentCensus,
    rates: EpidemicRates,
    rng: np.random.Generator,
    include_quarantine: bool = True,
) -> TransitionPlan:
    """
    Draw this epoch's compartment transitions.

    Each count is drawn uniformly from [0, round(rate × source)]: quarantine
    (ξ), hospitalization (α), recovery (γ) and death (Γ) take infected
    individuals, vaccination (ϑ) takes from the hospitalized draw. Draws are
    capped in that order so the infected source never goes negative.

    Args:
        census: Census whose i_count is the infected source
        rates: Rate parameters
        rng: Random stream owned by the caller
        include_quarantine: Draw the quarantine count too. The optimizer
            quarantines at the start of an epoch and draws the rest after
            spreading, so it calls this twice.

    Returns:
        TransitionPlan whose counts never exceed their sources
    """
    available = census.i_count

    to_quarantine = 0
    if include_quarantine:
        to_quarantine = draw_count(rates.xi_quarantine * available, available, rng)
        available -= to_quarantine

    source = available
    to_hospital = draw_count(rates.alpha_hosp * source, available, rng)
    available -= to_hospital
    to_vaccinated = draw_count(rates.vartheta_vaccinate * to_hospital, to_hospital, rng)
    to_recovered = draw_count(rates.gamma_recover * source, available, rng)
    available -= to_recovered
    to_dead = draw_count(rates.gamma_cap_death * source, available, rng)

    plan = TransitionPlan(
        to_quarantine=to_quarantine,
        to_hospital=to_hospital,
        to_recovered=to_recovered,
        to_vaccinated=to_vaccinated,
        to_dead=to_dead,
    )
    logger.debug(f"Transition plan from {census.i_count} infected: {plan}")
    return plan
