"""
Experiment configuration.

Built from the `experiment`, `algorithms`, `functions`, `eosa` and `rates`
sections of a workflow config file (see src.utils.config_loader).
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Set, Union

from src.baselines import BASELINE_ALGORITHMS, BaselineConfig
from src.eosa import EosaConfig
from src.epidemic import EpidemicRates
from src.objectives import ObjectiveError, UnknownFunctionError, get_objective
from src.utils.config_loader import ConfigError, load_config, validate_config
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CHECKPOINTS = (1, 50, 100, 200, 300, 400, 500)
ALGORITHMS = ("eosa",) + BASELINE_ALGORITHMS


class ExperimentConfigError(ValueError):
    """Invalid experiment configuration, carrying every problem found."""

    def __init__(self, errors: Sequence[ConfigError]):
        self.errors = list(errors)
        super().__init__(
            "Invalid experiment configuration:\n" + "\n".join(f"  - {e}" for e in self.errors)
        )


@dataclass(frozen=True)
class AlgorithmSpec:
    """
    One algorithm column of an experiment.

    `label` names the column in every output; it defaults to the algorithm
    name so the same algorithm can appear twice with different params.
    """

    name: str
    label: str = ""
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.label:
            object.__setattr__(self, "label", self.name)

    @classmethod
    def parse(cls, entry: Union[str, Mapping[str, Any]]) -> "AlgorithmSpec":
        if isinstance(entry, str):
            return cls(name=entry)
        return cls(
            name=str(entry["name"]),
            label=str(entry.get("label") or entry["name"]),
            params=dict(entry.get("params") or {}),
        )

    def build_config(
        self,
        population_size: int,
        epochs: int,
        seed: int,
        eosa_overrides: Optional[Mapping[str, Any]] = None,
        rates: Optional[EpidemicRates] = None,
    ) -> Union[EosaConfig, BaselineConfig]:
        """
        Run config for one seed.

        EOSA params are layered over the file's `eosa` section.

        Raises:
            ValueError: Unknown algorithm or parameter names
        """
        run = {"population_size": population_size, "epochs": epochs, "seed": seed}
        if self.name == "eosa":
            values = dict(eosa_overrides or {})
            values.update(self.params)
            values.update(run)
            return EosaConfig.from_mapping(values, rates=rates)
        return BaselineConfig.from_mapping(self.name, self.params, **run)


@dataclass(frozen=True)
class FunctionSpec:
    """Objective id and optional dimension (None means the registry default)."""

    id: str
    dim: Optional[int] = None

    @classmethod
    def parse(cls, entry: Union[str, Mapping[str, Any]]) -> "FunctionSpec":
        if isinstance(entry, str):
            return cls(id=entry.strip().upper())
        dim = entry.get("dim")
        return cls(id=str(entry["id"]).strip().upper(), dim=int(dim) if dim else None)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    A full experiment: algorithms × functions × runs.

    When checkpoints are not given, the default checkpoints that fit within
    `epochs` are used, plus `epochs` itself.
    """

    algorithms: Sequence[AlgorithmSpec]
    functions: Sequence[FunctionSpec]
    runs: int = 20
    epochs: int = 500
    population_size: int = 100
    master_seed: int = 0
    checkpoints: Sequence[int] = ()
    output_dir: str = "results"
    jobs: int = 1
    eosa: Mapping[str, Any] = field(default_factory=dict)
    rates: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "functions", tuple(self.functions))
        if not self.checkpoints:
            defaults = [c for c in DEFAULT_CHECKPOINTS if c <= self.epochs]
            if self.epochs >= 1 and self.epochs not in defaults:
                defaults.append(self.epochs)
            object.__setattr__(self, "checkpoints", tuple(defaults))
        else:
            object.__setattr__(self, "checkpoints", tuple(int(c) for c in self.checkpoints))

    @property
    def labels(self) -> List[str]:
        return [a.label for a in self.algorithms]

    def epidemic_rates(self) -> EpidemicRates:
        return EpidemicRates.from_mapping(self.rates)

    def validate(self) -> List[ConfigError]:
        """
        Domain checks on top of the file schema: value ranges, resolvable
        ids, unique labels and algorithm parameters.
        """
        errors: List[ConfigError] = []

        for name in ("runs", "epochs", "population_size", "jobs"):
            value = getattr(self, name)
            if value < 1:
                errors.append(ConfigError(f"experiment.{name}", "Must be >= 1", value))
        if self.master_seed < 0:
            errors.append(ConfigError("experiment.master_seed", "Must be >= 0", self.master_seed))

        checkpoints = list(self.checkpoints)
        if checkpoints != sorted(set(checkpoints)):
            errors.append(
                ConfigError("experiment.checkpoints", "Must be strictly increasing", checkpoints)
            )
        outside = [c for c in checkpoints if not 1 <= c <= self.epochs]
        if outside:
            errors.append(
                ConfigError(
                    "experiment.checkpoints", f"Must lie within [1, {self.epochs}]", outside
                )
            )

        if not self.algorithms:
            errors.append(ConfigError("algorithms", "Must be a non-empty list"))
        if not self.functions:
            errors.append(ConfigError("functions", "Must be a non-empty list"))

        rates: Optional[EpidemicRates] = None
        try:
            rates = self.epidemic_rates().check(strict_ranges=False)
        except ValueError as e:
            errors.append(ConfigError("rates", str(e)))

        seen: Set[str] = set()
        for i, spec in enumerate(self.algorithms):
            if spec.name not in ALGORITHMS:
                errors.append(
                    ConfigError(
                        f"algorithms[{i}].name", f"Invalid algorithm {ALGORITHMS}", spec.name
                    )
                )
                continue
            if spec.label in seen:
                errors.append(ConfigError(f"algorithms[{i}].label", "Duplicate label", spec.label))
            seen.add(spec.label)
            try:
                run_config = spec.build_config(
                    self.population_size, self.epochs, 0, self.eosa, rates
                )
                for problem in run_config.validate():
                    errors.append(ConfigError(f"algorithms[{i}]", problem))
            except (TypeError, ValueError) as e:
                errors.append(ConfigError(f"algorithms[{i}].params", str(e)))

        for i, fn in enumerate(self.functions):
            try:
                get_objective(fn.id, fn.dim)
            except UnknownFunctionError:
                errors.append(ConfigError(f"functions[{i}]", "Unknown function id", fn.id))
            except ObjectiveError as e:
                errors.append(ConfigError(f"functions[{i}]", str(e), fn.id))

        return errors

    def check(self) -> "ExperimentConfig":
        errors = self.validate()
        if errors:
            raise ExperimentConfigError(errors)
        return self

    def to_mapping(self) -> Dict[str, Any]:
        """Plain-data form recorded in the archive manifest."""
        return {
            "runs": self.runs,
            "epochs": self.epochs,
            "population_size": self.population_size,
            "master_seed": self.master_seed,
            "checkpoints": list(self.checkpoints),
            "algorithms": [
                {"name": a.name, "label": a.label, "params": dict(a.params)}
                for a in self.algorithms
            ],
            "functions": [{"id": f.id, "dim": f.dim} for f in self.functions],
            "eosa": dict(self.eosa),
            "rates": dict(self.rates),
        }

    @classmethod
    def from_mapping(cls, config: Mapping[str, Any]) -> "ExperimentConfig":
        """
        Build from a loaded workflow config.

        Raises:
            ExperimentConfigError: Schema or domain validation failed
        """
        schema_errors = validate_config(dict(config))
        if schema_errors:
            raise ExperimentConfigError(schema_errors)

        section = dict(config.get("experiment") or {})
        experiment = cls(
            algorithms=[AlgorithmSpec.parse(a) for a in config["algorithms"]],
            functions=[FunctionSpec.parse(f) for f in config["functions"]],
            runs=section.get("runs", 20),
            epochs=section.get("epochs", 500),
            population_size=section.get("population_size", 100),
            master_seed=section.get("master_seed", 0),
            checkpoints=section.get("checkpoints") or (),
            output_dir=str(section.get("output_dir", "results")),
            jobs=section.get("jobs", 1),
            eosa=dict(config.get("eosa") or {}),
            rates=dict(config.get("rates") or {}),
        )
        return experiment.check()

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ExperimentConfig":
        """
        Load and validate an experiment config file.

        Raises:
            FileNotFoundError: Missing file
            ConfigParseError: Malformed YAML (with line context)
            ExperimentConfigError: Invalid content
        """
        config = load_config(path)
        if config.get("workflow") != "experiment":
            raise ExperimentConfigError(
                [ConfigError("workflow", "Must be 'experiment'", config.get("workflow"))]
            )
        logger.debug(f"Experiment config loaded from {path}")
        return cls.from_mapping(config)
