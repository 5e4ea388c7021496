"""
Configuration loader and validator for toolkit workflows.

Loads YAML configuration files for experiments, single optimizations and
propagation simulations, and validates them against the expected schema.

Example config file (config/examples/experiment.yaml):
    ```yaml
    version: "1.0"
    workflow: experiment

    experiment:
      runs: 20
      epochs: 500
      population_size: 100
      master_seed: 2022
      checkpoints: [1, 50, 100, 200, 300, 400, 500]
      output_dir: results/experiment

    algorithms:
      - name: eosa
      - name: pso
        params: {inertia: 0.729}

    functions: [F1, F27, F34]
    ```

Usage:
    >>> from src.utils.config_loader import load_config, validate_config
    >>> config = load_config("config/examples/experiment.yaml")
    >>> errors = validate_config(config)
    >>> if not errors:
    ...     print(f"Running {len(config['algorithms'])} algorithms")
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

try:
    import yaml
except ImportError:
    yaml = None  # type: ignore

from src.utils.logging import get_logger

logger = get_logger(__name__)


SUPPORTED_VERSIONS = ["1.0"]

VALID_WORKFLOWS = [
    "experiment",
    "optimize",
    "simulate",
]

VALID_ALGORITHMS = ["eosa", "pso", "de", "ga"]

# Keys accepted in the `experiment` section
EXPERIMENT_KEYS = {
    "runs",
    "epochs",
    "population_size",
    "master_seed",
    "checkpoints",
    "output_dir",
    "jobs",
}

# Keys accepted in the `optimize` section
OPTIMIZE_KEYS = {
    "function",
    "algorithm",
    "dim",
    "epochs",
    "population_size",
    "seed",
    "out",
    "params",
    "history_out",
}

# Keys accepted in the `simulate` section
SIMULATE_KEYS = {"population_size", "epochs", "seed", "evdincub", "out"}


@dataclass
class ConfigError:
    """Validation error in configuration file."""

    field: str
    message: str
    value: Optional[Any] = None

    def __str__(self) -> str:
        """Format error message."""
        if self.value is not None:
            return f"{self.field}: {self.message} (got: {self.value})"
        return f"{self.field}: {self.message}"


class ConfigParseError(ValueError):
    """Malformed YAML, carrying the 1-based line and column of the problem."""

    def __init__(self, path: Path, message: str, line: Optional[int], column: Optional[int]):
        self.path = path
        self.line = line
        self.column = column
        location = f"line {line}, column {column}" if line is not None else "unknown location"
        super().__init__(f"{path}: {location}: {message}")


def load_config(config_path: Union[str, Path]) -> Dict[str, Any]:
    """
    Load configuration from YAML file.

    Args:
        config_path: Path to YAML configuration file

    Returns:
        Dictionary containing parsed configuration

    Raises:
        ImportError: If PyYAML is not installed
        FileNotFoundError: If config file doesn't exist
        ConfigParseError: If YAML is malformed (message carries line context)
        ValueError: If the path is not a file, the file is empty or not a mapping

    Example:
        >>> config = load_config("config/examples/experiment.yaml")
        >>> print(config["workflow"])
        experiment
    """
    if yaml is None:
        raise ImportError(
            "PyYAML is required for config loading. Install with: pip install pyyaml"
        )

    path = Path(config_path)
    logger.info(f"Loading configuration from: {path}")

    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {path}")

    if not path.is_file():
        raise ValueError(f"Configuration path is not a file: {path}")

    try:
        with open(path, "r") as f:
            config = yaml.safe_load(f)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        logger.error(f"Failed to parse YAML: {e}")
        raise ConfigParseError(
            path,
            str(e.problem or e),
            mark.line + 1 if mark is not None else None,
            mark.column + 1 if mark is not None else None,
        ) from e
    except yaml.YAMLError as e:
        logger.error(f"Failed to parse YAML: {e}")
        raise ConfigParseError(path, str(e), None, None) from e

    if config is None:
        raise ValueError("Configuration file is empty")

    if not isinstance(config, dict):
        raise ValueError(
            f"Configuration must be a mapping at the top level (got: {type(config).__name__})"
        )

    logger.info(f"✓ Configuration loaded: {config.get('workflow', 'unknown')}")
    return dict(config)


def validate_config(config: Dict[str, Any]) -> List[ConfigError]:
    """
    Validate configuration against expected schema.

    Checks structure and value types; whether function ids resolve and
    whether numeric parameters are in range is checked by the domain
    objects built from the configuration.

    Args:
        config: Configuration dictionary to validate

    Returns:
        List of validation errors (empty if valid)

    Example:
        >>> config = {"version": "1.0", "workflow": "simulate"}
        >>> errors = validate_config(config)
        >>> if errors:
        ...     for error in errors:
        ...         print(f"❌ {error}")
    """
    errors: List[ConfigError] = []

    if "version" not in config:
        errors.append(ConfigError("version", "Missing required field"))
    elif str(config["version"]) not in SUPPORTED_VERSIONS:
        errors.append(
            ConfigError(
                "version",
                f"Unsupported version (supported: {SUPPORTED_VERSIONS})",
                config["version"],
            )
        )

    if "workflow" not in config:
        errors.append(ConfigError("workflow", "Missing required field"))
    elif config["workflow"] not in VALID_WORKFLOWS:
        errors.append(
            ConfigError(
                "workflow",
                f"Invalid workflow type (valid: {VALID_WORKFLOWS})",
                config["workflow"],
            )
        )

    workflow = config.get("workflow")

    if workflow == "experiment":
        errors.extend(_validate_experiment(config))
    elif workflow == "optimize":
        errors.extend(_validate_section(config, "optimize", OPTIMIZE_KEYS, required=False))
    elif workflow == "simulate":
        errors.extend(_validate_section(config, "simulate", SIMULATE_KEYS, required=False))

    errors.extend(_validate_mapping_of_numbers(config, "rates"))
    if "eosa" in config and not isinstance(config["eosa"], dict):
        errors.append(ConfigError("eosa", "Must be a mapping", type(config["eosa"]).__name__))

    if errors:
        logger.warning(f"Configuration validation failed with {len(errors)} errors")
    else:
        logger.info("✓ Configuration validation passed")

    return errors


def _validate_section(
    config: Dict[str, Any], name: str, allowed: set, required: bool
) -> List[ConfigError]:
    """Validate that a section is a mapping with only known keys."""
    errors: List[ConfigError] = []

    if name not in config:
        if required:
            errors.append(ConfigError(name, f"Missing required field for {config['workflow']}"))
        return errors

    section = config[name]
    if not isinstance(section, dict):
        errors.append(ConfigError(name, "Must be a mapping", type(section).__name__))
        return errors

    for key in sorted(set(section) - allowed):
        errors.append(ConfigError(f"{name}.{key}", f"Unknown key (valid: {sorted(allowed)})"))

    return errors


def _validate_mapping_of_numbers(config: Dict[str, Any], name: str) -> List[ConfigError]:
    """Validate an optional mapping whose values must all be numbers."""
    errors: List[ConfigError] = []
    if name not in config:
        return errors

    section = config[name]
    if not isinstance(section, dict):
        errors.append(ConfigError(name, "Must be a mapping", type(section).__name__))
        return errors

    for key, value in section.items():
        if value is None:
            continue
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            errors.append(ConfigError(f"{name}.{key}", "Must be a number", value))
    return errors


def _is_positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def _validate_experiment(config: Dict[str, Any]) -> List[ConfigError]:
    """Validate experiment workflow configuration."""
    errors = _validate_section(config, "experiment", EXPERIMENT_KEYS, required=True)

    section = config.get("experiment")
    if isinstance(section, dict):
        for key in ("runs", "epochs", "population_size", "jobs"):
            if key in section and not _is_positive_int(section[key]):
                errors.append(
                    ConfigError(f"experiment.{key}", "Must be a positive integer", section[key])
                )

        if "master_seed" in section:
            seed = section["master_seed"]
            if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
                errors.append(
                    ConfigError("experiment.master_seed", "Must be a non-negative integer", seed)
                )

        if "checkpoints" in section:
            checkpoints = section["checkpoints"]
            if not isinstance(checkpoints, list) or not all(
                _is_positive_int(c) for c in checkpoints
            ):
                errors.append(
                    ConfigError(
                        "experiment.checkpoints",
                        "Must be a list of positive integers",
                        checkpoints,
                    )
                )
            elif checkpoints != sorted(set(checkpoints)):
                errors.append(
                    ConfigError(
                        "experiment.checkpoints", "Must be strictly increasing", checkpoints
                    )
                )

    if "algorithms" not in config:
        errors.append(ConfigError("algorithms", "Missing required field for experiment"))
    elif not isinstance(config["algorithms"], list) or not config["algorithms"]:
        errors.append(ConfigError("algorithms", "Must be a non-empty list"))
    else:
        for i, entry in enumerate(config["algorithms"]):
            prefix = f"algorithms[{i}]"
            if isinstance(entry, str):
                entry = {"name": entry}
            if not isinstance(entry, dict):
                errors.append(ConfigError(prefix, "Must be a name or a mapping", entry))
                continue
            if "name" not in entry:
                errors.append(ConfigError(f"{prefix}.name", "Missing required field"))
            elif entry["name"] not in VALID_ALGORITHMS:
                errors.append(
                    ConfigError(
                        f"{prefix}.name",
                        f"Invalid algorithm (valid: {VALID_ALGORITHMS})",
                        entry["name"],
                    )
                )
            if "params" in entry and not isinstance(entry["params"], dict):
                errors.append(ConfigError(f"{prefix}.params", "Must be a mapping"))

    if "functions" not in config:
        errors.append(ConfigError("functions", "Missing required field for experiment"))
    elif not isinstance(config["functions"], list) or not config["functions"]:
        errors.append(ConfigError("functions", "Must be a non-empty list"))
    else:
        for i, entry in enumerate(config["functions"]):
            if isinstance(entry, dict):
                if "id" not in entry:
                    errors.append(ConfigError(f"functions[{i}].id", "Missing required field"))
                if "dim" in entry and not _is_positive_int(entry["dim"]):
                    errors.append(
                        ConfigError(f"functions[{i}].dim", "Must be a positive integer")
                    )
            elif not isinstance(entry, str):
                errors.append(ConfigError(f"functions[{i}]", "Must be an id or a mapping", entry))

    return errors


def get_config_examples() -> Dict[str, str]:
    """
    Get example configuration templates.

    Returns:
        Dictionary mapping workflow names to YAML templates

    Example:
        >>> examples = get_config_examples()
        >>> print(examples["experiment"])
    """
    examples = {
        "experiment": """version: "1.0"
workflow: experiment

experiment:
  runs: 20
  epochs: 500
  population_size: 100
  master_seed: 2022
  checkpoints: [1, 50, 100, 200, 300, 400, 500]
  output_dir: results/experiment

algorithms:
  - name: eosa
  - name: pso
  - name: de
  - name: ga

functions: [F1, F27, F34]
""",
        "optimize": """version: "1.0"
workflow: optimize

optimize:
  function: F34
  algorithm: eosa
  dim: 30
  epochs: 500
  population_size: 100
  seed: 7

eosa:
  srate: 0.1
  lrate: 1.0
  rho: 0.5
""",
        "simulate": """version: "1.0"
workflow: simulate

simulate:
  population_size: 200
  epochs: 50
  seed: 1

rates:
  xi_quarantine: 0.1
  gamma_cap_death: 0.5
""",
    }

    return examples
