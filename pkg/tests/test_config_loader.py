"""Tests for configuration loader and validator."""

from pathlib import Path
from typing import Any, Dict

import pytest

from src.utils.config_loader import (
    ConfigError,
    ConfigParseError,
    get_config_examples,
    load_config,
    validate_config,
)

EXAMPLES_DIR = Path(__file__).parent.parent / "config" / "examples"


def _experiment(**overrides: Any) -> Dict[str, Any]:
    config: Dict[str, Any] = {
        "version": "1.0",
        "workflow": "experiment",
        "experiment": {"runs": 2, "epochs": 10},
        "algorithms": ["eosa", {"name": "pso", "params": {"inertia": 0.7}}],
        "functions": ["F1", {"id": "F34", "dim": 5}],
    }
    config.update(overrides)
    return config


class TestConfigLoader:
    """Tests for load_config function."""

    def test_load_valid_yaml(self, tmp_path: Path):
        """Test loading valid YAML configuration."""
        config_file = tmp_path / "test.yaml"
        config_file.write_text(
            """
version: "1.0"
workflow: experiment
experiment:
  runs: 3
algorithms: [eosa]
functions: [F1]
"""
        )

        config = load_config(config_file)
        assert config["version"] == "1.0"
        assert config["workflow"] == "experiment"
        assert config["experiment"]["runs"] == 3

    def test_load_nonexistent_file(self):
        """Test loading non-existent file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_config("nonexistent.yaml")

    def test_load_empty_file(self, tmp_path: Path):
        """Test loading empty file raises ValueError."""
        config_file = tmp_path / "empty.yaml"
        config_file.write_text("")

        with pytest.raises(ValueError, match="empty"):
            load_config(config_file)

    def test_load_invalid_yaml_reports_line(self, tmp_path: Path):
        """Test malformed YAML raises ConfigParseError with line context."""
        config_file = tmp_path / "invalid.yaml"
        config_file.write_text('version: "1.0"\nworkflow: [unclosed bracket\n')

        with pytest.raises(ConfigParseError) as excinfo:
            load_config(config_file)

        assert excinfo.value.line is not None
        assert "line" in str(excinfo.value)

    def test_load_non_mapping(self, tmp_path: Path):
        """Test a top-level list is rejected."""
        config_file = tmp_path / "list.yaml"
        config_file.write_text("- a\n- b\n")

        with pytest.raises(ValueError, match="mapping"):
            load_config(config_file)

    def test_load_directory_raises_error(self, tmp_path: Path):
        """Test loading directory path raises ValueError."""
        with pytest.raises(ValueError, match="not a file"):
            load_config(tmp_path)


class TestConfigValidation:
    """Tests for validate_config function."""

    def test_validate_missing_version(self):
        """Test validation fails when version is missing."""
        config: Dict[str, Any] = {"workflow": "simulate"}
        errors = validate_config(config)

        assert any("version" in e.field for e in errors)

    def test_validate_unsupported_version(self):
        """Test validation fails for unsupported version."""
        config: Dict[str, Any] = {"version": "99.0", "workflow": "simulate"}
        errors = validate_config(config)

        version_errors = [e for e in errors if "version" in e.field]
        assert version_errors
        assert "unsupported" in str(version_errors[0]).lower()

    def test_validate_missing_workflow(self):
        """Test validation fails when workflow is missing."""
        errors = validate_config({"version": "1.0"})

        assert any("workflow" in e.field for e in errors)

    def test_validate_invalid_workflow(self):
        """Test validation fails for invalid workflow type."""
        errors = validate_config({"version": "1.0", "workflow": "blend_batch"})

        assert any("workflow" in e.field for e in errors)

    def test_validate_valid_experiment(self):
        """Test validation passes for a valid experiment config."""
        assert validate_config(_experiment()) == []

    def test_validate_experiment_missing_sections(self):
        """Test experiment requires experiment, algorithms and functions."""
        config = {"version": "1.0", "workflow": "experiment"}
        fields = {e.field for e in validate_config(config)}

        assert {"experiment", "algorithms", "functions"} <= fields

    def test_validate_experiment_unknown_key(self):
        """Test unknown keys in the experiment section are reported."""
        config = _experiment(experiment={"runs": 2, "epoch": 10})
        errors = validate_config(config)

        assert [e.field for e in errors] == ["experiment.epoch"]

    @pytest.mark.parametrize("key", ["runs", "epochs", "population_size", "jobs"])
    @pytest.mark.parametrize("value", [0, -1, 2.5, "ten", True])
    def test_validate_experiment_positive_integers(self, key, value):
        """Test counts must be positive integers."""
        errors = validate_config(_experiment(experiment={key: value}))

        assert any(e.field == f"experiment.{key}" for e in errors)

    def test_validate_master_seed(self):
        """Test master_seed must be a non-negative integer."""
        errors = validate_config(_experiment(experiment={"master_seed": -5}))

        assert any(e.field == "experiment.master_seed" for e in errors)

    def test_validate_checkpoints_order(self):
        """Test checkpoints must be strictly increasing positive integers."""
        unsorted = validate_config(_experiment(experiment={"checkpoints": [50, 1]}))
        negative = validate_config(_experiment(experiment={"checkpoints": [0, 5]}))

        assert any("increasing" in e.message for e in unsorted)
        assert any(e.field == "experiment.checkpoints" for e in negative)

    def test_validate_invalid_algorithm(self):
        """Test unknown algorithm names are reported with their index."""
        errors = validate_config(_experiment(algorithms=["eosa", {"name": "abc"}]))

        assert any(e.field == "algorithms[1].name" for e in errors)

    def test_validate_algorithm_params_type(self):
        """Test params must be a mapping."""
        errors = validate_config(_experiment(algorithms=[{"name": "de", "params": [1, 2]}]))

        assert any(e.field == "algorithms[0].params" for e in errors)

    def test_validate_function_entries(self):
        """Test function entries must be ids or {id, dim} mappings."""
        errors = validate_config(_experiment(functions=[{"dim": 3}, 7, {"id": "F1", "dim": 0}]))
        fields = {e.field for e in errors}

        assert {"functions[0].id", "functions[1]", "functions[2].dim"} <= fields

    def test_validate_rates_must_be_numbers(self):
        """Test rate overrides must be numeric."""
        config = {"version": "1.0", "workflow": "simulate", "rates": {"xi_quarantine": "high"}}
        errors = validate_config(config)

        assert [e.field for e in errors] == ["rates.xi_quarantine"]

    def test_validate_optimize_section_keys(self):
        """Test unknown keys in the optimize section are reported."""
        config = {
            "version": "1.0",
            "workflow": "optimize",
            "optimize": {"function": "F34", "iterations": 10},
        }
        errors = validate_config(config)

        assert [e.field for e in errors] == ["optimize.iterations"]


class TestConfigError:
    """Tests for ConfigError formatting."""

    def test_config_error_string_without_value(self):
        """Test error string when no value is attached."""
        error = ConfigError("functions", "Missing required field")
        assert str(error) == "functions: Missing required field"

    def test_config_error_string_with_value(self):
        """Test error string includes the offending value."""
        error = ConfigError("experiment.runs", "Must be a positive integer", 0)
        assert str(error) == "experiment.runs: Must be a positive integer (got: 0)"


class TestConfigExamples:
    """Tests for example configurations."""

    def test_get_config_examples_returns_dict(self):
        """Test get_config_examples returns dictionary."""
        examples = get_config_examples()
        assert isinstance(examples, dict)
        assert set(examples) == {"experiment", "optimize", "simulate"}

    def test_config_examples_pass_validation(self):
        """Test that the built-in templates validate."""
        import yaml

        for name, template in get_config_examples().items():
            config = yaml.safe_load(template)
            assert config["workflow"] == name
            assert validate_config(config) == [], name

    @pytest.mark.parametrize(
        "name", ["experiment.yaml", "smoke_experiment.yaml", "optimize.yaml", "simulate.yaml"]
    )
    def test_example_files_pass_validation(self, name: str):
        """Test that config/examples files load and validate."""
        config = load_config(EXAMPLES_DIR / name)
        assert validate_config(config) == []
