"""Tests for the command-line interface."""

import subprocess
import sys
from pathlib import Path

import pandas as pd
import pytest
import yaml

from src.cli import EXIT_INVALID, EXIT_OK, main, parse_rate_overrides

# Project paths
project_root = Path(__file__).parent.parent
scripts_dir = project_root / "scripts"


def _write_summary(path, rows):
    frame = pd.DataFrame(rows, columns=["algorithm", "function", "mean"])
    frame.to_csv(path, index=False)
    return path


def _two_algorithm_summary(path):
    rows = []
    for k in range(8):
        rows.append(("eosa", f"F{k + 1}", 1.0 + k))
    for k in range(8):
        rows.append(("ga", f"F{k + 1}", 10.0 + 3 * k))
    return _write_summary(path, rows)


def _experiment_config(path, with_output_dir=True):
    experiment = {"runs": 1, "epochs": 3, "population_size": 8, "master_seed": 1}
    if with_output_dir:
        experiment["output_dir"] = str(path.parent / "from-config")
    config = {
        "version": "1.0",
        "workflow": "experiment",
        "experiment": experiment,
        "algorithms": ["eosa", "pso"],
        "functions": [{"id": "F34", "dim": 2}],
    }
    path.write_text(yaml.safe_dump(config))
    return path


class TestScript:
    """Tests for the scripts/eosa.py entry point."""

    def test_help_message(self):
        """Test that --help works."""
        result = subprocess.run(
            [sys.executable, str(scripts_dir / "eosa.py"), "--help"],
            capture_output=True,
            text=True,
            cwd=project_root,
        )
        assert result.returncode == 0
        assert "Ebola Optimization Search Algorithm" in result.stdout
        for command in ("optimize", "experiment", "simulate", "stats", "list-functions"):
            assert command in result.stdout

    def test_missing_command(self):
        """Test that a subcommand is required."""
        result = subprocess.run(
            [sys.executable, str(scripts_dir / "eosa.py")],
            capture_output=True,
            text=True,
            cwd=project_root,
        )
        assert result.returncode != 0
        assert "required" in result.stderr.lower()


class TestRateOverrides:
    """Tests for NAME=VALUE parsing."""

    def test_parse(self):
        """Test repeated overrides."""
        assert parse_rate_overrides(["xi_quarantine=0", " pi_recovery = 0.3"]) == {
            "xi_quarantine": 0.0,
            "pi_recovery": 0.3,
        }

    def test_missing_equals(self, capsys):
        """Test that a bare name is invalid input."""
        code = main(["simulate", "--rate", "xi_quarantine", "--epochs", "2"])

        assert code == EXIT_INVALID
        assert "NAME=VALUE" in capsys.readouterr().err

    def test_unknown_rate(self, capsys, tmp_path):
        """Test that an unknown rate name is invalid input."""
        code = main(["simulate", "--rate", "omega=1", "--out", str(tmp_path / "c.csv")])

        assert code == EXIT_INVALID
        assert "omega" in capsys.readouterr().err


class TestOptimizeCommand:
    """Tests for `optimize`."""

    def _args(self, out, *extra):
        return [
            "optimize",
            "--function",
            "F34",
            "--dim",
            "3",
            "--epochs",
            "15",
            "--psize",
            "10",
            "--seed",
            "3",
            "--out",
            str(out),
            *extra,
        ]

    def test_prints_final_fitness_and_writes_csv(self, capsys, tmp_path):
        """Test the first stdout line and the run CSV."""
        code = main(self._args(tmp_path / "run.csv"))

        assert code == EXIT_OK
        first = capsys.readouterr().out.splitlines()[0]
        frame = pd.read_csv(tmp_path / "run.csv", float_precision="round_trip")
        assert list(frame.columns) == ["epoch", "gbest_fitness"]
        assert len(frame) == 15
        assert float(first) == frame["gbest_fitness"].iloc[-1]

    def test_replay_is_byte_identical(self, tmp_path):
        """Test that the same flags write the same CSV."""
        assert main(self._args(tmp_path / "a.csv")) == EXIT_OK
        assert main(self._args(tmp_path / "b.csv")) == EXIT_OK

        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    @pytest.mark.parametrize("algorithm", ["pso", "de", "ga"])
    def test_baselines(self, algorithm, tmp_path):
        """Test every baseline through the same command."""
        code = main(self._args(tmp_path / "run.csv", "--algo", algorithm))

        assert code == EXIT_OK
        assert len(pd.read_csv(tmp_path / "run.csv")) == 15

    def test_unknown_function(self, capsys, tmp_path):
        """Test that an unknown id exits with status 2 and names the id."""
        code = main(["optimize", "--function", "F999", "--out", str(tmp_path / "x.csv")])

        assert code == EXIT_INVALID
        err = capsys.readouterr().err
        assert "❌ Error:" in err
        assert "F999" in err
        assert not (tmp_path / "x.csv").exists()

    def test_dimension_below_minimum(self, capsys, tmp_path):
        """Test that a dimension the function cannot take is invalid input."""
        code = main(["optimize", "--function", "F25", "--dim", "2", "--out", str(tmp_path / "x")])

        assert code == EXIT_INVALID
        assert "F25" in capsys.readouterr().err

    def test_rate_flag_rejected_for_baseline(self, capsys, tmp_path):
        """Test that epidemic rates only apply to EOSA."""
        code = main(self._args(tmp_path / "x.csv", "--algo", "pso", "--rate", "xi_quarantine=0"))

        assert code == EXIT_INVALID
        assert "eosa only" in capsys.readouterr().err

    def test_default_output_dir_from_environment(self, monkeypatch, tmp_path):
        """Test that EOSA_OUTPUT_DIR sets where the run CSV goes."""
        monkeypatch.setenv("EOSA_OUTPUT_DIR", str(tmp_path / "out"))

        code = main(["optimize", "-f", "F34", "--dim", "2", "--epochs", "3", "--psize", "6"])

        assert code == EXIT_OK
        assert (tmp_path / "out" / "optimize" / "eosa_F34_seed0.csv").is_file()

    def test_config_file(self, capsys, tmp_path):
        """Test values taken from an optimize config, flags taking precedence."""
        config = tmp_path / "opt.yaml"
        config.write_text(
            yaml.safe_dump(
                {
                    "version": "1.0",
                    "workflow": "optimize",
                    "optimize": {"function": "F1", "algorithm": "de", "epochs": 4},
                }
            )
        )

        out = str(tmp_path / "r")
        code = main(["optimize", "--config", str(config), "--psize", "8", "-o", out])

        assert code == EXIT_OK
        assert "de on F1" in capsys.readouterr().out
        assert len(pd.read_csv(tmp_path / "r")) == 4

    @pytest.mark.parametrize("algorithm", ["eosa", "pso"])
    def test_history_out(self, algorithm, capsys, tmp_path):
        """Test that --history-out writes every evaluated point inside the bounds."""
        history = tmp_path / "history" / "points.csv"

        code = main(
            self._args(tmp_path / "run.csv", "--algo", algorithm, "--history-out", str(history))
        )

        assert code == EXIT_OK
        out = capsys.readouterr().out
        frame = pd.read_csv(history, float_precision="round_trip")
        assert list(frame.columns) == ["epoch", "individual", "fitness", "x0", "x1", "x2"]
        assert f"Search history ({len(frame)} points)" in out
        assert (frame[["x0", "x1", "x2"]].abs() <= 100.0).all().all()
        assert frame["epoch"].max() <= 15
        if algorithm == "pso":
            assert len(frame) == 10 * 16

    def test_help_warns_about_literal_mode(self, capsys):
        """Test that the optimize help names the weak default movement mode."""
        with pytest.raises(SystemExit):
            main(["optimize", "--help"])

        out = " ".join(capsys.readouterr().out.split())
        assert "literal, which barely improves" in out
        assert "differential converges" in out

    def test_no_history_without_flag(self, tmp_path):
        """Test that the run CSV is the only output by default."""
        assert main(self._args(tmp_path / "run.csv")) == EXIT_OK

        assert [p.name for p in tmp_path.iterdir()] == ["run.csv"]


class TestExperimentCommand:
    """Tests for `experiment`."""

    def test_creates_missing_output_dir(self, capsys, tmp_path):
        """Test a small experiment into a directory that does not exist yet."""
        config = _experiment_config(tmp_path / "exp.yaml")
        out = tmp_path / "deep" / "archive"

        code = main(["experiment", str(config), "--out", str(out)])

        assert code == EXIT_OK
        assert (out / "summary.csv").is_file()
        assert (out / "manifest.yaml").is_file()
        assert (out / "runs" / "pso" / "F34" / "run_000.csv").is_file()
        assert "2 runs" in capsys.readouterr().out

    def test_output_dir_from_config(self, tmp_path):
        """Test that experiment.output_dir is used without --out."""
        config = _experiment_config(tmp_path / "exp.yaml")

        assert main(["experiment", str(config)]) == EXIT_OK
        assert (tmp_path / "from-config" / "timing.csv").is_file()

    def test_output_dir_from_environment(self, monkeypatch, tmp_path):
        """Test the EOSA_OUTPUT_DIR default when the config names no directory."""
        monkeypatch.setenv("EOSA_OUTPUT_DIR", str(tmp_path / "env"))
        config = _experiment_config(tmp_path / "exp.yaml", with_output_dir=False)

        assert main(["experiment", str(config)]) == EXIT_OK
        assert (tmp_path / "env" / "experiment" / "convergence.csv").is_file()

    def test_wrong_workflow(self, capsys, tmp_path):
        """Test that a simulate config is rejected."""
        config = tmp_path / "sim.yaml"
        config.write_text('version: "1.0"\nworkflow: simulate\n')

        assert main(["experiment", str(config)]) == EXIT_INVALID
        assert "workflow" in capsys.readouterr().err

    def test_missing_config(self, capsys, tmp_path):
        """Test that a missing file is invalid input."""
        assert main(["experiment", str(tmp_path / "nope.yaml")]) == EXIT_INVALID
        assert "not found" in capsys.readouterr().err

    def test_unknown_function_in_config(self, capsys, tmp_path):
        """Test that domain errors in the config are invalid input."""
        config = tmp_path / "exp.yaml"
        config.write_text(
            'version: "1.0"\nworkflow: experiment\nexperiment: {runs: 1}\n'
            "algorithms: [eosa]\nfunctions: [F999]\n"
        )

        assert main(["experiment", str(config)]) == EXIT_INVALID
        assert "F999" in capsys.readouterr().err


class TestSimulateCommand:
    """Tests for `simulate`."""

    def test_writes_census(self, capsys, tmp_path):
        """Test the census file and the summary line."""
        out = tmp_path / "sim" / "census.csv"

        code = main(["simulate", "--psize", "30", "--epochs", "10", "--seed", "4", "-o", str(out)])

        assert code == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "epoch,S,I,H,R,V,D,Q"
        assert len(lines) == 11
        assert "Simulated 10 epochs" in capsys.readouterr().out

    def test_population_too_small(self, capsys, tmp_path):
        """Test that a single individual is invalid input."""
        code = main(["simulate", "--psize", "1", "-o", str(tmp_path / "c.csv")])

        assert code == EXIT_INVALID
        assert "population_size" in capsys.readouterr().err


class TestStatsCommand:
    """Tests for `stats`."""

    def test_two_algorithms(self, capsys, tmp_path):
        """Test Friedman with one degree of freedom and one Wilcoxon pair."""
        summary = _two_algorithm_summary(tmp_path / "summary.csv")
        out = tmp_path / "stats"

        code = main(["stats", str(summary), "--out", str(out)])

        assert code == EXIT_OK
        test = pd.read_csv(out / "friedman_test.csv")
        assert test["df"].tolist() == [1]
        ranks = pd.read_csv(out / "friedman.csv")
        assert dict(zip(ranks["algorithm"], ranks["rank"])) == {"eosa": 1, "ga": 2}
        pairs = pd.read_csv(out / "wilcoxon.csv")
        assert pairs["pair"].tolist() == ["ga-eosa"]
        assert pairs["z"].iloc[0] < 0
        assert "chi_square=8" in capsys.readouterr().out

    def test_malformed_summary(self, capsys, tmp_path):
        """Test that a non-numeric statistic is invalid input with the row named."""
        summary = _write_summary(
            tmp_path / "bad.csv", [("eosa", "F1", 1.0), ("ga", "F1", "abc")]
        )

        code = main(["stats", str(summary), "--out", str(tmp_path / "stats")])

        assert code == EXIT_INVALID
        assert "row" in capsys.readouterr().err

    def test_unknown_reference(self, capsys, tmp_path):
        """Test that the reference algorithm must be in the summary."""
        summary = _two_algorithm_summary(tmp_path / "summary.csv")

        code = main(["stats", str(summary), "--reference", "woa", "-o", str(tmp_path / "s")])

        assert code == EXIT_INVALID
        assert "woa" in capsys.readouterr().err

    def test_missing_summary(self, tmp_path):
        """Test that a missing file is invalid input."""
        assert main(["stats", str(tmp_path / "none.csv")]) == EXIT_INVALID


class TestListFunctionsCommand:
    """Tests for `list-functions`."""

    def test_print_suite(self, capsys):
        """Test the printed CEC-based suite."""
        assert main(["list-functions", "--suite", "cec"]) == EXIT_OK

        lines = capsys.readouterr().out.splitlines()
        assert lines[-1] == "44 functions"
        assert lines[0].startswith("CEC01")

    def test_write_csv(self, tmp_path):
        """Test the registry CSV."""
        out = tmp_path / "registry.csv"

        assert main(["list-functions", "--out", str(out)]) == EXIT_OK

        frame = pd.read_csv(out)
        assert list(frame.columns) == ["id", "name", "dim", "lower", "upper", "known_min", "tags"]
        assert {"F1", "F47", "CEC14", "C30"} <= set(frame["id"])
