"""Tests for environment configuration module."""

import pytest

from src.utils.config import ToolkitSettings, get_settings, reset_settings


class TestToolkitSettings:
    """Test ToolkitSettings dataclass and loading."""

    def test_defaults(self):
        """Test direct ToolkitSettings instantiation uses defaults."""
        settings = ToolkitSettings()

        assert str(settings.output_dir) == "results"
        assert settings.jobs == 1
        assert settings.log_level == "WARNING"
        assert settings.metrics_enabled is False

    def test_from_env_without_variables(self, monkeypatch):
        """Test from_env falls back to defaults when nothing is set."""
        for name in ("EOSA_OUTPUT_DIR", "EOSA_JOBS", "EOSA_LOG_LEVEL", "METRICS_ENABLED"):
            monkeypatch.delenv(name, raising=False)

        settings = ToolkitSettings.from_env()

        assert str(settings.output_dir) == "results"
        assert settings.jobs == 1
        assert settings.metrics_enabled is False

    def test_from_env_with_all_vars(self, monkeypatch, tmp_path):
        """Test from_env loads all environment variables correctly."""
        monkeypatch.setenv("EOSA_OUTPUT_DIR", str(tmp_path / "out"))
        monkeypatch.setenv("EOSA_JOBS", "8")
        monkeypatch.setenv("EOSA_LOG_LEVEL", "debug")
        monkeypatch.setenv("METRICS_ENABLED", "true")

        settings = ToolkitSettings.from_env()

        assert settings.output_dir == tmp_path / "out"
        assert settings.jobs == 8
        assert settings.log_level == "DEBUG"
        assert settings.metrics_enabled is True

    @pytest.mark.parametrize("raw", ["zero", "0", "-2"])
    def test_from_env_rejects_bad_jobs(self, monkeypatch, raw):
        """Test EOSA_JOBS must be a positive integer."""
        monkeypatch.setenv("EOSA_JOBS", raw)

        with pytest.raises(ValueError, match="EOSA_JOBS"):
            ToolkitSettings.from_env()

    def test_get_settings_singleton(self, monkeypatch):
        """Test get_settings returns singleton instance until reset."""
        monkeypatch.setenv("EOSA_OUTPUT_DIR", "singleton-results")
        reset_settings()

        first = get_settings()
        second = get_settings()

        assert first is second
        assert str(first.output_dir) == "singleton-results"

        monkeypatch.setenv("EOSA_OUTPUT_DIR", "other-results")
        reset_settings()
        assert str(get_settings().output_dir) == "other-results"
