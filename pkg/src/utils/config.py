"""
Environment configuration loader for the EOSA toolkit.

Loads settings from a .env file or environment variables: the default
output directory for run artifacts, the default worker count, log level and
whether Prometheus metrics are collected.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional


@dataclass
class ToolkitSettings:
    """Toolkit environment configuration."""

    # Where optimize/experiment/simulate/stats write when no --out is given
    output_dir: Path = Path("results")

    # Parallel run dispatch for experiments
    jobs: int = 1

    log_level: str = "WARNING"
    metrics_enabled: bool = False

    @classmethod
    def from_env(cls) -> "ToolkitSettings":
        """
        Load configuration from environment variables.

        Attempts to load .env file if present, then reads from os.environ.

        Returns:
            ToolkitSettings instance with loaded values

        Raises:
            ValueError: If EOSA_JOBS is not a positive integer
        """
        try:
            from dotenv import load_dotenv  # type: ignore

            env_path = Path(__file__).parent.parent.parent / ".env"
            if env_path.exists():
                load_dotenv(env_path)
        except ImportError:
            pass  # python-dotenv not installed, use system env vars

        raw_jobs = os.getenv("EOSA_JOBS", "1")
        try:
            jobs = int(raw_jobs)
        except ValueError:
            raise ValueError(f"EOSA_JOBS must be a positive integer (got: {raw_jobs!r})")
        if jobs < 1:
            raise ValueError(f"EOSA_JOBS must be a positive integer (got: {jobs})")

        return cls(
            output_dir=Path(os.getenv("EOSA_OUTPUT_DIR", "results")),
            jobs=jobs,
            log_level=os.getenv("EOSA_LOG_LEVEL", "WARNING").upper(),
            metrics_enabled=os.getenv("METRICS_ENABLED", "false").lower() == "true",
        )


_settings: Optional[ToolkitSettings] = None


def get_settings() -> ToolkitSettings:
    """
    Get or create the settings singleton.

    Example:
        >>> settings = get_settings()
        >>> print(settings.output_dir)
        results
    """
    global _settings
    if _settings is None:
        _settings = ToolkitSettings.from_env()
    return _settings


def reset_settings() -> None:
    """Forget the cached settings so the next get_settings() re-reads the environment."""
    global _settings
    _settings = None
