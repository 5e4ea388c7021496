"""Shared fixtures."""

from pathlib import Path
from typing import Iterator

import numpy as np
import pytest

import src.utils.metrics as metrics_module
from src.utils.config import reset_settings

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch) -> Iterator[None]:
    """Each test reads the environment afresh and starts with disabled metrics."""
    monkeypatch.delenv("METRICS_ENABLED", raising=False)
    reset_settings()
    metrics_module._metrics_instance = None
    yield
    reset_settings()
    metrics_module._metrics_instance = None


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def published_summary_csv() -> Path:
    """Published mean/best/... statistics of eight algorithms in summary CSV shape."""
    return FIXTURES_DIR / "published_summary.csv"
