"""
Aggregate tables over an experiment archive: summary statistics,
convergence checkpoints and mean wall-clock time.
"""

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.utils.logging import get_logger

if TYPE_CHECKING:
    from src.harness.archive import ExperimentArchive

logger = get_logger(__name__)

SUMMARY_HEADER = ["algorithm", "function", "best", "worst", "mean", "median", "stdev"]
CONVERGENCE_HEADER = ["algorithm", "function", "checkpoint", "median_gbest"]
TIMING_HEADER = ["algorithm", "mean_time_s"]


@dataclass(frozen=True)
class SummaryStats:
    """Statistics of the final gbest values of a set of runs (minimization)."""

    best: float
    worst: float
    mean: float
    median: float
    stdev: float

    def as_dict(self) -> Dict[str, float]:
        return {
            "best": self.best,
            "worst": self.worst,
            "mean": self.mean,
            "median": self.median,
            "stdev": self.stdev,
        }


def summarize(final_values: Sequence[float]) -> SummaryStats:
    """
    Best (min), worst (max), mean, median and sample standard deviation.

    The standard deviation uses the n − 1 denominator and is 0 for a
    single value.

    Raises:
        ValueError: No values
    """
    values = np.asarray(list(final_values), dtype=float)
    if values.size == 0:
        raise ValueError("summarize needs at least one value")

    best = float(values.min())
    worst = float(values.max())
    # Summation rounding can push the mean of equal values just past them
    mean = min(max(float(values.mean()), best), worst)
    stdev = float(values.std(ddof=1)) if values.size > 1 else 0.0
    return SummaryStats(
        best=best,
        worst=worst,
        mean=mean,
        median=float(np.median(values)),
        stdev=stdev,
    )


def _mean_time(times: Sequence[float]) -> float:
    finite = [t for t in times if math.isfinite(t)]
    return float(np.mean(finite)) if finite else math.nan


def summary_table(archive: "ExperimentArchive") -> pd.DataFrame:
    """One row per (algorithm, function) in config order."""
    rows: List[Dict[str, object]] = []
    for label in archive.config.labels:
        for fn in archive.config.functions:
            group = archive.group(label, fn.id)
            if not group:
                continue
            stats = summarize([r.result.gbest_fitness for r in group])
            row: Dict[str, object] = {"algorithm": label, "function": fn.id}
            row.update(stats.as_dict())
            row["mean_time_s"] = _mean_time([r.result.wall_time for r in group])
            rows.append(row)
    return pd.DataFrame(rows, columns=SUMMARY_HEADER + ["mean_time_s"])


def convergence_table(
    archive: "ExperimentArchive", checkpoints: Optional[Sequence[int]] = None
) -> pd.DataFrame:
    """
    Median gbest across runs at each checkpoint epoch.

    Per-run histories are non-increasing, so each (algorithm, function)
    row sequence is too.

    Raises:
        ValueError: A checkpoint lies outside [0, epochs]
    """
    points = list(archive.config.checkpoints if checkpoints is None else checkpoints)
    beyond = [c for c in points if c < 0 or c > archive.config.epochs]
    if beyond:
        raise ValueError(
            f"Checkpoints {beyond} lie outside the experiment's {archive.config.epochs} epochs"
        )

    rows: List[Dict[str, object]] = []
    for label in archive.config.labels:
        for fn in archive.config.functions:
            group = archive.group(label, fn.id)
            if not group:
                continue
            for checkpoint in points:
                values = [r.result.best_at(checkpoint) for r in group]
                rows.append(
                    {
                        "algorithm": label,
                        "function": fn.id,
                        "checkpoint": checkpoint,
                        "median_gbest": float(np.median(values)),
                    }
                )
    return pd.DataFrame(rows, columns=CONVERGENCE_HEADER)


def timing_report(archive: "ExperimentArchive") -> pd.DataFrame:
    """Mean per-run wall time per algorithm; algorithms with no timed run are omitted."""
    rows: List[Dict[str, object]] = []
    for label in archive.config.labels:
        times = [r.result.wall_time for r in archive.records if r.label == label]
        mean_time = _mean_time(times)
        if math.isnan(mean_time):
            logger.warning(f"No timed runs for algorithm '{label}'; omitted from timing report")
            continue
        rows.append({"algorithm": label, "mean_time_s": mean_time})
    return pd.DataFrame(rows, columns=TIMING_HEADER)
