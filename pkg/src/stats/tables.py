"""
Statistics over harness summary tables.

Reads the summary CSV (one row per algorithm and function), builds the
rank matrix for a chosen statistic and produces the mean-rank and
pairwise-test tables written by the `stats` command.
"""

import math
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np
import pandas as pd
from scipy import stats

from src.stats.nonparametric import (
    FriedmanResult,
    RankMatrix,
    wilcoxon_or_none,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

SUMMARY_COLUMNS = [
    "algorithm",
    "function",
    "best",
    "worst",
    "mean",
    "median",
    "stdev",
    "mean_time_s",
]
METRICS = ("mean", "median", "best", "worst")


class SummaryFormatError(ValueError):
    """Malformed summary CSV; `row` is the 1-based file line of the problem."""

    def __init__(self, path: Union[str, Path], message: str, row: Optional[int] = None):
        self.path = Path(path)
        self.row = row
        location = f"row {row}: " if row is not None else ""
        super().__init__(f"{self.path}: {location}{message}")


def _parse_number(text: str) -> float:
    text = text.strip()
    if not text:
        return math.nan
    return float(text)


def load_summary(path: Union[str, Path]) -> pd.DataFrame:
    """
    Read and check a summary CSV.

    Numeric columns may be empty (missing value). Columns other than the
    summary columns are kept as text.

    Raises:
        FileNotFoundError: The file does not exist
        SummaryFormatError: Missing columns, wrong field counts or
            non-numeric values, naming the offending row
    """
    source = Path(path)
    if not source.is_file():
        raise FileNotFoundError(f"Summary file not found: {source}")

    try:
        raw = pd.read_csv(source, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as e:
        raise SummaryFormatError(source, "file is empty") from e
    except pd.errors.ParserError as e:
        # pandas reports "Expected N fields in line M, saw K"
        raise SummaryFormatError(source, str(e).strip()) from e

    missing = [c for c in ("algorithm", "function") if c not in raw.columns]
    if missing:
        raise SummaryFormatError(source, f"missing columns {missing}", row=1)
    numeric = [c for c in SUMMARY_COLUMNS[2:] if c in raw.columns]
    if not numeric:
        raise SummaryFormatError(source, f"no statistic columns (expected any of {METRICS})", 1)

    parsed: Dict[str, List[float]] = {column: [] for column in numeric}
    for line, record in enumerate(raw.to_dict("records"), start=2):
        if any(not isinstance(value, str) for value in record.values()):
            raise SummaryFormatError(source, "too few fields", line)
        if not record["algorithm"].strip() or not record["function"].strip():
            raise SummaryFormatError(source, "algorithm and function must be non-empty", line)
        for column in numeric:
            try:
                parsed[column].append(_parse_number(record[column]))
            except ValueError:
                raise SummaryFormatError(
                    source, f"column '{column}' is not a number ({record[column]!r})", line
                ) from None

    frame = raw.copy()
    for column in numeric:
        frame[column] = np.asarray(parsed[column], dtype=float)
    frame["algorithm"] = frame["algorithm"].str.strip()
    frame["function"] = frame["function"].str.strip()

    duplicated = frame.duplicated(subset=["algorithm", "function"])
    if duplicated.any():
        line = int(np.flatnonzero(duplicated.to_numpy())[0]) + 2
        raise SummaryFormatError(source, "duplicate (algorithm, function) row", line)

    logger.debug(f"Loaded summary {source}: {len(frame)} rows")
    return frame


def rank_matrix_from_summary(
    frame: pd.DataFrame, metric: str = "mean", lower_is_better: bool = True
) -> RankMatrix:
    """
    Functions × algorithms matrix of one summary statistic.

    Algorithms keep their order of first appearance; functions with a
    missing or non-finite entry for any algorithm are dropped.

    Raises:
        ValueError: Unknown metric, or fewer than 2 functions/algorithms remain
    """
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS} (got '{metric}')")
    if metric not in frame.columns:
        raise ValueError(f"summary has no '{metric}' column")

    algorithms = list(dict.fromkeys(frame["algorithm"]))
    functions = list(dict.fromkeys(frame["function"]))
    table = frame.pivot(index="function", columns="algorithm", values=metric)
    table = table.reindex(index=functions, columns=algorithms).astype(float)

    finite = np.isfinite(table.to_numpy()).all(axis=1)
    dropped = [fn for fn, ok in zip(table.index, finite) if not ok]
    if dropped:
        logger.warning(
            f"Dropping {len(dropped)} functions with missing or non-finite {metric}: "
            + ", ".join(str(fn) for fn in dropped)
        )
    table = table[finite]

    return RankMatrix(
        values=table.to_numpy(),
        algorithms=[str(a) for a in algorithms],
        problems=[str(fn) for fn in table.index],
        lower_is_better=lower_is_better,
    )


def general_ranks(mean_ranks: np.ndarray) -> np.ndarray:
    """Dense ranking of mean ranks (rounded to 2 decimals); the lowest mean rank is 1."""
    rounded = np.round(np.asarray(mean_ranks, dtype=float), 2)
    return stats.rankdata(rounded, method="dense").astype(int)


def friedman_rank_table(result: FriedmanResult) -> pd.DataFrame:
    """Rows algorithm,mean_rank,rank in input column order."""
    return pd.DataFrame(
        {
            "algorithm": list(result.algorithms),
            "mean_rank": result.mean_ranks,
            "rank": general_ranks(result.mean_ranks),
        }
    )


def friedman_test_table(result: FriedmanResult) -> pd.DataFrame:
    """Single row n_problems,k_algorithms,chi_square,df,p_value."""
    return pd.DataFrame(
        [
            {
                "n_problems": result.n_problems,
                "k_algorithms": len(result.algorithms),
                "chi_square": result.chi_square,
                "df": result.df,
                "p_value": result.p_value,
            }
        ]
    )


def wilcoxon_against(
    matrix: RankMatrix, reference: str, continuity_correction: bool = False
) -> pd.DataFrame:
    """
    Reference-versus-each Wilcoxon tests.

    One row per other algorithm, pair labelled "<other>-<reference>". The
    reference column is the first sample, so z < 0 means the reference was
    consistently lower. Pairs that fail the test's preconditions get an
    empty z and p_value and the reason in `note`.

    Raises:
        ValueError: reference is not a column of the matrix
    """
    if reference not in matrix.algorithms:
        raise ValueError(
            f"Reference algorithm '{reference}' not in summary (have: {matrix.algorithms})"
        )

    rows: List[dict] = []
    ref_values = matrix.column(reference)
    for algorithm in matrix.algorithms:
        if algorithm == reference:
            continue
        outcome, note = wilcoxon_or_none(
            ref_values, matrix.column(algorithm), continuity_correction
        )
        rows.append(
            {
                "pair": f"{algorithm}-{reference}",
                "z": outcome.z if outcome else math.nan,
                "p_value": outcome.p_value if outcome else math.nan,
                "note": note,
            }
        )
        if note:
            logger.warning(f"Wilcoxon {algorithm}-{reference}: {note}")

    return pd.DataFrame(rows, columns=["pair", "z", "p_value", "note"])
