"""
Friedman mean-rank test and Wilcoxon signed-rank test.

Ties get average ranks in both tests. p-values come from the asymptotic
chi-square and normal distributions; no tie correction is applied to
either statistic.
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from src.utils.logging import get_logger, log_function_call

logger = get_logger(__name__)

MIN_WILCOXON_PAIRS = 5


class DegeneratePairsError(ValueError):
    """Every paired difference is zero."""

    def __init__(self, message: str = "degenerate pairs: all differences are zero"):
        super().__init__(message)


class InsufficientPairsError(ValueError):
    """Too few non-zero paired differences for the normal approximation."""

    def __init__(self, remaining: int):
        self.remaining = remaining
        super().__init__(
            f"insufficient pairs: {remaining} non-zero differences "
            f"(need at least {MIN_WILCOXON_PAIRS})"
        )


@dataclass
class RankMatrix:
    """
    Problems × algorithms table of results.

    Rows are problems (functions), columns are algorithms. With
    lower_is_better the smallest value in a row gets rank 1.
    """

    values: np.ndarray
    algorithms: List[str] = field(default_factory=list)
    problems: List[str] = field(default_factory=list)
    lower_is_better: bool = True

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 2:
            raise ValueError(f"RankMatrix needs a 2-D table (got {self.values.ndim}-D)")
        n, k = self.values.shape
        if n < 2 or k < 2:
            raise ValueError(
                f"RankMatrix needs at least 2 problems and 2 algorithms (got {n}×{k})"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("RankMatrix entries must all be finite")
        if not self.algorithms:
            self.algorithms = [f"alg{j + 1}" for j in range(k)]
        if not self.problems:
            self.problems = [f"p{i + 1}" for i in range(n)]
        if len(self.algorithms) != k or len(self.problems) != n:
            raise ValueError("RankMatrix labels do not match the table shape")

    @property
    def n_problems(self) -> int:
        return int(self.values.shape[0])

    @property
    def k_algorithms(self) -> int:
        return int(self.values.shape[1])

    def row_ranks(self) -> np.ndarray:
        """Rank of each algorithm within each problem, 1..k with ties averaged."""
        oriented = self.values if self.lower_is_better else -self.values
        return np.apply_along_axis(stats.rankdata, 1, oriented)

    def column(self, algorithm: str) -> np.ndarray:
        return self.values[:, self.algorithms.index(algorithm)]


@dataclass(frozen=True)
class FriedmanResult:
    mean_ranks: np.ndarray
    chi_square: float
    df: int
    p_value: float
    n_problems: int
    algorithms: Sequence[str] = ()


@dataclass(frozen=True)
class WilcoxonResult:
    z: float
    p_value: float
    w_plus: float
    w_minus: float
    n_pairs: int


@log_function_call
def friedman(matrix: RankMatrix) -> FriedmanResult:
    """
    Friedman test over a rank matrix.

    χ² = 12/(N·k·(k+1))·ΣRⱼ² − 3N(k+1) on the column rank sums Rⱼ,
    df = k − 1, p from the chi-square upper tail.

    Example:
        >>> m = RankMatrix(np.array([[1.0, 2.0, 3.0]] * 4))
        >>> friedman(m).chi_square
        8.0
    """
    n, k = matrix.n_problems, matrix.k_algorithms
    ranks = matrix.row_ranks()
    rank_sums = ranks.sum(axis=0)

    chi_square = 12.0 / (n * k * (k + 1)) * float(np.sum(rank_sums**2)) - 3.0 * n * (k + 1)
    # Rounding can leave a tiny negative value when every row is fully tied
    chi_square = max(chi_square, 0.0)
    df = k - 1
    p_value = float(stats.chi2.sf(chi_square, df))

    if np.any([len(np.unique(row)) < k for row in ranks]):
        logger.info("Friedman: tied ranks present; no tie correction applied to chi-square")

    return FriedmanResult(
        mean_ranks=rank_sums / n,
        chi_square=float(chi_square),
        df=df,
        p_value=p_value,
        n_problems=n,
        algorithms=tuple(matrix.algorithms),
    )


def wilcoxon_signed_rank(
    a: Sequence[float], b: Sequence[float], continuity_correction: bool = False
) -> WilcoxonResult:
    """
    Wilcoxon signed-rank test of paired samples.

    Differences d = b − a; zeros are dropped; |d| is ranked with ties
    averaged. z is the normal approximation of W⁻ (rank sum of negative
    differences), so z < 0 when a is consistently lower than b, and
    swapping the arguments flips the sign of z. p is two-tailed.

    Raises:
        ValueError: Sequences of different length or with non-finite values
        DegeneratePairsError: Every difference is zero
        InsufficientPairsError: Fewer than 5 non-zero differences
    """
    first = np.asarray(a, dtype=float)
    second = np.asarray(b, dtype=float)
    if first.shape != second.shape or first.ndim != 1:
        raise ValueError(
            f"paired samples must be 1-D of equal length (got {first.shape} and {second.shape})"
        )
    if not (np.all(np.isfinite(first)) and np.all(np.isfinite(second))):
        raise ValueError("paired samples must be finite")

    diffs = second - first
    diffs = diffs[diffs != 0.0]
    if diffs.size == 0:
        raise DegeneratePairsError()
    if diffs.size < MIN_WILCOXON_PAIRS:
        raise InsufficientPairsError(int(diffs.size))

    n = int(diffs.size)
    ranks = stats.rankdata(np.abs(diffs))
    w_plus = float(ranks[diffs > 0].sum())
    w_minus = float(ranks[diffs < 0].sum())

    mean = n * (n + 1) / 4.0
    sd = math.sqrt(n * (n + 1) * (2 * n + 1) / 24.0)
    numerator = w_minus - mean
    if continuity_correction and numerator != 0.0:
        numerator -= math.copysign(min(0.5, abs(numerator)), numerator)
    z = numerator / sd
    p_value = float(2.0 * stats.norm.sf(abs(z)))

    return WilcoxonResult(z=z, p_value=p_value, w_plus=w_plus, w_minus=w_minus, n_pairs=n)


def wilcoxon_or_none(
    a: Sequence[float], b: Sequence[float], continuity_correction: bool = False
) -> Tuple[Optional[WilcoxonResult], str]:
    """Run the test; on a precondition failure return (None, reason)."""
    try:
        return wilcoxon_signed_rank(a, b, continuity_correction), ""
    except (DegeneratePairsError, InsufficientPairsError) as e:
        return None, str(e)
