"""
Nonparametric comparison of optimizers across benchmark problems.
"""

from src.stats.nonparametric import (
    MIN_WILCOXON_PAIRS,
    DegeneratePairsError,
    FriedmanResult,
    InsufficientPairsError,
    RankMatrix,
    WilcoxonResult,
    friedman,
    wilcoxon_or_none,
    wilcoxon_signed_rank,
)
from src.stats.tables import (
    METRICS,
    SUMMARY_COLUMNS,
    SummaryFormatError,
    friedman_rank_table,
    friedman_test_table,
    general_ranks,
    load_summary,
    rank_matrix_from_summary,
    wilcoxon_against,
)

__all__ = [
    "METRICS",
    "MIN_WILCOXON_PAIRS",
    "SUMMARY_COLUMNS",
    "DegeneratePairsError",
    "FriedmanResult",
    "InsufficientPairsError",
    "RankMatrix",
    "SummaryFormatError",
    "WilcoxonResult",
    "friedman",
    "friedman_rank_table",
    "friedman_test_table",
    "general_ranks",
    "load_summary",
    "rank_matrix_from_summary",
    "wilcoxon_against",
    "wilcoxon_or_none",
    "wilcoxon_signed_rank",
]
