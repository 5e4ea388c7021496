"""
Baseline optimizers (PSO, DE, GA) behind the same result type as EOSA.
"""

from src.baselines.config import ALGORITHM_PARAMS, BASELINE_ALGORITHMS, BaselineConfig
from src.baselines.de import run_de
from src.baselines.ga import run_ga, tournament_select
from src.baselines.optimizer import SOLVERS, baseline_optimize
from src.baselines.pso import run_pso
from src.baselines.search import SearchOutcome

__all__ = [
    "ALGORITHM_PARAMS",
    "BASELINE_ALGORITHMS",
    "SOLVERS",
    "BaselineConfig",
    "SearchOutcome",
    "baseline_optimize",
    "run_de",
    "run_ga",
    "run_pso",
    "tournament_select",
]
