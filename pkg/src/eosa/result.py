"""
Result of a single optimization run, shared by EOSA and the baselines.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from src.eosa.trace import FLOAT_FORMAT, SearchTrace
from src.epidemic import CompartmentCensus

CENSUS_COLUMNS = ["epoch", "S", "I", "H", "R", "V", "D", "Q"]


@dataclass
class OptimizationResult:
    """
    Outcome of one run.

    history holds one (epoch, gbest_fitness) pair per completed epoch,
    starting at epoch 1. census_trace (EOSA only) holds the census after
    each completed epoch, aligned with history. search_trace holds every
    evaluated point when the run was configured to record its search history.
    """

    gbest_position: np.ndarray
    gbest_fitness: float
    history: List[Tuple[int, float]]
    evaluations: int
    wall_time: float
    initial_fitness: float
    algorithm: str = "eosa"
    seed: int = 0
    census_trace: List[CompartmentCensus] = field(default_factory=list)
    deviation_events: List[int] = field(default_factory=list)
    search_trace: Optional[SearchTrace] = field(default=None, repr=False)

    @property
    def epochs_completed(self) -> int:
        return len(self.history)

    def best_at(self, epoch: int) -> float:
        """
        gbest fitness after `epoch` epochs.

        Epoch 0 is the initial fitness; epochs past an early stop carry the
        last value forward.
        """
        if epoch < 0:
            raise ValueError(f"epoch must be >= 0 (got {epoch})")
        if epoch == 0 or not self.history:
            return self.initial_fitness
        index = min(epoch, len(self.history)) - 1
        return self.history[index][1]

    def history_frame(self) -> pd.DataFrame:
        """Run history as a DataFrame with columns epoch,gbest_fitness."""
        return pd.DataFrame(self.history, columns=["epoch", "gbest_fitness"])

    def census_frame(self) -> pd.DataFrame:
        """Census trace as a DataFrame with columns epoch,S,I,H,R,V,D,Q."""
        rows = [census.as_row(epoch) for epoch, census in enumerate(self.census_trace, start=1)]
        return pd.DataFrame(rows, columns=CENSUS_COLUMNS)

    def to_csv(self, path: Union[str, Path]) -> Path:
        """Write the run CSV (epoch,gbest_fitness)."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        self.history_frame().to_csv(target, index=False, float_format=FLOAT_FORMAT)
        return target

    def census_to_csv(self, path: Union[str, Path]) -> Path:
        """Write the census CSV (epoch,S,I,H,R,V,D,Q)."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        self.census_frame().to_csv(target, index=False)
        return target

    def search_history_to_csv(self, path: Union[str, Path]) -> Path:
        """
        Write the search history CSV (epoch,individual,fitness,x0..x{d-1}).

        Raises:
            ValueError: The run did not record its search history
        """
        if self.search_trace is None:
            raise ValueError("run was not configured with record_search_history")
        return self.search_trace.to_csv(path)
