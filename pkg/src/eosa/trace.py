"""
Search history: every point a run evaluated, in evaluation order.

Rows carry the epoch of the evaluation (0 for the initial population or
index case), the individual's position within that epoch's evaluations,
the fitness and the coordinates x0..x{d-1}.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

# 17 significant digits round-trip every double
FLOAT_FORMAT = "%.17g"

Row = Tuple[float, ...]


class SearchTrace:
    """
    Recorder of evaluated points.

    With population_size set, the epoch and individual are derived from the
    evaluation ordinal (population-synchronous searches evaluate exactly one
    population per epoch). Otherwise the caller marks epochs with
    start_epoch and individuals are numbered in evaluation order.
    """

    def __init__(self, dim: int, population_size: Optional[int] = None):
        if dim < 1:
            raise ValueError(f"dim must be >= 1 (got {dim})")
        if population_size is not None and population_size < 1:
            raise ValueError(f"population_size must be >= 1 (got {population_size})")
        self.dim = dim
        self.population_size = population_size
        self.epoch = 0
        self._individual = 0
        self._rows: List[Row] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def columns(self) -> List[str]:
        return ["epoch", "individual", "fitness"] + [f"x{j}" for j in range(self.dim)]

    def start_epoch(self, epoch: int) -> None:
        self.epoch = epoch
        self._individual = 0

    def record(self, position: np.ndarray, fitness: float) -> None:
        coords = np.asarray(position, dtype=float).ravel()
        if coords.shape[0] != self.dim:
            raise ValueError(f"Expected {self.dim} coordinates (got {coords.shape[0]})")

        if self.population_size is not None:
            epoch, individual = divmod(len(self._rows), self.population_size)
        else:
            epoch, individual = self.epoch, self._individual
            self._individual += 1
        self._rows.append((epoch, individual, float(fitness), *coords.tolist()))

    def frame(self) -> pd.DataFrame:
        """Rows as a DataFrame with integer epoch and individual columns."""
        frame = pd.DataFrame(self._rows, columns=self.columns)
        return frame.astype({"epoch": "int64", "individual": "int64"})

    def to_csv(self, path: Union[str, Path]) -> Path:
        """Write epoch,individual,fitness,x0..x{d-1}."""
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        self.frame().to_csv(target, index=False, float_format=FLOAT_FORMAT)
        return target
