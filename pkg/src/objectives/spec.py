"""
Dimension-bound objective specifications and their evaluation.
"""

from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Optional, Sequence, Tuple, Union

import numpy as np

from src.objectives.transforms import TransformSpec
from src.utils.logging import get_logger

logger = get_logger(__name__)

# Base-frame evaluator: (y, noise stream) -> value
Evaluator = Callable[[np.ndarray, Optional[np.random.Generator]], float]

TAG_LETTERS = {
    "M": "multimodal",
    "U": "unimodal",
    "N": "non-separable",
    "S": "separable",
}


class ObjectiveError(ValueError):
    """Objective cannot be evaluated (dimension mismatch, undefined value)."""


class UnknownFunctionError(KeyError):
    """No objective registered under the requested id."""

    def __init__(self, function_id: str):
        self.function_id = function_id
        super().__init__(function_id)

    def __str__(self) -> str:
        return f"Unknown function id '{self.function_id}'"


def tags_from_type(code: str) -> FrozenSet[str]:
    """Map a type code such as "MN" or "US" onto modality/separability tags."""
    return frozenset(TAG_LETTERS[letter] for letter in code.strip().upper())


@dataclass(frozen=True)
class ObjectiveSpec:
    """
    A benchmark function bound to one dimension.

    `function` evaluates the base formula in the transformed frame; the
    transform (if any) is applied by `value`.
    """

    id: str
    name: str
    dim: int
    lower: float
    upper: float
    function: Evaluator = field(repr=False, compare=False)
    known_minimum: Optional[float] = None
    tags: FrozenSet[str] = frozenset()
    transform: Optional[TransformSpec] = None
    optimum_location: Optional[np.ndarray] = field(default=None, repr=False, compare=False)
    stochastic: bool = False
    suite: str = "classical"
    parts: Tuple["ObjectiveSpec", ...] = field(default=(), repr=False, compare=False)

    @property
    def default_dimension(self) -> int:
        return self.dim

    @property
    def bounds(self) -> Tuple[float, float]:
        return (self.lower, self.upper)

    def bound_vectors(self) -> Tuple[np.ndarray, np.ndarray]:
        """Per-coordinate lower and upper bound vectors."""
        return np.full(self.dim, self.lower), np.full(self.dim, self.upper)

    def value(self, x: np.ndarray, rng: Optional[np.random.Generator] = None) -> float:
        """Evaluate without validation; used by composites on their blocks."""
        y = self.transform.apply(x) if self.transform is not None else x
        return self.function(y, rng)

    def __call__(
        self, x: Union[np.ndarray, Sequence[float]], rng: Optional[np.random.Generator] = None
    ) -> float:
        return evaluate(self, x, rng=rng)


def evaluate(
    spec: ObjectiveSpec,
    x: Union[np.ndarray, Sequence[float]],
    rng: Optional[np.random.Generator] = None,
) -> float:
    """
    Evaluate an objective at a point.

    Args:
        spec: Dimension-bound objective
        x: Candidate of length spec.dim
        rng: Noise stream, required by stochastic objectives only

    Returns:
        Objective value (lower is better)

    Raises:
        ObjectiveError: Wrong dimension, or a stochastic objective without a stream

    Example:
        >>> evaluate(get_objective("F34", dim=2), [3.0, 4.0])
        25.0
    """
    point = np.asarray(x, dtype=float)
    if point.ndim != 1 or point.size != spec.dim:
        raise ObjectiveError(
            f"{spec.id} expects a vector of {spec.dim} coordinates (got shape {point.shape})"
        )
    if spec.stochastic and rng is None:
        raise ObjectiveError(f"{spec.id} is stochastic and needs a random stream")

    if np.any(point < spec.lower) or np.any(point > spec.upper):
        logger.debug(f"Out-of-bounds evaluation of {spec.id} flagged")

    return spec.value(point, rng)
