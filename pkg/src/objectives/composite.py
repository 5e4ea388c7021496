"""
Hybrid and composition constructions over dimension-bound objectives.

A hybrid splits the candidate into contiguous blocks and sums each part's
value on its own block. A composition evaluates every part on the full
candidate and returns the weighted sum.
"""

from typing import List, Optional, Sequence

import numpy as np

from src.objectives.spec import ObjectiveError, ObjectiveSpec


def equal_partition(dim: int, n_parts: int) -> List[int]:
    """Equal contiguous block sizes, the remainder going to the last block."""
    if n_parts < 1 or dim < n_parts:
        raise ObjectiveError(f"Cannot split {dim} dimensions into {n_parts} non-empty blocks")
    size = dim // n_parts
    return [size] * (n_parts - 1) + [dim - size * (n_parts - 1)]


def hybrid_compose(
    parts: Sequence[ObjectiveSpec],
    partition: Optional[Sequence[int]] = None,
    *,
    id: str = "hybrid",
    name: str = "Hybrid",
    lower: Optional[float] = None,
    upper: Optional[float] = None,
    suite: str = "classical",
) -> ObjectiveSpec:
    """
    Sum of part values over contiguous blocks of the candidate.

    Args:
        parts: Two or more objectives, each bound to its block size
        partition: Block sizes (defaults to the parts' dimensions)
        id: Identifier of the composed objective
        name: Display name
        lower: Lower bound (defaults to the tightest part bound)
        upper: Upper bound (defaults to the tightest part bound)
        suite: Registry suite label

    Returns:
        ObjectiveSpec over sum(partition) dimensions. The known minimum and
        optimum location are the sum and concatenation of the parts' when
        every part has them.

    Raises:
        ObjectiveError: Fewer than two parts, or partition sizes that do not
            match the parts' dimensions
    """
    if len(parts) < 2:
        raise ObjectiveError(f"A hybrid needs at least two parts (got {len(parts)})")

    sizes = [p.dim for p in parts] if partition is None else [int(s) for s in partition]
    if len(sizes) != len(parts) or any(s != p.dim for s, p in zip(sizes, parts)):
        raise ObjectiveError(
            f"Partition {sizes} does not match part dimensions {[p.dim for p in parts]}"
        )

    edges = np.cumsum([0] + sizes)
    blocks = [slice(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]
    members = tuple(parts)

    def function(y: np.ndarray, rng: Optional[np.random.Generator]) -> float:
        return float(sum(part.value(y[block], rng) for part, block in zip(members, blocks)))

    minima = [p.known_minimum for p in members]
    known_minimum = None if any(m is None for m in minima) else float(sum(minima))  # type: ignore
    locations = [p.optimum_location for p in members]
    optimum = None if any(loc is None for loc in locations) else np.concatenate(locations)

    return ObjectiveSpec(
        id=id,
        name=name,
        dim=int(edges[-1]),
        lower=max(p.lower for p in members) if lower is None else lower,
        upper=min(p.upper for p in members) if upper is None else upper,
        function=function,
        known_minimum=known_minimum,
        optimum_location=optimum,
        stochastic=any(p.stochastic for p in members),
        suite=suite,
        parts=members,
    )


def composition_compose(
    parts: Sequence[ObjectiveSpec],
    weights: Optional[Sequence[float]] = None,
    *,
    id: str = "composition",
    name: str = "Composition",
    lower: Optional[float] = None,
    upper: Optional[float] = None,
    suite: str = "classical",
) -> ObjectiveSpec:
    """
    Weighted sum of parts evaluated on the full candidate.

    Weights must be non-negative and sum to 1; equal weights by default. The
    optimum is known only when every positively weighted part shares the
    same optimum location.

    Raises:
        ObjectiveError: Empty parts, parts of different dimensions, or
            invalid weights
    """
    if not parts:
        raise ObjectiveError("A composition needs at least one part")
    dims = {p.dim for p in parts}
    if len(dims) != 1:
        raise ObjectiveError(f"Composition parts must share one dimension (got {sorted(dims)})")

    if weights is None:
        w = np.full(len(parts), 1.0 / len(parts))
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != (len(parts),):
            raise ObjectiveError(f"Expected {len(parts)} weights (got {len(w)})")
        if np.any(w < 0) or not np.isclose(w.sum(), 1.0, rtol=0.0, atol=1e-9):
            raise ObjectiveError(f"Weights must be non-negative and sum to 1 (got {list(w)})")

    members = tuple(parts)
    coefficients = tuple(float(c) for c in w)

    def function(y: np.ndarray, rng: Optional[np.random.Generator]) -> float:
        return float(
            sum(c * part.value(y, rng) for c, part in zip(coefficients, members) if c > 0.0)
        )

    active = [p for c, p in zip(coefficients, members) if c > 0.0]
    known_minimum: Optional[float] = None
    optimum: Optional[np.ndarray] = None
    locations = [p.optimum_location for p in active]
    if (
        all(p.known_minimum is not None for p in active)
        and all(loc is not None for loc in locations)
        and all(np.array_equal(loc, locations[0]) for loc in locations)
    ):
        optimum = locations[0]
        weighted = [
            c * p.known_minimum  # type: ignore[operator]
            for c, p in zip(coefficients, members)
            if c > 0.0
        ]
        known_minimum = float(sum(weighted))

    return ObjectiveSpec(
        id=id,
        name=name,
        dim=dims.pop(),
        lower=max(p.lower for p in members) if lower is None else lower,
        upper=min(p.upper for p in members) if upper is None else upper,
        function=function,
        known_minimum=known_minimum,
        optimum_location=optimum,
        stochastic=any(p.stochastic for p in members),
        suite=suite,
        parts=members,
    )
