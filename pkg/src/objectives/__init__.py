"""
Benchmark objective functions.

Registry of the classical suite (F1-F47) and the CEC-based suite
(CEC01-CEC14, C1-C30), seeded shift/rotate transforms, and the hybrid and
composition constructions.
"""

from src.objectives.composite import composition_compose, equal_partition, hybrid_compose
from src.objectives.registry import (
    SUITES,
    dump_registry_csv,
    get_objective,
    registry_frame,
    registry_ids,
    registry_list,
)
from src.objectives.spec import (
    ObjectiveError,
    ObjectiveSpec,
    UnknownFunctionError,
    evaluate,
    tags_from_type,
)
from src.objectives.transforms import (
    TransformParseError,
    TransformSpec,
    generate_transform,
    random_rotation,
)

__all__ = [
    "SUITES",
    "ObjectiveError",
    "ObjectiveSpec",
    "TransformParseError",
    "TransformSpec",
    "UnknownFunctionError",
    "composition_compose",
    "dump_registry_csv",
    "equal_partition",
    "evaluate",
    "generate_transform",
    "get_objective",
    "hybrid_compose",
    "random_rotation",
    "registry_frame",
    "registry_ids",
    "registry_list",
    "tags_from_type",
]
