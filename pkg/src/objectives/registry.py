"""
Benchmark function registry.

Three suites are registered:

    classical  F1-F47, the standard benchmark table (base formulas, the
               F5/F6 compositions, the F16/F17 hybrids and the F39-F43
               shifted-and-rotated variants)
    cec        CEC01-CEC14 base functions on [-100, 100] and the C1-C30
               shifted, shift-rotated and hybrid constructions built on them

Every id resolves to a builder; `get_objective(id, dim)` binds it to a
dimension, regenerating transforms from a seed derived from the id, so the
same (id, dim) always yields the same function.

Usage:
    >>> from src.objectives import evaluate, get_objective
    >>> sphere = get_objective("F34")
    >>> evaluate(sphere, [0.0] * sphere.dim)
    0.0
"""

import zlib
from dataclasses import dataclass
from dataclasses import replace as dataclass_replace
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.objectives import functions as fn
from src.objectives.composite import composition_compose, equal_partition, hybrid_compose
from src.objectives.spec import (
    ObjectiveError,
    ObjectiveSpec,
    UnknownFunctionError,
    tags_from_type,
)
from src.objectives.transforms import generate_transform
from src.utils.logging import get_logger

logger = get_logger(__name__)

SUITES = ("classical", "cec", "all")

# "N" in the dimension column
DEFAULT_DIMENSION = 30

SCHWEFEL_MINIMUM_PER_DIM = -418.9828872724338

Builder = Callable[[int, str], ObjectiveSpec]
Location = Optional[Callable[[int], np.ndarray]]
Minimum = Union[float, Callable[[int], float], None]


@dataclass(frozen=True)
class _Entry:
    id: str
    name: str
    default_dim: int
    suite: str
    build: Builder
    note: Optional[str] = None


def _zeros(dim: int) -> np.ndarray:
    return np.zeros(dim)


def _ones(dim: int) -> np.ndarray:
    return np.ones(dim)


def _minus_ones(dim: int) -> np.ndarray:
    return -np.ones(dim)


def _seed(key: str) -> int:
    return zlib.crc32(key.encode("utf-8"))


def _plain(formula: Callable[[np.ndarray], float]) -> Callable[..., float]:
    def evaluator(y: np.ndarray, rng: Optional[np.random.Generator]) -> float:
        return formula(y)

    return evaluator


def _base(
    id: str,
    name: str,
    lower: float,
    upper: float,
    formula: Callable[..., float],
    *,
    dim: int = DEFAULT_DIMENSION,
    kind: str = "",
    minimum: Minimum = 0.0,
    location: Location = _zeros,
    min_dim: int = 1,
    stochastic: bool = False,
    suite: str = "classical",
    note: Optional[str] = None,
) -> _Entry:
    evaluator = formula if stochastic else _plain(formula)
    tags = tags_from_type(kind)

    def build(n: int, seed_key: str) -> ObjectiveSpec:
        if n < min_dim:
            raise ObjectiveError(f"{id} needs at least {min_dim} dimensions (got {n})")
        known = minimum(n) if callable(minimum) else minimum
        return ObjectiveSpec(
            id=id,
            name=name,
            dim=n,
            lower=float(lower),
            upper=float(upper),
            function=evaluator,
            known_minimum=known,
            tags=tags,
            optimum_location=location(n) if location is not None else None,
            stochastic=stochastic,
            suite=suite,
        )

    return _Entry(id, name, dim, suite, build, note)


def _transformed(
    id: str,
    name: str,
    base_id: str,
    *,
    rotate: bool,
    kind: str = "",
    lower: float = -100.0,
    upper: float = 100.0,
    suite: str = "classical",
) -> _Entry:
    """Shift (and rotation) over a registered base; the shift uses the base's bounds."""

    def build(n: int, seed_key: str) -> ObjectiveSpec:
        base = _catalog()[base_id].build(n, seed_key)
        transform = generate_transform(_seed(seed_key), n, base.lower, base.upper, rotate=rotate)
        location = base.optimum_location
        return dataclass_replace(
            base,
            id=id,
            name=name,
            lower=lower,
            upper=upper,
            tags=tags_from_type(kind),
            transform=transform,
            optimum_location=transform.invert(location) if location is not None else None,
            suite=suite,
        )

    return _Entry(id, name, DEFAULT_DIMENSION, suite, build)


def _build_parts(
    part_ids: Sequence[str], sizes: Sequence[int], seed_key: str
) -> List[ObjectiveSpec]:
    catalog = _catalog()
    return [
        catalog[part].build(size, f"{seed_key}/{k}:{part}")
        for k, (part, size) in enumerate(zip(part_ids, sizes))
    ]


def _hybrid(
    id: str,
    name: str,
    part_ids: Sequence[str],
    *,
    shifted: bool = False,
    dim: int = DEFAULT_DIMENSION,
    kind: str = "",
    suite: str = "classical",
    note: Optional[str] = None,
) -> _Entry:
    def build(n: int, seed_key: str) -> ObjectiveSpec:
        sizes = equal_partition(n, len(part_ids))
        spec = hybrid_compose(
            _build_parts(part_ids, sizes, seed_key),
            sizes,
            id=id,
            name=name,
            lower=-100.0,
            upper=100.0,
            suite=suite,
        )
        spec = dataclass_replace(spec, tags=tags_from_type(kind))
        if not shifted:
            return spec
        transform = generate_transform(_seed(seed_key), n, spec.lower, spec.upper, rotate=False)
        location = spec.optimum_location
        return dataclass_replace(
            spec,
            transform=transform,
            optimum_location=transform.invert(location) if location is not None else None,
        )

    return _Entry(id, name, dim, suite, build, note)


def _composition(
    id: str, name: str, part_ids: Sequence[str], *, dim: int, note: Optional[str] = None
) -> _Entry:
    def build(n: int, seed_key: str) -> ObjectiveSpec:
        parts = _build_parts(part_ids, [n] * len(part_ids), seed_key)
        return composition_compose(parts, id=id, name=name, lower=-100.0, upper=100.0)

    return _Entry(id, name, dim, "classical", build, note)


def _schwefel_minimum(dim: int) -> float:
    return SCHWEFEL_MINIMUM_PER_DIM * dim


def _schwefel_location(dim: int) -> np.ndarray:
    return np.full(dim, fn.SCHWEFEL_OPTIMUM)


def _perm_location(dim: int) -> np.ndarray:
    return np.arange(1, dim + 1, dtype=float)


def _fletcher_powell_location(dim: int) -> np.ndarray:
    location = np.zeros(dim)
    location[0] = 1.0
    return location


def _classical_entries() -> List[_Entry]:
    return [
        _base("F1", "Ackley", -32, 32, fn.ackley, kind="MN"),
        _base("F2", "Alpine", -10, 10, fn.alpine, kind="MN"),
        _base("F3", "Brown", -1, 4, fn.brown, kind="UN"),
        _base("F4", "Bent Cigar", -100, 100, fn.bent_cigar, kind="MS"),
        _composition("F5", "Composition1", ["F29", "F15", "F27"], dim=5),
        _composition("F6", "Composition2", ["F1", "F15", "F10", "F27"], dim=3),
        _base(
            "F7",
            "Dixon and Price",
            -10,
            10,
            fn.discus_product,
            kind="UN",
            note="row prints the product 10^6*x1^2*sum(x_i^2, i>=2); the printed formula is used",
        ),
        _base(
            "F8",
            "Discus Function",
            -100,
            100,
            fn.dixon_price,
            kind="U",
            location=fn.dixon_price_optimum,
            note="row prints the Dixon-Price formula; the printed formula is used",
        ),
        _base(
            "F9",
            "Fletcher-Powell",
            -100,
            100,
            fn.helical_valley,
            dim=3,
            kind="MN",
            location=_fletcher_powell_location,
            min_dim=3,
            note="tabulated minimum 0.0001; the printed formula reaches 0 at (1, 0, 0)",
        ),
        _base("F10", "Griewank", -600, 600, fn.griewank, kind="MN"),
        _base(
            "F11",
            "Generalized Penalized Function 1",
            -50,
            50,
            fn.penalized_1,
            kind="M",
            location=_minus_ones,
        ),
        _base(
            "F12",
            "Generalized Penalized Function 2",
            -5.12,
            5.12,
            fn.penalized_2,
            kind="M",
            location=_ones,
        ),
        _base("F13", "Holzman 2 function", -100, 100, fn.weighted_quartic),
        _base("F14", "HGBat", -100, 100, fn.hgbat, kind="M", location=_minus_ones),
        _base("F15", "High Conditioned Elliptic", -100, 100, fn.elliptic),
        _hybrid("F16", "Hybrid1", ["F45", "F29", "F27"], dim=3, kind="UN"),
        _hybrid(
            "F17",
            "Hybrid2",
            ["F15", "F1", "F27", "F14", "F8"],
            dim=5,
            kind="MN",
            note="dimension column reads 3 for five parts; default dimension 5",
        ),
        _base(
            "F18",
            "Inverted Cosine Mixture",
            -1,
            1,
            fn.inverted_cosine_mixture,
            kind="MS",
            note="tabulated minimum -0.1*n; the printed formula is non-negative, minimum 0 at 0",
        ),
        _base("F19", "Levy 3 function", -10, 10, fn.levy3),
        _base("F20", "Levy", -10, 10, fn.levy, dim=2, kind="MN", location=_ones),
        _base("F21", "Levy and Montalvo", -5, 5, fn.levy_montalvo, kind="MS", location=_ones),
        _base(
            "F22",
            "Noise",
            -1.28,
            1.28,
            fn.quartic_noise,
            location=None,
            stochastic=True,
        ),
        _base(
            "F23",
            "Pathological function",
            -100,
            100,
            fn.shubert_product,
            kind="MN",
            minimum=None,
            location=None,
            note="row prints a Shubert-type product in x1; the printed formula is used",
        ),
        _base("F24", "Perm", -20, 20, fn.perm, kind="MN", location=_perm_location),
        _base("F25", "Powel", -4, 5, fn.powell, dim=4, kind="UN", min_dim=4),
        _base("F26", "Quartic", -128, 128, fn.weighted_quartic, kind="MS"),
        _base("F27", "Rastrigin", -5.12, 5.12, fn.rastrigin, kind="MN"),
        _base(
            "F28",
            "Rotated hyperellipsoid",
            -100,
            100,
            fn.rotated_hyperellipsoid,
            kind="U",
            note="inner square restored: sum_i sum_{j<=i} x_j^2",
        ),
        _base("F29", "Rosenbrock", -30, 30, fn.rosenbrock, kind="UN", location=_ones),
        _base(
            "F30",
            "Schwefel 2.26",
            -500,
            500,
            fn.schwefel_226,
            kind="MS",
            minimum=_schwefel_minimum,
            location=_schwefel_location,
        ),
        _base("F31", "Schwefel 1.2", -100, 100, fn.schwefel_12, kind="UN"),
        _base("F32", "Schwefel 2.22", -100, 100, fn.schwefel_222, kind="UN"),
        _base("F33", "Schwefel 2.21", -100, 100, fn.schwefel_221, kind="US"),
        _base("F34", "Sphere", -100, 100, fn.sphere, kind="US"),
        _base(
            "F35",
            "Step",
            -100,
            100,
            fn.step,
            kind="US",
            note="step restored to floor(x_i + 0.5)^2",
        ),
        _base("F36", "Sum Squares", -10, 10, fn.sum_squares, kind="US"),
        _base("F37", "Sum-Power", -1, 1, fn.sum_power, kind="US"),
        _base("F38", "Sum of Different Power", -100, 100, fn.sum_of_different_powers, kind="US"),
        _transformed("F39", "SR-F4", "F4", rotate=True),
        _transformed("F40", "SR-F38", "F38", rotate=True),
        _transformed("F41", "SR-F45", "F45", rotate=True),
        _transformed("F42", "SR-F29", "F29", rotate=True, kind="MN"),
        _transformed("F43", "SR-F27", "F27", rotate=True, kind="MS"),
        _base(
            "F44",
            "Wavy 1",
            -100,
            100,
            fn.zakharov,
            dim=2,
            kind="MS",
            note="Wavy 1 and Zakharov rows carry each other's formula; printed formulas used",
        ),
        _base("F45", "Zakharov", -5, 10, fn.wavy, dim=10, kind="UN"),
        _base("F46", "Salomon", -100, 100, fn.salomon, kind="MN"),
        _base(
            "F47",
            "Weierstrass Function",
            -0.5,
            0.5,
            fn.weierstrass,
            dim=50,
            kind="MN",
            note="constant offset restored so the minimum is 0",
        ),
    ]


# CEC base id -> (name, formula, optimum location, known minimum)
_CEC_BASES = {
    "CEC01": ("High Conditioned Elliptic", fn.elliptic, _zeros, 0.0),
    "CEC02": ("Bent Cigar", fn.bent_cigar, _zeros, 0.0),
    "CEC03": ("Discus", fn.discus, _zeros, 0.0),
    "CEC04": ("Rosenbrock", fn.rosenbrock, _ones, 0.0),
    "CEC05": ("Ackley", fn.ackley, _zeros, 0.0),
    "CEC06": ("Weierstrass", fn.weierstrass, _zeros, 0.0),
    "CEC07": ("Griewank", fn.griewank, _zeros, 0.0),
    "CEC08": ("Rastrigin", fn.rastrigin, _zeros, 0.0),
    "CEC09": ("Rastrigin", fn.rastrigin, _zeros, 0.0),
    "CEC10": ("Schwefel", fn.schwefel_226, _schwefel_location, _schwefel_minimum),
    "CEC11": ("Schwefel", fn.schwefel_226, _schwefel_location, _schwefel_minimum),
    "CEC12": ("Katsuura", fn.katsuura, _zeros, 0.0),
    "CEC13": ("HappyCat", fn.happycat, _minus_ones, 0.0),
    "CEC14": ("HGBat", fn.hgbat, _minus_ones, 0.0),
}

# C id -> (scheme, base or parts); S = shift, SR = shift-rotate, SH = shifted
# hybrid of CEC bases, H = hybrid of C functions
_C_SUITE = {
    "C1": ("S", "CEC01"),
    "C2": ("S", "CEC02"),
    "C3": ("S", "CEC03"),
    "C4": ("S", "CEC04"),
    "C5": ("S", "CEC05"),
    "C6": ("S", "CEC06"),
    "C7": ("S", "CEC07"),
    "C8": ("S", "CEC08"),
    "C9": ("SR", "CEC08"),
    "C10": ("S", "CEC09"),
    "C11": ("SR", "CEC09"),
    "C12": ("SR", "CEC10"),
    "C13": ("SR", "CEC11"),
    "C14": ("SR", "CEC12"),
    "C15": ("SR", "CEC13"),
    "C16": ("SR", "CEC14"),
    "C17": ("SH", ["CEC09", "CEC08", "CEC01"]),
    "C18": ("SH", ["CEC02", "CEC12", "CEC08"]),
    "C19": ("SH", ["CEC07", "CEC06", "CEC04", "CEC14"]),
    "C20": ("SH", ["CEC12", "CEC03", "CEC13", "CEC08"]),
    "C21": ("SH", ["CEC14", "CEC12", "CEC04", "CEC09", "CEC01"]),
    "C22": ("SH", ["CEC10", "CEC11", "CEC13", "CEC09", "CEC05"]),
    "C23": ("H", ["C4", "C1", "C2", "C3", "C1"]),
    "C24": ("H", ["C10", "C9", "C14"]),
    "C25": ("H", ["C11", "C9", "C1"]),
    "C26": ("H", ["C11", "C13", "C1", "C6", "C7"]),
    "C27": ("H", ["C14", "C9", "C11", "C6", "C1"]),
    "C28": ("H", ["C15", "C13", "C13", "C11", "C16", "C1"]),
    "C29": ("H", ["C17", "C18", "C19"]),
    "C30": ("H", ["C20", "C21", "C22"]),
}


def _cec_entries() -> List[_Entry]:
    entries = [
        _base(
            cec_id,
            f"{cec_id} {name}",
            -100,
            100,
            formula,
            minimum=minimum,
            location=location,
            suite="cec",
        )
        for cec_id, (name, formula, location, minimum) in _CEC_BASES.items()
    ]

    for c_id, (scheme, source) in _C_SUITE.items():
        if scheme in ("S", "SR"):
            base_name = _CEC_BASES[str(source)][0]
            prefix = "Shifted" if scheme == "S" else "Shifted and Rotated"
            entries.append(
                _transformed(
                    c_id,
                    f"{prefix} {base_name} ({source})",
                    str(source),
                    rotate=scheme == "SR",
                    suite="cec",
                )
            )
        else:
            parts = list(source)
            entries.append(
                _hybrid(
                    c_id,
                    f"Hybrid [{', '.join(parts)}]",
                    parts,
                    shifted=scheme == "SH",
                    suite="cec",
                )
            )
    return entries


@lru_cache(maxsize=1)
def _catalog() -> Dict[str, _Entry]:
    entries = _classical_entries() + _cec_entries()
    catalog = {entry.id: entry for entry in entries}
    for entry in entries:
        if entry.note:
            logger.info(f"{entry.id} {entry.name}: {entry.note}")
    logger.debug(f"Objective registry built with {len(catalog)} functions")
    return catalog


def _normalize_id(function_id: str) -> str:
    return str(function_id).strip().upper()


@lru_cache(maxsize=None)
def _bind(function_id: str, dim: int) -> ObjectiveSpec:
    entry = _catalog()[function_id]
    try:
        return entry.build(dim, function_id)
    except ObjectiveError as e:
        raise ObjectiveError(f"{function_id} cannot be built with dim={dim}: {e}") from e


def get_objective(function_id: str, dim: Optional[int] = None) -> ObjectiveSpec:
    """
    Look up a registered function bound to a dimension.

    Args:
        function_id: Registry id (F1-F47, CEC01-CEC14, C1-C30; case-insensitive)
        dim: Problem dimension (the registered default if None)

    Returns:
        ObjectiveSpec for that dimension

    Raises:
        UnknownFunctionError: No function registered under the id
        ObjectiveError: dim < 1 or too small for the function's structure
    """
    key = _normalize_id(function_id)
    catalog = _catalog()
    if key not in catalog:
        raise UnknownFunctionError(str(function_id))

    n = catalog[key].default_dim if dim is None else int(dim)
    if n < 1:
        raise ObjectiveError(f"dim must be >= 1 (got {n})")
    return _bind(key, n)


def registry_ids(suite: str = "all") -> List[str]:
    """Registered ids in registry order, optionally restricted to a suite."""
    if suite not in SUITES:
        raise ValueError(f"suite must be one of {SUITES} (got '{suite}')")
    return [
        entry.id for entry in _catalog().values() if suite == "all" or entry.suite == suite
    ]


def registry_list(suite: str = "all") -> List[ObjectiveSpec]:
    """Every registered function at its default dimension."""
    return [get_objective(function_id) for function_id in registry_ids(suite)]


def registry_frame(suite: str = "all") -> pd.DataFrame:
    """Registry table with columns id,name,dim,lower,upper,known_min,tags."""
    rows = [
        {
            "id": spec.id,
            "name": spec.name,
            "dim": spec.dim,
            "lower": float(spec.lower),
            "upper": float(spec.upper),
            "known_min": spec.known_minimum,
            "tags": ";".join(sorted(spec.tags)),
        }
        for spec in registry_list(suite)
    ]
    return pd.DataFrame(
        rows, columns=["id", "name", "dim", "lower", "upper", "known_min", "tags"]
    )


def dump_registry_csv(path: Union[str, Path], suite: str = "all") -> Path:
    """Write the registry table as CSV; returns the written path."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    registry_frame(suite).to_csv(target, index=False)
    logger.info(f"Registry written to {target}")
    return target
