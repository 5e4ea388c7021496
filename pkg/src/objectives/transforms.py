"""
Seeded shift and shift-rotate transforms for benchmark functions.

A transform maps a candidate x to y = R·(x − s) before the base formula is
evaluated. Both the shift s and the orthonormal matrix R are regenerated from
a seed, so a transform is fully described by (seed, dim, base bounds, rotate).
"""

from dataclasses import dataclass, field
from typing import Dict

import numpy as np

# Shift coordinates are multiples of 2⁻¹⁰ so that s + y* − s == y* holds in
# floating point for integer-valued optima.
_SHIFT_GRID = 1024.0


class TransformParseError(ValueError):
    """Transform text is not in `seed=.. dim=.. lower=.. upper=.. rotate=..` form."""


@dataclass(frozen=True)
class TransformSpec:
    """Shift vector and rotation matrix regenerated from `seed`."""

    seed: int
    dim: int
    lower: float
    upper: float
    rotate: bool
    shift: np.ndarray = field(repr=False, compare=False)
    rotation: np.ndarray = field(repr=False, compare=False)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """Map a candidate into the base function's frame."""
        offset = x - self.shift
        if not self.rotate:
            return offset
        return self.rotation @ offset

    def invert(self, y: np.ndarray) -> np.ndarray:
        """Map a base-frame point back to candidate space: s + Rᵀy."""
        if not self.rotate:
            return self.shift + y
        return self.shift + self.rotation.T @ y

    def to_text(self) -> str:
        """Flat text form; `from_text` regenerates an identical transform."""
        return (
            f"seed={self.seed} dim={self.dim} lower={self.lower!r} "
            f"upper={self.upper!r} rotate={int(self.rotate)}"
        )

    @classmethod
    def from_text(cls, text: str) -> "TransformSpec":
        fields_: Dict[str, str] = {}
        for token in text.split():
            key, sep, value = token.partition("=")
            if not sep:
                raise TransformParseError(f"Malformed transform token '{token}' in '{text}'")
            fields_[key] = value

        missing = {"seed", "dim", "lower", "upper", "rotate"} - set(fields_)
        if missing:
            raise TransformParseError(f"Transform text missing {sorted(missing)}: '{text}'")

        try:
            return generate_transform(
                seed=int(fields_["seed"]),
                dim=int(fields_["dim"]),
                lower=float(fields_["lower"]),
                upper=float(fields_["upper"]),
                rotate=fields_["rotate"] not in ("0", "false", "False"),
            )
        except ValueError as e:
            raise TransformParseError(f"Invalid transform text '{text}': {e}") from e


def random_rotation(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormal matrix from the QR factorization of a standard-normal matrix."""
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def generate_transform(
    seed: int,
    dim: int,
    lower: float = -100.0,
    upper: float = 100.0,
    rotate: bool = True,
) -> TransformSpec:
    """
    Build the transform for one function instance.

    The shift is uniform in the inner 80% of [lower, upper]; the rotation is
    the identity when `rotate` is False.

    Args:
        seed: Non-negative seed; identical seeds give identical transforms
        dim: Problem dimension (>= 1)
        lower: Lower bound of the base function
        upper: Upper bound of the base function
        rotate: Also generate a rotation

    Returns:
        TransformSpec

    Raises:
        ValueError: dim < 1, negative seed or inverted bounds
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1 (got {dim})")
    if seed < 0:
        raise ValueError(f"seed must be non-negative (got {seed})")
    if not lower < upper:
        raise ValueError(f"lower must be < upper (got [{lower}, {upper}])")

    rng = np.random.default_rng(seed)
    margin = 0.1 * (upper - lower)
    shift = rng.uniform(lower + margin, upper - margin, size=dim)
    shift = np.round(shift * _SHIFT_GRID) / _SHIFT_GRID
    rotation = random_rotation(dim, rng) if rotate else np.eye(dim)

    return TransformSpec(
        seed=seed,
        dim=dim,
        lower=float(lower),
        upper=float(upper),
        rotate=rotate,
        shift=shift,
        rotation=rotation,
    )
