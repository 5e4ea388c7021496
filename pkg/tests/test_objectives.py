"""
Unit tests for the benchmark function registry, transforms and composites.
"""

import numpy as np
import pandas as pd
import pytest

from src.objectives import (
    ObjectiveError,
    TransformParseError,
    TransformSpec,
    UnknownFunctionError,
    composition_compose,
    dump_registry_csv,
    equal_partition,
    evaluate,
    generate_transform,
    get_objective,
    hybrid_compose,
    registry_ids,
    registry_list,
    tags_from_type,
)

# Functions whose known minimum involves Schwefel's tabulated constant or a
# rotated HappyCat/HGBat, whose square-root terms amplify rounding at the optimum
LOOSE_MINIMUM = {
    "F30",
    "CEC10",
    "CEC11",
    "C12",
    "C13",
    "C15",
    "C16",
    "C19",
    "C20",
    "C21",
    "C22",
    "C26",
    "C28",
    "C29",
    "C30",
}


def _with_known_optimum():
    return [
        spec
        for spec in registry_list()
        if spec.known_minimum is not None and spec.optimum_location is not None
    ]


class TestRegistry:
    """Test registry lookup and listing."""

    def test_sphere_lookup(self):
        """Test that F34 is Sphere on [-100, 100]."""
        spec = get_objective("F34")

        assert spec.name == "Sphere"
        assert spec.bounds == (-100.0, 100.0)
        assert spec.dim == 30
        assert spec.tags == frozenset({"unimodal", "separable"})

    def test_lookup_is_case_insensitive(self):
        """Test that ids are normalized."""
        assert get_objective(" f34 ", dim=5) == get_objective("F34", dim=5)

    def test_unknown_id(self):
        """Test that an unregistered id raises UnknownFunctionError naming it."""
        with pytest.raises(UnknownFunctionError) as exc_info:
            get_objective("F999")

        assert "F999" in str(exc_info.value)

    def test_invalid_dimension(self):
        """Test that dim < 1 and too-small structural dims are rejected."""
        with pytest.raises(ObjectiveError):
            get_objective("F34", dim=0)
        with pytest.raises(ObjectiveError, match="F25"):
            get_objective("F25", dim=3)

    def test_classical_suite_is_complete(self):
        """Test that the classical suite registers F1 through F47."""
        ids = registry_ids("classical")

        assert len(ids) >= 40
        assert ids == [f"F{k}" for k in range(1, 48)]

    def test_cec_suite(self):
        """Test that the CEC suite registers the base and constructed functions."""
        ids = registry_ids("cec")

        assert ids[:14] == [f"CEC{k:02d}" for k in range(1, 15)]
        assert ids[14:] == [f"C{k}" for k in range(1, 31)]

    def test_unknown_suite(self):
        """Test that an unknown suite name is rejected."""
        with pytest.raises(ValueError, match="suite"):
            registry_ids("bbob")

    def test_same_id_and_dim_gives_same_function(self):
        """Test that transforms are regenerated identically."""
        x = np.linspace(-50, 50, 10)

        assert evaluate(get_objective("C9", dim=10), x) == evaluate(get_objective("C9", dim=10), x)

    def test_dump_registry_csv(self, tmp_path):
        """Test the registry CSV columns and content."""
        target = dump_registry_csv(tmp_path / "out" / "registry.csv", suite="classical")

        frame = pd.read_csv(target)
        assert list(frame.columns) == ["id", "name", "dim", "lower", "upper", "known_min", "tags"]
        assert len(frame) == 47
        sphere = frame[frame["id"] == "F34"].iloc[0]
        assert sphere["lower"] == -100.0
        assert sphere["known_min"] == 0.0

    def test_tags_from_type(self):
        """Test type-code mapping."""
        assert tags_from_type("mn") == frozenset({"multimodal", "non-separable"})
        assert tags_from_type("") == frozenset()


class TestKnownMinima:
    """Test that every function with a known optimum location reaches its minimum there."""

    def test_suite_has_known_optima(self):
        """Test that the check below covers most of the registry."""
        covered = {spec.id for spec in _with_known_optimum()}

        assert len(covered) >= 80
        assert {"F5", "F22", "F23"}.isdisjoint(covered)

    @pytest.mark.parametrize("spec", _with_known_optimum(), ids=lambda spec: spec.id)
    def test_minimum_at_optimum(self, spec):
        """Test the value at the optimum location against the known minimum."""
        tolerance = 1e-2 * spec.dim if spec.id in LOOSE_MINIMUM else 1e-9

        value = evaluate(spec, spec.optimum_location)

        assert abs(value - spec.known_minimum) <= tolerance

    def test_sphere_value(self):
        """Test F34 at (3, 4)."""
        assert evaluate(get_objective("F34", dim=2), [3.0, 4.0]) == 25.0

    def test_ackley_origin(self):
        """Test F1 at the origin in 30 dimensions."""
        assert abs(evaluate(get_objective("F1", dim=30), np.zeros(30))) <= 1e-9

    def test_rosenbrock_ones(self):
        """Test F29 at the all-ones vector."""
        assert evaluate(get_objective("F29", dim=30), np.ones(30)) == 0.0

    def test_schwefel_per_dimension(self):
        """Test F30 against -418.983 per dimension."""
        spec = get_objective("F30", dim=10)

        value = evaluate(spec, np.full(10, 420.9687463))

        assert abs(value - (-418.983 * 10)) <= 0.01 * 10

    def test_fletcher_powell_is_finite_and_pure(self, rng):
        """Test F9 only for finiteness and repeatability."""
        spec = get_objective("F9")
        x = rng.uniform(-100, 100, size=spec.dim)

        assert np.isfinite(evaluate(spec, x))
        assert evaluate(spec, x) == evaluate(spec, x)


class TestEvaluate:
    """Test evaluate() input handling."""

    def test_wrong_dimension(self):
        """Test that a vector of the wrong length is rejected."""
        with pytest.raises(ObjectiveError, match="expects a vector of 2"):
            evaluate(get_objective("F34", dim=2), [1.0, 2.0, 3.0])

    def test_stochastic_needs_stream(self):
        """Test that F22 requires a noise stream."""
        spec = get_objective("F22", dim=4)

        with pytest.raises(ObjectiveError, match="stochastic"):
            evaluate(spec, np.zeros(4))

    def test_stochastic_noise_is_pinned_by_stream(self):
        """Test that the same stream gives the same noisy value."""
        spec = get_objective("F22", dim=4)
        x = np.full(4, 0.5)

        first = evaluate(spec, x, rng=np.random.default_rng(9))
        second = evaluate(spec, x, rng=np.random.default_rng(9))

        assert first == second
        assert 4 * 0.5**4 <= first < 4 * 0.5**4 + 1.0

    @pytest.mark.parametrize("function_id", ["F34", "F27", "F2"])
    def test_separable_functions_sum_over_coordinates(self, function_id, rng):
        """Test f(x) = Σ f(xᵢ·eᵢ) for separable functions."""
        spec = get_objective(function_id, dim=6)

        for _ in range(20):
            x = rng.uniform(spec.lower, spec.upper, size=6)
            parts = [evaluate(spec, np.where(np.arange(6) == k, x, 0.0)) for k in range(6)]

            assert evaluate(spec, x) == pytest.approx(sum(parts), rel=1e-12, abs=1e-12)

    def test_pure_evaluation(self, rng):
        """Test that repeated evaluation gives identical values."""
        x = rng.uniform(-5, 5, size=30)

        for function_id in ("F1", "F27", "C11", "C17"):
            spec = get_objective(function_id)
            assert evaluate(spec, x) == evaluate(spec, x)


class TestTransforms:
    """Test seeded shift and rotation generation."""

    def test_one_dimensional_rotation(self):
        """Test that a 1-D rotation is ±1."""
        transform = generate_transform(seed=5, dim=1)

        assert transform.rotation.shape == (1, 1)
        assert abs(transform.rotation[0, 0]) == 1.0

    def test_same_seed_same_transform(self):
        """Test that transforms replay from their seed."""
        first = generate_transform(seed=11, dim=8)
        second = generate_transform(seed=11, dim=8)

        assert np.array_equal(first.shift, second.shift)
        assert np.array_equal(first.rotation, second.rotation)

    def test_rotation_is_orthonormal(self):
        """Test Rᵀ·R = I."""
        for dim in (2, 10, 30, 50):
            rotation = generate_transform(seed=dim, dim=dim).rotation
            residual = np.max(np.abs(rotation.T @ rotation - np.eye(dim)))

            assert residual < 1e-10

    def test_shift_within_inner_band(self):
        """Test that the shift stays in the inner 80% of the bounds."""
        transform = generate_transform(seed=3, dim=200, lower=-100.0, upper=100.0)

        assert np.all(transform.shift >= -80.0)
        assert np.all(transform.shift <= 80.0)

    def test_apply_invert_identity(self, rng):
        """Test that inverting then applying returns the point."""
        transform = generate_transform(seed=17, dim=12)
        y = rng.uniform(-10, 10, size=12)

        assert np.allclose(transform.apply(transform.invert(y)), y, atol=1e-8)

    def test_text_form_regenerates(self):
        """Test that the flat text form carries everything needed."""
        transform = generate_transform(seed=21, dim=4, lower=-5.12, upper=5.12, rotate=False)

        restored = TransformSpec.from_text(transform.to_text())

        assert restored == transform
        assert np.array_equal(restored.shift, transform.shift)
        assert restored.rotate is False

    def test_malformed_text(self):
        """Test that incomplete text is rejected."""
        with pytest.raises(TransformParseError, match="missing"):
            TransformSpec.from_text("seed=1 dim=3")
        with pytest.raises(TransformParseError, match="Malformed"):
            TransformSpec.from_text("seed 1")

    def test_invalid_arguments(self):
        """Test dimension and bound checks."""
        with pytest.raises(ValueError, match="dim"):
            generate_transform(seed=1, dim=0)
        with pytest.raises(ValueError, match="lower"):
            generate_transform(seed=1, dim=2, lower=1.0, upper=1.0)

    def test_shifted_function_at_shifted_optimum(self):
        """Test that S-spec(shift + x*) equals base(x*) exactly."""
        shifted = get_objective("C4", dim=10)
        base = get_objective("CEC04", dim=10)

        x = shifted.transform.shift + np.ones(10)

        assert evaluate(shifted, x) == evaluate(base, np.ones(10))

    def test_rotated_function_matches_base_in_rotated_frame(self, rng):
        """Test that an SR-spec evaluates the base at R·(x − s)."""
        rotated = get_objective("C9", dim=10)
        base = get_objective("CEC08", dim=10)
        x = rng.uniform(-100, 100, size=10)
        transform = rotated.transform

        expected = evaluate(base, transform.rotation @ (x - transform.shift))

        assert evaluate(rotated, x) == pytest.approx(expected, rel=1e-12)


class TestComposites:
    """Test hybrid and composition constructions."""

    def test_hybrid_sums_blocks(self):
        """Test two Sphere parts on [1, 2] | [3]."""
        spec = hybrid_compose([get_objective("F34", dim=2), get_objective("F34", dim=1)], [2, 1])

        assert spec.dim == 3
        assert evaluate(spec, [1.0, 2.0, 3.0]) == 14.0

    def test_hybrid_optimum_is_sum_of_minima(self):
        """Test that the hybrid optimum concatenates the part optima."""
        parts = [get_objective("F34", dim=2), get_objective("F29", dim=3)]
        spec = hybrid_compose(parts)

        assert spec.known_minimum == 0.0
        assert evaluate(spec, spec.optimum_location) == 0.0
        assert np.array_equal(spec.optimum_location, [0.0, 0.0, 1.0, 1.0, 1.0])

    def test_hybrid_rejects_single_part(self):
        """Test that a one-part hybrid is rejected."""
        with pytest.raises(ObjectiveError, match="at least two"):
            hybrid_compose([get_objective("F34", dim=2)])

    def test_hybrid_rejects_partition_mismatch(self):
        """Test that block sizes must match the parts."""
        with pytest.raises(ObjectiveError, match="Partition"):
            hybrid_compose([get_objective("F34", dim=2), get_objective("F34", dim=2)], [3, 1])

    def test_composition_degenerate_weights(self, rng):
        """Test that weights [1, 0, 0] reproduce the first part."""
        parts = [get_objective(f, dim=5) for f in ("F34", "F27", "F1")]
        spec = composition_compose(parts, [1.0, 0.0, 0.0])
        x = rng.uniform(-1, 1, size=5)

        assert evaluate(spec, x) == evaluate(parts[0], x)

    def test_composition_equal_weights(self):
        """Test two Spheres at weights [0.5, 0.5] at [2]."""
        sphere = get_objective("F34", dim=1)
        spec = composition_compose([sphere, sphere], [0.5, 0.5])

        assert evaluate(spec, [2.0]) == 4.0

    def test_composition_default_weights_are_equal(self):
        """Test that omitted weights split evenly."""
        sphere = get_objective("F34", dim=1)
        spec = composition_compose([sphere, sphere, sphere, sphere])

        assert evaluate(spec, [2.0]) == pytest.approx(4.0)

    def test_composition_rejects_bad_weights(self):
        """Test that weights must sum to 1 and match the parts."""
        sphere = get_objective("F34", dim=1)

        with pytest.raises(ObjectiveError, match="sum to 1"):
            composition_compose([sphere, sphere], [0.5, 0.6])
        with pytest.raises(ObjectiveError, match="Expected 2 weights"):
            composition_compose([sphere, sphere], [1.0])

    def test_equal_partition(self):
        """Test that the remainder goes to the last block."""
        assert equal_partition(10, 3) == [3, 3, 4]
        assert equal_partition(30, 5) == [6] * 5
        with pytest.raises(ObjectiveError):
            equal_partition(2, 3)
