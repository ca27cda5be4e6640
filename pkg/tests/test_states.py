"""Tests for state containers, Bloch conversions, and Born probabilities."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from infolab.states import (
    CANONICAL_TRIAD,
    Direction,
    MeasurementTriad,
    ProbDist,
    QubitState,
    X_DIR,
    Y_DIR,
    Z_DIR,
    bloch_from_density,
    born_probabilities,
    density_from_bloch,
    named_state,
    random_pure_state,
    random_triad,
)

PLUS_X_RHO = 0.5 * np.array([[1, 1], [1, 1]], dtype=complex)
PLUS_Y_RHO = 0.5 * np.array([[1, -1j], [1j, 1]], dtype=complex)


def bloch_in_ball(seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    vec = rng.normal(size=3)
    return rng.random() * vec / np.linalg.norm(vec)


class TestProbDist:
    def test_valid(self):
        dist = ProbDist((0.25, 0.75))
        assert dist.n == 2
        assert list(dist) == [0.25, 0.75]

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError, match="sum"):
            ProbDist((0.5, 0.6))

    def test_rejects_negative_entry(self):
        with pytest.raises(ValueError, match="outside"):
            ProbDist((1.2, -0.2))

    def test_rejects_single_outcome(self):
        with pytest.raises(ValueError, match="outcomes"):
            ProbDist((1.0,))

    def test_tolerates_float_noise(self):
        ProbDist((0.1 + 1e-14, 0.9 - 1e-14))

    def test_immutable(self):
        dist = ProbDist((0.5, 0.5))
        with pytest.raises(ValueError):
            dist.probs[0] = 0.7


class TestQubitState:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            QubitState(np.array([[1.0, 0.5], [0.0, 0.0]]))

    def test_rejects_wrong_trace(self):
        with pytest.raises(ValueError, match="trace"):
            QubitState(np.diag([0.7, 0.7]))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(ValueError, match="eigenvalue"):
            QubitState(np.diag([1.5, -0.5]))

    def test_purity_flags(self):
        assert named_state("plus-z").is_pure()
        assert not named_state("mixed").is_pure()
        assert named_state("mixed").purity == pytest.approx(0.5)


class TestBlochConversions:
    @pytest.mark.parametrize(
        "rho, expected",
        [
            (np.diag([1.0, 0.0]), (0.0, 0.0, 1.0)),
            (0.5 * np.eye(2), (0.0, 0.0, 0.0)),
            (PLUS_X_RHO, (1.0, 0.0, 0.0)),
        ],
    )
    def test_bloch_from_density_anchors(self, rho, expected):
        np.testing.assert_allclose(bloch_from_density(rho), expected, atol=1e-12)

    @pytest.mark.parametrize(
        "r, expected_rho",
        [
            ((0.0, 0.0, 0.0), 0.5 * np.eye(2)),
            ((0.0, 0.0, 1.0), np.diag([1.0, 0.0])),
            ((0.0, 1.0, 0.0), PLUS_Y_RHO),
        ],
    )
    def test_density_from_bloch_anchors(self, r, expected_rho):
        np.testing.assert_allclose(density_from_bloch(r).rho, expected_rho, atol=1e-12)

    def test_rejects_vector_outside_ball(self):
        with pytest.raises(ValueError, match="unit ball"):
            density_from_bloch((0.8, 0.8, 0.8))

    def test_roundtrip_on_random_states(self):
        for seed in range(1000):
            r = bloch_in_ball(seed)
            state = density_from_bloch(r)
            np.testing.assert_allclose(state.bloch, r, atol=1e-12)
            back = density_from_bloch(state.bloch)
            np.testing.assert_allclose(back.rho, state.rho, atol=1e-12)

    def test_pure_iff_unit_radius(self):
        assert density_from_bloch((0.0, 1.0, 0.0)).is_pure()
        mixed = density_from_bloch((0.0, 0.5, 0.0))
        assert mixed.purity == pytest.approx(0.5 * (1 + 0.25), abs=1e-12)


class TestBornProbabilities:
    @pytest.mark.parametrize(
        "state_name, direction, expected",
        [
            ("plus-z", Z_DIR, (1.0, 0.0)),
            ("mixed", Y_DIR, (0.5, 0.5)),
            ("plus-x", Z_DIR, (0.5, 0.5)),
        ],
    )
    def test_anchors(self, state_name, direction, expected):
        probs = born_probabilities(named_state(state_name), direction).probs
        np.testing.assert_allclose(probs, expected, atol=1e-12)

    @given(seed=st.integers(0, 2**31), dir_seed=st.integers(0, 2**31))
    @settings(max_examples=200, deadline=None)
    def test_bounds_and_normalization(self, seed, dir_seed):
        state = density_from_bloch(bloch_in_ball(seed))
        vec = np.random.default_rng(dir_seed).normal(size=3)
        direction = Direction(vec / np.linalg.norm(vec))
        probs = born_probabilities(state, direction).probs
        assert np.all(probs >= -1e-12) and np.all(probs <= 1 + 1e-12)
        assert abs(probs.sum() - 1.0) <= 1e-12

    def test_pure_state_is_certain_along_own_axis(self):
        for seed in range(100):
            state = random_pure_state(seed)
            probs = born_probabilities(state, Direction(state.bloch)).probs
            np.testing.assert_allclose(probs, (1.0, 0.0), atol=1e-12)


class TestDirectionsAndTriads:
    def test_direction_must_be_unit(self):
        with pytest.raises(ValueError, match="norm"):
            Direction((1.0, 1.0, 0.0))

    def test_normalized_constructor(self):
        d = Direction.normalized((3.0, 0.0, 4.0))
        np.testing.assert_allclose(d.vec, (0.6, 0.0, 0.8))
        with pytest.raises(ValueError, match="zero"):
            Direction.normalized((0.0, 0.0, 0.0))

    def test_triad_rejects_non_orthogonal(self):
        d = Direction.normalized((1.0, 1.0, 0.0))
        with pytest.raises(ValueError, match="orthogonal"):
            MeasurementTriad(X_DIR, d, Z_DIR)

    def test_triad_rejects_left_handed(self):
        with pytest.raises(ValueError, match="right-handed"):
            MeasurementTriad(Y_DIR, X_DIR, Z_DIR)

    def test_canonical_triad_matrix(self):
        np.testing.assert_allclose(CANONICAL_TRIAD.matrix, np.eye(3))

    def test_hand_typed_slack(self):
        # orthonormality tolerance is looser (1e-10) than the algebraic 1e-12
        v = 0.7071067811865476
        MeasurementTriad.from_matrix([[v, v, 0.0], [-v, v, 0.0], [0.0, 0.0, 1.0]])


class TestRandomSampling:
    def test_deterministic_for_fixed_seed(self):
        a, b = random_pure_state(7), random_pure_state(7)
        np.testing.assert_array_equal(a.rho, b.rho)
        ta, tb = random_triad(7), random_triad(7)
        np.testing.assert_array_equal(ta.matrix, tb.matrix)

    def test_pure_states_are_pure(self):
        for seed in range(50):
            assert abs(random_pure_state(seed).purity - 1.0) <= 1e-12

    def test_sphere_uniformity(self):
        # mean Bloch vector of uniform sphere samples concentrates near zero
        rng = np.random.default_rng(2024)
        mean = np.zeros(3)
        for _ in range(10_000):
            mean += random_pure_state(rng).bloch
        assert np.linalg.norm(mean / 10_000) < 0.05

    def test_triads_are_valid_and_cover_orientations(self):
        z_components = [random_triad(seed).n1.vec[2] for seed in range(200)]
        assert min(z_components) < -0.5 and max(z_components) > 0.5


class TestNamedStates:
    @pytest.mark.parametrize(
        "name, bloch",
        [
            ("plus-x", (1, 0, 0)),
            ("minus-y", (0, -1, 0)),
            ("plus-z", (0, 0, 1)),
            ("mixed", (0, 0, 0)),
        ],
    )
    def test_lookup(self, name, bloch):
        np.testing.assert_allclose(named_state(name).bloch, bloch, atol=1e-12)

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown state"):
            named_state("sideways")
