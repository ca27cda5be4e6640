"""Tests for information vectors, triad rotations, and unitary evolution."""

import numpy as np
import pytest

from infolab.infospace import (
    ConservationReport,
    Hamiltonian,
    InfoVector,
    conservation_check,
    evolve,
    evolve_euler,
    info_vector,
    rotate_triad,
    rotation_matrix,
    total_information,
)
from infolab.states import (
    CANONICAL_TRIAD,
    Direction,
    Y_DIR,
    Z_DIR,
    density_from_bloch,
    named_state,
    random_pure_state,
    random_triad,
)


def random_state(seed, pure=None):
    rng = np.random.default_rng(seed)
    vec = rng.normal(size=3)
    vec /= np.linalg.norm(vec)
    if pure is None:
        pure = bool(rng.random() < 0.5)
    return density_from_bloch(vec if pure else rng.random() * vec)


def random_hamiltonian(seed):
    rng = np.random.default_rng(seed)
    return Hamiltonian.from_pauli_coefficients(rng.normal(size=3) * 2.0)


class TestInfoVector:
    def test_spin_up_z_canonical(self):
        iv = info_vector(named_state("plus-z"), CANONICAL_TRIAD)
        assert (iv.i1, iv.i2, iv.i3) == pytest.approx((0.0, 0.0, 1.0), abs=1e-12)

    def test_maximally_mixed_any_triad(self):
        for seed in range(10):
            iv = info_vector(named_state("mixed"), random_triad(seed))
            assert iv.as_array() == pytest.approx(np.zeros(3), abs=1e-12)

    def test_rotated_triad_hand_computation(self):
        # rotating the canonical triad by +90 deg about y maps x -> -z, so
        # the first component picks up -1 against a spin-up-z state
        triad = rotate_triad(CANONICAL_TRIAD, Y_DIR, np.pi / 2)
        iv = info_vector(named_state("plus-z"), triad)
        assert (iv.i1, iv.i2, iv.i3) == pytest.approx((-1.0, 0.0, 0.0), abs=1e-12)

    def test_matches_bloch_in_triad_basis(self):
        state = random_state(5)
        triad = random_triad(5)
        np.testing.assert_allclose(
            info_vector(state, triad).as_array(), triad.matrix @ state.bloch, atol=1e-12
        )

    def test_component_validation(self):
        with pytest.raises(ValueError, match="components"):
            InfoVector(1.5, 0.0, 0.0)
        with pytest.raises(ValueError, match="longer"):
            InfoVector(0.8, 0.8, 0.8)


class TestTotalInformation:
    def test_pure_state_one_bit(self):
        assert total_information(InfoVector(0.0, 0.0, 1.0)) == 1.0

    def test_maximally_mixed_zero(self):
        assert total_information(InfoVector(0.0, 0.0, 0.0)) == 0.0

    def test_equals_squared_bloch_radius(self):
        state = density_from_bloch((0.3, 0.0, 0.4))  # radius 0.5
        for seed in range(20):
            total = total_information(info_vector(state, random_triad(seed)))
            assert total == pytest.approx(0.25, abs=1e-12)


class TestRotateTriad:
    def test_zero_angle_is_identity(self):
        triad = random_triad(3)
        rotated = rotate_triad(triad, Z_DIR, 0.0)
        np.testing.assert_allclose(rotated.matrix, triad.matrix, atol=1e-15)

    def test_quarter_turn_about_z(self):
        rotated = rotate_triad(CANONICAL_TRIAD, Z_DIR, np.pi / 2)
        np.testing.assert_allclose(
            rotated.matrix, [[0, 1, 0], [-1, 0, 0], [0, 0, 1]], atol=1e-12
        )

    def test_full_turn_returns_triad(self):
        triad = random_triad(11)
        rotated = rotate_triad(triad, Direction.normalized((1.0, 2.0, 2.0)), 2 * np.pi)
        np.testing.assert_allclose(rotated.matrix, triad.matrix, atol=1e-10)

    def test_composition_matches_summed_angle(self):
        triad = random_triad(13)
        axis = Direction.normalized((1.0, -1.0, 0.5))
        once = rotate_triad(rotate_triad(triad, axis, 0.4), axis, 0.9)
        summed = rotate_triad(triad, axis, 1.3)
        np.testing.assert_allclose(once.matrix, summed.matrix, atol=1e-10)

    def test_rotation_matrix_is_special_orthogonal(self):
        rot = rotation_matrix(Direction.normalized((2.0, 1.0, -1.0)), 1.1)
        np.testing.assert_allclose(rot @ rot.T, np.eye(3), atol=1e-12)
        assert np.linalg.det(rot) == pytest.approx(1.0, abs=1e-12)


class TestEvolve:
    def test_zero_hamiltonian_is_identity(self):
        state = random_state(17)
        evolved = evolve(state, Hamiltonian(np.zeros((2, 2))), 3.7)
        np.testing.assert_allclose(evolved.rho, state.rho, atol=1e-15)

    def test_larmor_half_turn_flips_x(self):
        # H = (w/2) sigma_z with w = 1 precesses the equator by angle t
        h = Hamiltonian.from_pauli_coefficients((0.0, 0.0, 0.5))
        evolved = evolve(named_state("plus-x"), h, np.pi)
        np.testing.assert_allclose(evolved.bloch, (-1.0, 0.0, 0.0), atol=1e-12)

    def test_eigenstate_is_stationary(self):
        h = Hamiltonian.from_pauli_coefficients((0.0, 0.0, 0.5))
        evolved = evolve(named_state("plus-z"), h, 2.1)
        np.testing.assert_allclose(evolved.rho, named_state("plus-z").rho, atol=1e-12)

    def test_trace_part_of_hamiltonian_is_irrelevant(self):
        state = random_state(23)
        base = Hamiltonian.from_pauli_coefficients((0.4, -0.2, 0.9))
        shifted = Hamiltonian(base.matrix + 1.7 * np.eye(2))
        np.testing.assert_allclose(
            evolve(state, base, 2.2).rho, evolve(state, shifted, 2.2).rho, atol=1e-12
        )

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            Hamiltonian(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_finite_time(self):
        h = random_hamiltonian(1)
        with pytest.raises(ValueError, match="finite"):
            evolve(named_state("plus-x"), h, np.inf)

    def test_preserves_density_invariants(self):
        # QubitState construction re-validates hermiticity/trace/positivity
        for seed in range(50):
            state = random_state(seed)
            evolved = evolve(state, random_hamiltonian(seed + 1000), 4.2)
            assert abs(np.trace(evolved.rho) - 1.0) <= 1e-12
            assert abs(evolved.purity - state.purity) <= 1e-12

    def test_pauli_decomposition_roundtrip(self):
        h = random_hamiltonian(31)
        a0, a = h.pauli_decomposition()
        rebuilt = a0 * np.eye(2) + Hamiltonian.from_pauli_coefficients(a).matrix
        np.testing.assert_allclose(rebuilt, h.matrix, atol=1e-12)


class TestEulerStepperDrift:
    def test_coarse_steps_drift_and_refinement_helps(self):
        state = named_state("plus-x")
        h = Hamiltonian.from_pauli_coefficients((0.0, 0.0, 1.0))
        exact = evolve(state, h, 2.0).rho
        coarse = evolve_euler(state, h, 2.0, steps=20)
        fine = evolve_euler(state, h, 2.0, steps=20_000)
        coarse_err = np.max(np.abs(coarse - exact))
        fine_err = np.max(np.abs(fine - exact))
        assert coarse_err > 1e-2          # visibly off the manifold
        assert fine_err < coarse_err / 100
        with pytest.raises(ValueError, match="step"):
            evolve_euler(state, h, 1.0, steps=0)


class TestConservation:
    def test_pure_state_stays_at_one(self):
        times = np.linspace(0.0, 10.0, 50)
        report = conservation_check(
            random_pure_state(3), random_hamiltonian(4), CANONICAL_TRIAD, times
        )
        np.testing.assert_allclose(report.i_total_values, 1.0, atol=1e-12)
        assert report.max_drift < 1e-12

    def test_maximally_mixed_stays_at_zero(self):
        report = conservation_check(
            named_state("mixed"), random_hamiltonian(5), CANONICAL_TRIAD, [0.0, 1.0, 2.0]
        )
        np.testing.assert_allclose(report.i_total_values, 0.0, atol=1e-15)

    def test_mixed_radius_conserved(self):
        state = density_from_bloch((0.0, 0.7, 0.0))
        report = conservation_check(
            state, random_hamiltonian(6), random_triad(6), np.linspace(0, 5, 25)
        )
        np.testing.assert_allclose(report.i_total_values, 0.49, atol=1e-12)

    def test_rejects_unsorted_times(self):
        with pytest.raises(ValueError, match="sorted"):
            conservation_check(
                named_state("plus-x"), random_hamiltonian(7), CANONICAL_TRIAD, [1.0, 0.5]
            )

    def test_report_validates_lengths(self):
        with pytest.raises(ValueError, match="lengths"):
            ConservationReport(times=[0.0, 1.0], i_total_values=[1.0], max_drift=0.0)

    def test_report_validates_drift_consistency(self):
        with pytest.raises(ValueError, match="max_drift"):
            ConservationReport(times=[0.0, 1.0], i_total_values=[1.0, 0.8], max_drift=0.0)


class TestInvariances:
    def test_triad_rotation_invariance(self):
        rng = np.random.default_rng(99)
        for _ in range(200):
            state = random_state(rng.integers(1 << 31))
            triad = random_triad(rng.integers(1 << 31))
            axis = Direction.normalized(rng.normal(size=3))
            rotated = rotate_triad(triad, axis, rng.uniform(0, 2 * np.pi))
            before = total_information(info_vector(state, triad))
            after = total_information(info_vector(state, rotated))
            assert abs(before - after) <= 1e-10

    def test_schroedinger_heisenberg_agreement(self):
        # evolving the state equals counter-rotating the triad by 2|a|t
        rng = np.random.default_rng(7)
        for _ in range(100):
            state = random_state(rng.integers(1 << 31))
            coeffs = rng.normal(size=3)
            norm = np.linalg.norm(coeffs)
            if norm < 1e-6:
                continue
            h = Hamiltonian.from_pauli_coefficients(coeffs)
            t = rng.uniform(0.0, 5.0)
            evolved = info_vector(evolve(state, h, t), CANONICAL_TRIAD).as_array()
            counter = info_vector(
                state,
                rotate_triad(CANONICAL_TRIAD, Direction(coeffs / norm), -2.0 * norm * t),
            ).as_array()
            np.testing.assert_allclose(evolved, counter, atol=1e-10)
