"""
Tests for the named state families and random samplers.
"""

import math

import numpy as np
from django.test import SimpleTestCase
from numpy.testing import assert_allclose, assert_array_equal

from apps.entanglement.schmidt import concurrence_pure
from apps.states.factory import FamilySpec, build, sample_pure_state, sample_product_state
from apps.states.quantum import MIXED, pauli_moments
from apps.transforms.local_unitary import apply_local, layer_from_unitaries
from core.exceptions import FamilyError

from .helpers import SQRT_HALF, family


class FamilyBuildTestCase(SimpleTestCase):
    """Test build() for every family."""

    def test_psi_at_quarter_pi(self):
        state = family('psi', phi=math.pi / 4)
        assert_allclose(state.amplitudes, [0, SQRT_HALF, SQRT_HALF, 0], atol=1e-15)

    def test_psi_prime_is_a_local_image_of_psi(self):
        """Test cos φ|00> + sin φ|11> = (1 ⊗ σx)(cos φ|01> + sin φ|10>)."""
        flip = layer_from_unitaries([np.eye(2), np.array([[0, 1], [1, 0]])])
        for phi in (0.0, 0.3, math.pi / 4, 1.1):
            assert_array_equal(
                apply_local(family('psi', phi=phi), flip).amplitudes,
                family('psi_prime', phi=phi).amplitudes,
            )

    def test_schmidt_pair(self):
        assert_allclose(family('schmidt_pair', lambda1=1.0).amplitudes, [1, 0, 0, 0])
        state = family('schmidt_pair', lambda1_sq=0.8)
        assert_allclose(state.amplitudes, [math.sqrt(0.8), 0, 0, math.sqrt(0.2)])

    def test_schmidt_pair_range(self):
        with self.assertRaises(FamilyError):
            family('schmidt_pair', lambda1_sq=1.5)
        with self.assertRaises(FamilyError):
            family('schmidt_pair', lambda1=0.9, lambda1_sq=0.81)

    def test_two_qubit_general_is_normalized(self):
        state = family('two_qubit_general', alpha=1, beta=1, gamma=1, delta=1)
        assert_allclose(state.amplitudes, [0.5] * 4)

    def test_ghz(self):
        state = family('ghz', n_qubits=3)
        self.assertAlmostEqual(abs(state.amplitudes[0]) ** 2, 0.5)
        self.assertAlmostEqual(abs(state.amplitudes[-1]) ** 2, 0.5)
        assert_allclose(pauli_moments(state).bloch, np.zeros((3, 3)), atol=1e-15)

    def test_spin_coherent_direction(self):
        """Test every qubit points along the requested unit vector."""
        direction = np.array([1.0, 2.0, -2.0]) / 3.0
        state = family('spin_coherent', n_qubits=3, dx=direction[0], dy=direction[1], dz=direction[2])
        for bloch in pauli_moments(state).bloch:
            assert_allclose(bloch, direction, atol=1e-12)

    def test_spin_coherent_needs_unit_direction(self):
        with self.assertRaises(FamilyError):
            family('spin_coherent', n_qubits=2, dx=1.0, dy=1.0, dz=0.0)

    def test_separable_random_structure(self):
        """Test separable_random builds a mixture of product terms."""
        state = family('separable_random', n_qubits=4, terms=3, seed=5)
        self.assertEqual(state.kind, MIXED)
        self.assertAlmostEqual(float(np.trace(state.matrix).real), 1.0, places=12)
        self.assertGreaterEqual(float(np.linalg.eigvalsh(state.matrix)[0]), -1e-10)
        self.assertEqual(len(state.components), 3)
        for _, component in state.components:
            lengths = np.linalg.norm(pauli_moments(component).bloch, axis=1)
            assert_allclose(lengths, np.ones(4), atol=1e-12)

    def test_unknown_family_and_parameter(self):
        with self.assertRaises(FamilyError):
            build(FamilySpec('squeezed_vacuum', {}))
        with self.assertRaises(FamilyError):
            build(FamilySpec('psi', {'theta': 0.1}))
        with self.assertRaises(FamilyError):
            build(FamilySpec('psi', {}))
        with self.assertRaises(FamilyError):
            build(FamilySpec('ghz', {'n_qubits': 2.5}))
        with self.assertRaises(FamilyError):
            build(FamilySpec('psi', {'phi': math.inf}))


class SamplerTestCase(SimpleTestCase):
    """Test the random samplers."""

    def test_single_qubit_product(self):
        state = sample_product_state(1, 3)
        self.assertEqual(state.amplitudes.shape, (2,))
        self.assertAlmostEqual(float(np.linalg.norm(state.amplitudes)), 1.0, places=12)

    def test_product_pairs_are_unentangled(self):
        for seed in range(20):
            self.assertAlmostEqual(concurrence_pure(sample_product_state(2, seed)), 0.0, delta=1e-12)

    def test_samplers_are_deterministic(self):
        assert_array_equal(sample_pure_state(3, 42).amplitudes, sample_pure_state(3, 42).amplitudes)
        assert_array_equal(
            family('separable_random', n_qubits=3, terms=4, seed=9).matrix,
            family('separable_random', n_qubits=3, terms=4, seed=9).matrix,
        )
        self.assertFalse(np.allclose(sample_pure_state(3, 42).amplitudes, sample_pure_state(3, 43).amplitudes))
