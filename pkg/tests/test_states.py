"""
Tests for state construction and Pauli expectation values.
"""

import math

import numpy as np
from django.test import SimpleTestCase, override_settings
from django.conf import settings
from hypothesis import given, settings as hypothesis_settings, strategies as st
from numpy.testing import assert_allclose

from apps.states.factory import sample_pure_state, sample_product_state
from apps.states.quantum import (
    AXES, MIXED, basis_state, make_density, make_mixture, make_pure, pair_pauli_expectation,
    pauli_expectation, pauli_moments, product_state,
)
from core.exceptions import ArityError, InputError, QubitIndexError, StateInvariantError

from .helpers import SQRT_HALF, bell_state, family

seeds = st.integers(min_value=0, max_value=2 ** 32)


class PureStateTestCase(SimpleTestCase):
    """Test make_pure."""

    def test_basis_state(self):
        """Test a normalized basis vector is kept as is."""
        state = make_pure(2, [1, 0, 0, 0])
        self.assertTrue(state.is_pure)
        self.assertFalse(state.renormalized)
        self.assertAlmostEqual(np.linalg.norm(state.amplitudes), 1.0, places=12)

    def test_renormalization_is_recorded(self):
        """Test a scaled vector is renormalized and flagged."""
        state = make_pure(1, [2, 0])
        self.assertTrue(state.renormalized)
        assert_allclose(state.amplitudes, [1, 0])

    def test_zero_vector(self):
        with self.assertRaises(StateInvariantError):
            make_pure(2, [0, 0, 0, 0])

    def test_length_mismatch(self):
        with self.assertRaises(ArityError):
            make_pure(2, [1, 0, 0])

    def test_qubit_cap(self):
        """Test registers above MAX_QUBITS are rejected."""
        cap = settings.SQUEEZING['MAX_QUBITS']
        with self.assertRaises(InputError):
            make_pure(cap + 1, np.ones(2 ** (cap + 1)))

    def test_amplitudes_are_read_only(self):
        state = basis_state('01')
        with self.assertRaises(ValueError):
            state.amplitudes[0] = 1.0

    def test_big_endian_basis(self):
        """Test qubit 1 is the most significant bit."""
        state = basis_state('01')
        self.assertEqual(int(np.argmax(np.abs(state.amplitudes))), 1)
        self.assertEqual(pauli_expectation(state, 1, 'z'), 1.0)
        self.assertEqual(pauli_expectation(state, 2, 'z'), -1.0)


class MixtureTestCase(SimpleTestCase):
    """Test make_mixture and make_density."""

    def test_singleton_mixture(self):
        state = make_mixture([1.0], [basis_state('00')])
        self.assertEqual(state.kind, MIXED)
        expected = np.zeros((4, 4))
        expected[0, 0] = 1.0
        assert_allclose(state.matrix, expected, atol=1e-15)

    def test_orthogonal_mixture(self):
        state = make_mixture([0.5, 0.5], [basis_state('00'), basis_state('11')])
        assert_allclose(state.matrix, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)

    def test_random_product_mixture(self):
        """Test the mixture has unit trace and non-negative spectrum."""
        state = make_mixture([0.3, 0.7], [sample_product_state(2, 1), sample_product_state(2, 2)])
        self.assertAlmostEqual(float(np.trace(state.matrix).real), 1.0, places=12)
        self.assertGreaterEqual(float(np.linalg.eigvalsh(state.matrix)[0]), -1e-12)
        self.assertEqual(len(state.components), 2)

    def test_weights_must_sum_to_one(self):
        with self.assertRaises(StateInvariantError):
            make_mixture([0.5, 0.6], [basis_state('00'), basis_state('11')])

    def test_negative_weights(self):
        with self.assertRaises(StateInvariantError):
            make_mixture([1.5, -0.5], [basis_state('00'), basis_state('11')])

    def test_dimension_mismatch(self):
        with self.assertRaises(InputError):
            make_mixture([0.5, 0.5], [basis_state('0'), basis_state('00')])

    def test_non_hermitian_matrix(self):
        with self.assertRaises(StateInvariantError):
            make_density(1, [[0.5, 0.5], [0.0, 0.5]])

    def test_non_positive_matrix(self):
        with self.assertRaises(StateInvariantError):
            make_density(1, [[1.5, 0.0], [0.0, -0.5]])

    def test_eigen_decomposition_without_components(self):
        """Test a density matrix given directly decomposes into its eigenvectors."""
        state = make_density(1, [[0.75, 0.0], [0.0, 0.25]])
        weights, vectors = state.pure_decomposition()
        assert_allclose(sorted(weights), [0.25, 0.75])
        self.assertEqual(vectors.shape, (2, 2))


class PauliExpectationTestCase(SimpleTestCase):
    """Test single- and two-qubit Pauli expectations."""

    def test_eigenstates(self):
        self.assertEqual(pauli_expectation(basis_state('0'), 1, 'z'), 1.0)
        plus = make_pure(1, [SQRT_HALF, SQRT_HALF])
        self.assertAlmostEqual(pauli_expectation(plus, 1, 'x'), 1.0, places=12)

    def test_bell_marginal(self):
        for axis in AXES:
            self.assertAlmostEqual(pauli_expectation(bell_state(), 1, axis), 0.0, places=12)

    def test_qubit_out_of_range(self):
        with self.assertRaises(QubitIndexError):
            pauli_expectation(basis_state('00'), 3, 'z')
        with self.assertRaises(QubitIndexError):
            pauli_expectation(basis_state('00'), 0, 'z')

    def test_pair_examples(self):
        self.assertEqual(pair_pauli_expectation(basis_state('00'), 1, 2, 'z', 'z'), 1.0)
        self.assertAlmostEqual(pair_pauli_expectation(bell_state(), 1, 2, 'y', 'y'), -1.0, places=12)
        for phi in (0.1, 0.4, 1.2):
            state = family('psi_prime', phi=phi)
            self.assertAlmostEqual(pair_pauli_expectation(state, 1, 2, 'x', 'x'), math.sin(2 * phi), places=12)

    def test_pair_needs_distinct_qubits(self):
        with self.assertRaises(InputError) as ctx:
            pair_pauli_expectation(bell_state(), 1, 1, 'x', 'x')
        self.assertEqual(ctx.exception.code, 'SAME_QUBIT')

    @given(seed=seeds)
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_product_states_factorize(self, seed):
        """Test <σ_iα σ_jβ> = <σ_iα><σ_jβ> on product states."""
        state = sample_product_state(3, seed)
        for alpha in AXES:
            for beta in AXES:
                expected = pauli_expectation(state, 1, alpha) * pauli_expectation(state, 3, beta)
                self.assertAlmostEqual(pair_pauli_expectation(state, 1, 3, alpha, beta), expected, delta=1e-12)

    @given(seed=seeds)
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_expectation_is_linear_in_the_state(self, seed):
        first, second = sample_pure_state(2, seed), sample_pure_state(2, seed + 1)
        mixture = make_mixture([0.25, 0.75], [first, second])
        for axis in AXES:
            expected = 0.25 * pauli_expectation(first, 2, axis) + 0.75 * pauli_expectation(second, 2, axis)
            self.assertAlmostEqual(pauli_expectation(mixture, 2, axis), expected, delta=1e-12)

    @given(seed=seeds, n_qubits=st.integers(min_value=1, max_value=5))
    @hypothesis_settings(max_examples=50, deadline=None)
    def test_bloch_vectors_inside_the_ball(self, seed, n_qubits):
        moments = pauli_moments(sample_pure_state(n_qubits, seed))
        self.assertTrue(np.all(np.linalg.norm(moments.bloch, axis=1) <= 1 + 1e-12))

    def test_moments_match_direct_expectations(self):
        """Test the one-pass moments agree with term-by-term evaluation, pure and mixed."""
        pure = sample_pure_state(3, 11)
        mixed = make_mixture([0.4, 0.6], [pure, sample_pure_state(3, 12)])
        for state in (pure, mixed, make_density(3, mixed.matrix)):
            moments = pauli_moments(state)
            for a, alpha in enumerate(AXES):
                self.assertAlmostEqual(moments.bloch[0, a], pauli_expectation(state, 1, alpha), delta=1e-12)
                for b, beta in enumerate(AXES):
                    self.assertAlmostEqual(
                        moments.gram[a, 6 + b], pair_pauli_expectation(state, 1, 3, alpha, beta), delta=1e-12
                    )

    @override_settings(SQUEEZING={**settings.SQUEEZING, 'MAX_QUBITS': 3})
    def test_cap_follows_settings(self):
        with self.assertRaises(InputError):
            product_state([[1, 0]] * 4)
