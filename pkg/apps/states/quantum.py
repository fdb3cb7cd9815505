"""
N-qubit pure states and density matrices.

Basis convention: computational basis with qubit 1 as the most significant
bit, so |01> has index 1 for two qubits. Public qubit indices are 1-based.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from django.conf import settings

from core.exceptions import ArityError, InputError, QubitIndexError, StateInvariantError

logger = logging.getLogger(__name__)

PURE = 'pure'
MIXED = 'mixed'
KIND_CHOICES = [
    (PURE, 'Pure state'),
    (MIXED, 'Density matrix'),
]

AXES = ('x', 'y', 'z')
PAULI = {
    'x': np.array([[0, 1], [1, 0]], dtype=complex),
    'y': np.array([[0, -1j], [1j, 0]], dtype=complex),
    'z': np.array([[1, 0], [0, -1]], dtype=complex),
}

PURE_TOLERANCE = 1e-12
MIXED_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Immutable pure state (amplitude vector) or mixed state (density matrix)."""

    n_qubits: int
    kind: str
    amplitudes: Optional[np.ndarray] = None
    matrix: Optional[np.ndarray] = None
    renormalized: bool = False
    # ((weight, pure QuantumState), ...) when the state was built as a mixture
    components: tuple = ()

    def __post_init__(self):
        for array in (self.amplitudes, self.matrix):
            if array is not None:
                array.flags.writeable = False

    def __repr__(self):
        return f"QuantumState(n_qubits={self.n_qubits}, kind={self.kind!r})"

    @property
    def dim(self) -> int:
        return 2 ** self.n_qubits

    @property
    def is_pure(self) -> bool:
        return self.kind == PURE

    def density_matrix(self) -> np.ndarray:
        """Return ρ as a fresh 2^N × 2^N array."""
        if self.is_pure:
            return np.outer(self.amplitudes, self.amplitudes.conj())
        return np.array(self.matrix)

    def pure_decomposition(self):
        """Return (weights, vectors) with ρ = Σ_k w_k |v_k><v_k|; vectors are columns."""
        if self.is_pure:
            return np.ones(1), self.amplitudes.reshape(-1, 1)
        if self.components:
            weights = np.array([w for w, _ in self.components])
            vectors = np.stack([s.amplitudes for _, s in self.components], axis=1)
            return weights, vectors
        eigenvalues, eigenvectors = np.linalg.eigh(self.matrix)
        keep = eigenvalues > 0
        return eigenvalues[keep], eigenvectors[:, keep]


def _max_qubits() -> int:
    return settings.SQUEEZING['MAX_QUBITS']


def _check_n_qubits(n_qubits) -> int:
    if isinstance(n_qubits, bool) or not isinstance(n_qubits, (int, np.integer)):
        raise InputError(f"n_qubits must be an integer, got {n_qubits!r}", code="INVALID_N_QUBITS")
    n_qubits = int(n_qubits)
    if n_qubits < 1 or n_qubits > _max_qubits():
        raise InputError(
            f"n_qubits must be between 1 and {_max_qubits()}, got {n_qubits}",
            code="INVALID_N_QUBITS",
        )
    return n_qubits


def _check_qubit(state: QuantumState, qubit) -> int:
    """Validate a 1-based qubit label and return the 0-based position."""
    if isinstance(qubit, bool) or not isinstance(qubit, (int, np.integer)):
        raise QubitIndexError(index=qubit, n_qubits=state.n_qubits)
    if qubit < 1 or qubit > state.n_qubits:
        raise QubitIndexError(index=int(qubit), n_qubits=state.n_qubits)
    return int(qubit) - 1


def _check_axis(axis: str) -> str:
    if axis not in PAULI:
        raise InputError(f"Unknown Pauli axis {axis!r}", code="INVALID_AXIS")
    return axis


def make_pure(n_qubits: int, amplitudes: Sequence[complex]) -> QuantumState:
    """Build a normalized pure state, recording whether renormalization occurred."""
    n_qubits = _check_n_qubits(n_qubits)
    vector = np.array(amplitudes, dtype=complex)
    if vector.ndim != 1 or vector.shape[0] != 2 ** n_qubits:
        raise ArityError(expected=2 ** n_qubits, received=vector.size, what="amplitudes")
    if not np.all(np.isfinite(vector)):
        raise InputError("Amplitudes must be finite", code="NON_FINITE_AMPLITUDES")

    norm = np.linalg.norm(vector)
    if norm == 0.0:
        raise StateInvariantError(invariant="zero vector", value=0.0)

    renormalized = abs(norm ** 2 - 1.0) > PURE_TOLERANCE
    if renormalized:
        logger.debug(f"Renormalizing {n_qubits}-qubit state with norm {norm:.17g}")
        vector = vector / norm
    return QuantumState(n_qubits=n_qubits, kind=PURE, amplitudes=vector, renormalized=renormalized)


def make_density(n_qubits: int, matrix, components: tuple = ()) -> QuantumState:
    """Build a mixed state from a density matrix, checking Hermiticity, trace and positivity."""
    n_qubits = _check_n_qubits(n_qubits)
    rho = np.array(matrix, dtype=complex)
    dim = 2 ** n_qubits
    if rho.shape != (dim, dim):
        raise ArityError(expected=(dim, dim), received=rho.shape, what="matrix shape")
    if not np.all(np.isfinite(rho)):
        raise InputError("Density matrix must be finite", code="NON_FINITE_MATRIX")

    asymmetry = float(np.max(np.abs(rho - rho.conj().T)))
    if asymmetry > MIXED_TOLERANCE:
        raise StateInvariantError(invariant="hermitian", value=asymmetry)
    rho = 0.5 * (rho + rho.conj().T)

    trace = float(np.trace(rho).real)
    if abs(trace - 1.0) > MIXED_TOLERANCE:
        raise StateInvariantError(invariant="unit trace", value=trace)

    smallest = float(np.linalg.eigvalsh(rho)[0])
    if smallest < -MIXED_TOLERANCE:
        raise StateInvariantError(invariant="positive semidefinite", value=smallest)

    return QuantumState(n_qubits=n_qubits, kind=MIXED, matrix=rho, components=components)


def make_mixture(weights: Sequence[float], states: Sequence[QuantumState]) -> QuantumState:
    """Build Σ_k p_k ρ_k from probability weights and component states."""
    weights = np.array(weights, dtype=float)
    states = list(states)
    if not states:
        raise InputError("A mixture needs at least one component", code="EMPTY_MIXTURE")
    if weights.ndim != 1 or weights.shape[0] != len(states):
        raise ArityError(expected=len(states), received=weights.size, what="weights")
    if np.any(weights < 0) or not np.all(np.isfinite(weights)):
        raise StateInvariantError(invariant="non-negative weights", value=weights.tolist())
    if abs(weights.sum() - 1.0) > PURE_TOLERANCE:
        raise StateInvariantError(invariant="weights sum to one", value=float(weights.sum()))

    n_qubits = states[0].n_qubits
    if any(s.n_qubits != n_qubits for s in states):
        raise InputError(
            "All mixture components must have the same number of qubits",
            code="DIMENSION_MISMATCH",
            details={'n_qubits': [s.n_qubits for s in states]},
        )

    rho = np.zeros((2 ** n_qubits, 2 ** n_qubits), dtype=complex)
    components = []
    decomposable = True
    for weight, state in zip(weights, states):
        rho += weight * state.density_matrix()
        if state.is_pure:
            components.append((float(weight), state))
        elif state.components:
            components.extend((float(weight) * w, s) for w, s in state.components)
        else:
            decomposable = False

    return make_density(n_qubits, rho, components=tuple(components) if decomposable else ())


def basis_state(bits: str) -> QuantumState:
    """Computational basis state from a bit string, e.g. basis_state('01')."""
    if not bits or any(b not in '01' for b in bits):
        raise InputError(f"Invalid bit string {bits!r}", code="INVALID_BITS")
    vector = np.zeros(2 ** len(bits), dtype=complex)
    vector[int(bits, 2)] = 1.0
    return make_pure(len(bits), vector)


def product_state(qubit_states: Sequence[Sequence[complex]]) -> QuantumState:
    """Tensor product of single-qubit amplitude pairs, qubit 1 first."""
    vector = np.ones(1, dtype=complex)
    for amplitudes in qubit_states:
        pair = np.array(amplitudes, dtype=complex)
        if pair.shape != (2,):
            raise ArityError(expected=2, received=pair.size, what="single-qubit amplitudes")
        vector = np.kron(vector, pair)
    return make_pure(len(qubit_states), vector)


def apply_pauli(block: np.ndarray, n_qubits: int, position: int, axis: str) -> np.ndarray:
    """Apply σ_axis to the 0-based qubit position of a vector or column block."""
    extra = block.shape[1:]
    tensor = block.reshape((2,) * n_qubits + extra)
    out = np.tensordot(PAULI[axis], tensor, axes=([1], [position]))
    return np.moveaxis(out, 0, position).reshape(block.shape)


def pauli_expectation(state: QuantumState, qubit: int, axis: str) -> float:
    """Tr(ρ σ_axis^(qubit)) for a 1-based qubit label."""
    position = _check_qubit(state, qubit)
    _check_axis(axis)
    if state.is_pure:
        image = apply_pauli(state.amplitudes, state.n_qubits, position, axis)
        return float(np.vdot(state.amplitudes, image).real)
    image = apply_pauli(state.matrix, state.n_qubits, position, axis)
    return float(np.trace(image).real)


def pair_pauli_expectation(state: QuantumState, i: int, j: int, alpha: str, beta: str) -> float:
    """<σ_{iα} σ_{jβ}> for two distinct 1-based qubit labels."""
    pi = _check_qubit(state, i)
    pj = _check_qubit(state, j)
    if pi == pj:
        raise InputError(
            "pair_pauli_expectation needs two distinct qubits; use the single-qubit identity "
            "<σ_α σ_β> = δ_αβ + i ε_αβγ <σ_γ> instead",
            code="SAME_QUBIT",
            details={'i': i, 'j': j},
        )
    _check_axis(alpha)
    _check_axis(beta)
    if state.is_pure:
        image = apply_pauli(state.amplitudes, state.n_qubits, pj, beta)
        image = apply_pauli(image, state.n_qubits, pi, alpha)
        return float(np.vdot(state.amplitudes, image).real)
    image = apply_pauli(state.matrix, state.n_qubits, pj, beta)
    image = apply_pauli(image, state.n_qubits, pi, alpha)
    return float(np.trace(image).real)


@dataclass(frozen=True, eq=False)
class PauliMoments:
    """All first and second single-qubit Pauli moments of a state.

    bloch[q, a] = <σ_{q a}> and gram[3q + a, 3p + b] = Re <σ_{q a} σ_{p b}>,
    with 0-based qubit positions.
    """

    n_qubits: int
    bloch: np.ndarray
    gram: np.ndarray


def pauli_moments(state: QuantumState) -> PauliMoments:
    """Compute every <σ_{qa}> and <σ_{qa} σ_{pb}> in one pass over the state."""
    weights, vectors = state.pure_decomposition()
    n = state.n_qubits
    images = np.stack([
        apply_pauli(vectors, n, position, axis)
        for position in range(n)
        for axis in AXES
    ])
    root = np.sqrt(weights)[None, None, :]
    weighted_vectors = vectors * root[0]
    weighted_images = images * root

    bloch = np.einsum('dk,mdk->m', weighted_vectors.conj(), weighted_images).real.reshape(n, 3)
    flat = weighted_images.reshape(3 * n, -1)
    gram = (flat.conj() @ flat.T).real

    bloch.flags.writeable = False
    gram.flags.writeable = False
    return PauliMoments(n_qubits=n, bloch=bloch, gram=gram)
