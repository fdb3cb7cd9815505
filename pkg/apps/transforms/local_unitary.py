"""
Local unitary layers U_1 ⊗ ... ⊗ U_N and the SU(2) → SO(3) correspondence.

Convention: a layer acts on states as U and on observables as U†·U, with
U† σ_α U = Σ_β O_αβ σ_β. Bloch vectors then transform as <σ'> = O <σ> and
correlation matrices as T'^(ij) = O_i T^(ij) O_j^T.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from django.conf import settings
from scipy.spatial.transform import Rotation

from apps.frames.frames import frames_from_bloch, j0_expectation
from apps.entanglement.schmidt import amplitude_matrix
from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import xi_tilde
from apps.states.factory import haar_qubit
from apps.states.quantum import PAULI, QuantumState, make_density, make_mixture, make_pure, pauli_moments
from core.exceptions import ArityError, InputError, NonUnitaryError
from core.utils import derive_seed, is_defined, make_rng

logger = logging.getLogger(__name__)

UNITARY_TOLERANCE = 1e-12
ROTATION_TOLERANCE = 1e-10

PAULI_STACK = np.stack([PAULI['x'], PAULI['y'], PAULI['z']])


@dataclass(frozen=True, eq=False)
class LocalUnitaryLayer:
    """One 2×2 unitary per qubit together with its SO(3) image."""

    unitaries: tuple
    rotations: tuple

    @property
    def n_qubits(self) -> int:
        return len(self.unitaries)


def _check_unitary(u) -> np.ndarray:
    u = np.array(u, dtype=complex)
    if u.shape != (2, 2):
        raise ArityError(expected=(2, 2), received=u.shape, what="unitary shape")
    deviation = float(np.max(np.abs(u.conj().T @ u - np.eye(2))))
    if deviation > UNITARY_TOLERANCE:
        raise NonUnitaryError(deviation=deviation)
    return u


def su2_to_so3(u) -> np.ndarray:
    """O_αβ = ½ Re Tr(U† σ_α U σ_β); the global phase of U drops out."""
    u = _check_unitary(u)
    conjugated = np.einsum('ji,ajk,kl->ail', u.conj(), PAULI_STACK, u)
    return 0.5 * np.einsum('akl,blk->ab', conjugated, PAULI_STACK).real


def so3_to_su2(rotation) -> np.ndarray:
    """SU(2) preimage of a rotation matrix (one of ±U) via its unit quaternion."""
    rotation = np.asarray(rotation, dtype=float)
    if rotation.shape != (3, 3):
        raise ArityError(expected=(3, 3), received=rotation.shape, what="rotation shape")
    orthogonality = float(np.max(np.abs(rotation.T @ rotation - np.eye(3))))
    if orthogonality > ROTATION_TOLERANCE or abs(np.linalg.det(rotation) - 1.0) > ROTATION_TOLERANCE:
        raise InputError("Matrix is not a proper rotation", code="NOT_A_ROTATION",
                         details={'orthogonality': orthogonality})
    x, y, z, w = Rotation.from_matrix(rotation).as_quat()
    return w * np.eye(2, dtype=complex) - 1j * (x * PAULI['x'] + y * PAULI['y'] + z * PAULI['z'])


def layer_from_unitaries(unitaries: Sequence) -> LocalUnitaryLayer:
    checked = tuple(_check_unitary(u) for u in unitaries)
    if not checked:
        raise ArityError(expected="at least 1", received=0, what="unitaries")
    for u in checked:
        u.flags.writeable = False
    rotations = tuple(su2_to_so3(u) for u in checked)
    return LocalUnitaryLayer(unitaries=checked, rotations=rotations)


def identity_layer(n_qubits: int) -> LocalUnitaryLayer:
    return layer_from_unitaries([np.eye(2, dtype=complex)] * n_qubits)


def haar_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element [[a, -b̄], [b, ā]] from a uniformly random unit 2-vector."""
    a, b = haar_qubit(rng)
    return np.array([[a, -np.conj(b)], [b, np.conj(a)]])


def random_local_layer(n_qubits: int, seed: int) -> LocalUnitaryLayer:
    """N independent Haar unitaries; qubit q draws from the stream keyed by (seed, q)."""
    if n_qubits < 1:
        raise InputError(f"n_qubits must be at least 1, got {n_qubits}", code="INVALID_N_QUBITS")
    return layer_from_unitaries([haar_unitary(make_rng(seed, q)) for q in range(n_qubits)])


def _apply_block(unitaries: Sequence[np.ndarray], block: np.ndarray, n_qubits: int) -> np.ndarray:
    """Apply U_1 ⊗ ... ⊗ U_N to a vector or to every column of a block."""
    extra = block.shape[1:]
    tensor = block.reshape((2,) * n_qubits + extra)
    for position, u in enumerate(unitaries):
        tensor = np.moveaxis(np.tensordot(u, tensor, axes=([1], [position])), 0, position)
    return tensor.reshape(block.shape)


def apply_local(state: QuantumState, layer: LocalUnitaryLayer) -> QuantumState:
    """(U_1 ⊗ ... ⊗ U_N)|ψ>, or UρU† for mixed states."""
    if layer.n_qubits != state.n_qubits:
        raise ArityError(expected=state.n_qubits, received=layer.n_qubits, what="unitaries")
    n = state.n_qubits
    if state.is_pure:
        return make_pure(n, _apply_block(layer.unitaries, state.amplitudes, n))
    if state.components:
        weights = [w for w, _ in state.components]
        return make_mixture(weights, [apply_local(s, layer) for _, s in state.components])
    half = _apply_block(layer.unitaries, state.matrix, n)
    rotated = _apply_block(layer.unitaries, half.conj().T, n).conj().T
    return make_density(n, rotated)


def schmidt_layer(state: QuantumState) -> LocalUnitaryLayer:
    """Layer taking a two-qubit pure state to λ₁|00> + λ₂|11>."""
    left, _, right_h = np.linalg.svd(amplitude_matrix(state))
    return layer_from_unitaries([left.conj().T, right_h.conj()])


def alignment_layer(state: QuantumState) -> LocalUnitaryLayer:
    """Layer rotating every non-degenerate qubit's Bloch vector onto +z.

    Degenerate qubits get the identity. A pure product state is mapped to
    |0...0> up to a global phase.
    """
    frames = frames_from_bloch(pauli_moments(state).bloch)
    return layer_from_unitaries([
        np.eye(2, dtype=complex) if frame.degenerate else so3_to_su2(frame.rotation())
        for frame in frames
    ])


@dataclass(frozen=True)
class InvarianceResult:
    """Largest changes of ξ̃₁, ξ̃₂ and <J_0> over the trial layers."""

    max_deviation: float
    max_j0_deviation: float
    trials: int

    @property
    def passed(self) -> bool:
        return (
            self.max_deviation <= settings.SQUEEZING['INVARIANCE_TOLERANCE']
            and self.max_j0_deviation <= settings.SQUEEZING['J0_INVARIANCE_TOLERANCE']
        )


def invariance_check(state: QuantumState, trials: int, seed: int,
                     config: Optional[MinimizerConfig] = None,
                     layers: Sequence[LocalUnitaryLayer] = ()) -> InvarianceResult:
    """
    Compare ξ̃₁, ξ̃₂ and <J_0> of a state with those of random local-unitary images.

    Trial t uses random_local_layer(N, derive_seed(seed, t)); any extra fixed
    layers are checked as well. ξ̃₂ is compared only where both sides are
    defined.
    """
    if trials < 1:
        raise InputError(f"trials must be at least 1, got {trials}", code="INVALID_TRIALS")
    config = config or MinimizerConfig.from_settings()
    base = xi_tilde(state, config)
    n = state.n_qubits

    candidates = [random_local_layer(n, derive_seed(seed, t)) for t in range(trials)] + list(layers)

    def deviations(layer):
        rotated = apply_local(state, layer)
        report = xi_tilde(rotated, config)
        deviation = abs(report.xi_tilde_1 - base.xi_tilde_1)
        if is_defined(report.xi_tilde_2) and is_defined(base.xi_tilde_2):
            deviation = max(deviation, abs(report.xi_tilde_2 - base.xi_tilde_2))
        j0 = j0_expectation(frames_from_bloch(pauli_moments(rotated).bloch))
        return deviation, abs(j0 - base.j0)

    if config.workers > 1 and len(candidates) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            outcomes = list(executor.map(deviations, candidates))
    else:
        outcomes = [deviations(layer) for layer in candidates]

    result = InvarianceResult(
        max_deviation=max(d for d, _ in outcomes),
        max_j0_deviation=max(j for _, j in outcomes),
        trials=len(candidates),
    )
    logger.info(f"Invariance over {result.trials} layers: max deviation {result.max_deviation:.3e}")
    return result
