"""
Dense collective spin operators for small registers.

Used to cross-check the correlation-matrix formulas at operator level.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np
from django.conf import settings

from apps.states.quantum import PAULI, QuantumState
from core.exceptions import ArityError, InputError

from .frames import BlochFrame

IDENTITY = np.eye(2, dtype=complex)


def _check_size(n_qubits: int) -> None:
    cap = settings.SQUEEZING['OPERATOR_MAX_QUBITS']
    if n_qubits > cap:
        raise InputError(
            f"Dense operators are limited to {cap} qubits, got {n_qubits}",
            code="OPERATOR_TOO_LARGE",
        )


def spin_component(vector: Sequence[float]) -> np.ndarray:
    """σ·n for one qubit."""
    x, y, z = vector
    return x * PAULI['x'] + y * PAULI['y'] + z * PAULI['z']


def embed(n_qubits: int, position: int, operator: np.ndarray) -> np.ndarray:
    """Identity on every qubit except the 0-based position."""
    factors = [operator if q == position else IDENTITY for q in range(n_qubits)]
    return reduce(np.kron, factors)


def local_sum(directions: Sequence[Sequence[float]]) -> np.ndarray:
    """½ Σ_i σ_i·n_i for one direction per qubit."""
    n_qubits = len(directions)
    _check_size(n_qubits)
    total = np.zeros((2 ** n_qubits, 2 ** n_qubits), dtype=complex)
    for position, vector in enumerate(directions):
        total += embed(n_qubits, position, spin_component(vector))
    return 0.5 * total


def collective_operators(frames: Sequence[BlochFrame]):
    """(J_perp, J_vdash, J_0) assembled from per-qubit frames."""
    return (
        local_sum([f.n_perp for f in frames]),
        local_sum([f.n_vdash for f in frames]),
        local_sum([f.n_0 for f in frames]),
    )


def theta_operator(frames: Sequence[BlochFrame], thetas: Sequence[float]) -> np.ndarray:
    """J_{θ_i} = ½ Σ_i σ_i·n_{θ_i}."""
    if len(thetas) != len(frames):
        raise ArityError(expected=len(frames), received=len(thetas), what="angles")
    return local_sum([f.direction(t) for f, t in zip(frames, thetas)])


def collective_spin(n_qubits: int):
    """(J_x, J_y, J_z) with J = ½ Σ_i σ_i."""
    return tuple(local_sum([axis] * n_qubits) for axis in np.eye(3))


def operator_expectation(state: QuantumState, operator: np.ndarray) -> float:
    if state.is_pure:
        return float(np.vdot(state.amplitudes, operator @ state.amplitudes).real)
    return float(np.trace(operator @ state.matrix).real)


def operator_variance(state: QuantumState, operator: np.ndarray) -> float:
    """<A²> - <A>² for a Hermitian operator."""
    mean = operator_expectation(state, operator)
    return operator_expectation(state, operator @ operator) - mean ** 2


@dataclass(frozen=True)
class UncertaintyCheck:
    """ΔJ_perp · ΔJ_vdash against ½ <J_0>."""

    product: float
    bound: float

    @property
    def satisfied(self) -> bool:
        return self.product >= self.bound - 1e-10


def uncertainty_check(state: QuantumState, frames: Sequence[BlochFrame]) -> UncertaintyCheck:
    j_perp, j_vdash, j_0 = collective_operators(frames)
    delta_perp = np.sqrt(max(operator_variance(state, j_perp), 0.0))
    delta_vdash = np.sqrt(max(operator_variance(state, j_vdash), 0.0))
    return UncertaintyCheck(
        product=float(delta_perp * delta_vdash),
        bound=0.5 * operator_expectation(state, j_0),
    )
