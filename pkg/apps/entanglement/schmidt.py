"""
Schmidt coefficients, concurrence and closed-form squeezing of two-qubit pure states.

A two-qubit pure state α|00> + β|01> + γ|10> + δ|11> is handled through its
amplitude matrix [[α, β], [γ, δ]]; its singular values are the Schmidt
coefficients λ₁ ≥ λ₂ and C = 2λ₁λ₂ = 2|βγ - αδ|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
from django.conf import settings

from apps.states.quantum import QuantumState
from core.exceptions import ArityError, InputError
from core.utils import ZERO_MEAN_SPIN, MaybeFloat, Undefined

# |β - γ| below which a two-qubit amplitude matrix counts as symmetric
SYMMETRY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SchmidtPair:
    """Schmidt coefficients λ₁ ≥ λ₂ ≥ 0 with λ₁² + λ₂² = 1."""

    lambda1: float
    lambda2: float

    @property
    def concurrence(self) -> float:
        return 2.0 * self.lambda1 * self.lambda2

    @property
    def j0(self) -> float:
        """<J_0> = |λ₁² - λ₂²|."""
        return abs(self.lambda1 ** 2 - self.lambda2 ** 2)


def amplitude_matrix(state: QuantumState) -> np.ndarray:
    """[[α, β], [γ, δ]] of a two-qubit pure state."""
    if state.n_qubits != 2:
        raise ArityError(expected=2, received=state.n_qubits, what="qubits")
    if not state.is_pure:
        raise InputError("A pure two-qubit state is required", code="PURE_STATE_REQUIRED")
    return np.array(state.amplitudes).reshape(2, 2)


def schmidt(state: QuantumState) -> SchmidtPair:
    """Schmidt coefficients as the singular values of the amplitude matrix."""
    singular_values = np.linalg.svd(amplitude_matrix(state), compute_uv=False)
    return SchmidtPair(lambda1=float(singular_values[0]), lambda2=float(singular_values[1]))


def concurrence_pure(state: QuantumState) -> float:
    """C = 2|βγ - αδ| for a two-qubit pure state."""
    matrix = amplitude_matrix(state)
    value = 2.0 * abs(matrix[0, 1] * matrix[1, 0] - matrix[0, 0] * matrix[1, 1])
    return min(float(value), 1.0)


def concurrence_closed_form(c: float) -> Tuple[float, float]:
    """(ξ̃₁, ξ̃₂) = (√(1 - C), 1/√(1 + C)) for a two-qubit pure state of concurrence C.

    At C = 1 this gives the limiting ξ̃₂ = 1/√2 that the generic estimator
    cannot reach because the mean spin vanishes there.
    """
    c = float(c)
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise InputError(f"Concurrence must lie in [0, 1], got {c}", code="CONCURRENCE_OUT_OF_RANGE")
    c = min(max(c, 0.0), 1.0)
    return math.sqrt(1.0 - c), 1.0 / math.sqrt(1.0 + c)


def schmidt_closed_form(pair: SchmidtPair) -> Tuple[float, MaybeFloat]:
    """(ξ̃₁, ξ̃₂) = (√(1 - 2λ₁λ₂), √(1 - 2λ₁λ₂) / |λ₁² - λ₂²|); ξ̃₂ undefined when λ₁ = λ₂."""
    xi_1 = math.sqrt(max(1.0 - pair.concurrence, 0.0))
    if pair.j0 <= settings.SQUEEZING['DEGENERACY_THRESHOLD']:
        return xi_1, Undefined(ZERO_MEAN_SPIN)
    return xi_1, xi_1 / pair.j0


def is_symmetric_pair(state: QuantumState) -> bool:
    if state.n_qubits != 2 or not state.is_pure:
        return False
    matrix = amplitude_matrix(state)
    return abs(matrix[0, 1] - matrix[1, 0]) <= SYMMETRY_TOLERANCE


def symmetric_pair_closed_form(state: QuantumState) -> Tuple[float, float]:
    """Collective (ξ₁, ξ₂) = (√(1 - C), 1/√(1 + C)) of a symmetric (β = γ) two-qubit pure state.

    Symmetric pairs are U⊗U images of a Schmidt state, so both qubits share
    one frame and the collective parameters coincide with the local-unitary
    invariant ones. Defined even where the mean spin vanishes.
    """
    if not is_symmetric_pair(state):
        raise InputError(
            "Closed-form collective squeezing needs a symmetric two-qubit pure state (β = γ)",
            code="NOT_SYMMETRIC",
        )
    return concurrence_closed_form(concurrence_pure(state))
