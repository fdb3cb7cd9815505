"""
Pairwise Pauli correlation matrices T^(ij)_{αβ} = <σ_{iα} σ_{jβ}>.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

import numpy as np

from apps.states.quantum import AXES, QuantumState, pair_pauli_expectation, pauli_moments
from core.exceptions import InputError, QubitIndexError


@dataclass(frozen=True, eq=False)
class CorrelationMatrix:
    """T^(ij) for 1-based qubit labels i < j."""

    i: int
    j: int
    t: np.ndarray

    def transposed(self) -> 'CorrelationMatrix':
        """T^(ji) = (T^(ij))^T."""
        return CorrelationMatrix(i=self.j, j=self.i, t=self.t.T)


def correlation_matrix(state: QuantumState, i: int, j: int) -> CorrelationMatrix:
    """Evaluate T^(ij) term by term from two-qubit Pauli expectations."""
    if i >= j:
        raise InputError(f"correlation_matrix needs i < j, got i={i}, j={j}", code="INVALID_PAIR")
    t = np.array([
        [pair_pauli_expectation(state, i, j, alpha, beta) for beta in AXES]
        for alpha in AXES
    ])
    t.flags.writeable = False
    return CorrelationMatrix(i=i, j=j, t=t)


class CorrelationTable:
    """Upper-triangular cache of T^(ij), i < j, plus every qubit's Bloch vector.

    Built once per state; read-only afterwards.
    """

    def __init__(self, n_qubits: int, blocks: Dict[Tuple[int, int], np.ndarray], bloch: np.ndarray):
        self.n_qubits = n_qubits
        self._blocks = blocks
        self.bloch = bloch

    @classmethod
    def from_state(cls, state: QuantumState) -> 'CorrelationTable':
        moments = pauli_moments(state)
        n = state.n_qubits
        blocks = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                block = np.array(moments.gram[3 * (i - 1):3 * i, 3 * (j - 1):3 * j])
                block.flags.writeable = False
                blocks[(i, j)] = block
        return cls(n_qubits=n, blocks=blocks, bloch=moments.bloch)

    def __len__(self):
        return len(self._blocks)

    def pairs(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self._blocks))

    def get(self, i: int, j: int) -> np.ndarray:
        """T^(ij) for any distinct 1-based labels; T^(ji) = (T^(ij))^T."""
        for label in (i, j):
            if label < 1 or label > self.n_qubits:
                raise QubitIndexError(index=label, n_qubits=self.n_qubits)
        if i == j:
            raise InputError("Correlation matrices are defined for distinct qubits only", code="INVALID_PAIR")
        if i < j:
            return self._blocks[(i, j)]
        return self._blocks[(j, i)].T

    def matrix(self, i: int, j: int) -> CorrelationMatrix:
        return CorrelationMatrix(i=i, j=j, t=self.get(i, j))


def correlation_table(state: QuantumState) -> CorrelationTable:
    """Compute all pairwise correlation matrices in one pass."""
    return CorrelationTable.from_state(state)
