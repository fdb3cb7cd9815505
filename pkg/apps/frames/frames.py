"""
Per-qubit mean spin directions and transverse frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from django.conf import settings

from apps.states.quantum import AXES, QuantumState, pauli_expectation

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True, eq=False)
class BlochFrame:
    """Right-handed orthonormal triad (n_perp, n_vdash, n_0) for one qubit.

    n_0 is the qubit's mean spin direction; the other two span the plane of
    spin components orthogonal to it. A degenerate frame belongs to a qubit
    whose Bloch vector is (numerically) zero and uses the canonical axes.
    """

    n_perp: np.ndarray
    n_vdash: np.ndarray
    n_0: np.ndarray
    bloch_len: float
    degenerate: bool

    def __post_init__(self):
        for vector in (self.n_perp, self.n_vdash, self.n_0):
            vector.flags.writeable = False

    def transverse(self) -> np.ndarray:
        """2×3 matrix with rows n_perp and n_vdash."""
        return np.vstack([self.n_perp, self.n_vdash])

    def rotation(self) -> np.ndarray:
        """3×3 rotation whose rows are (n_perp, n_vdash, n_0); maps n_0 to z."""
        return np.vstack([self.n_perp, self.n_vdash, self.n_0])

    def direction(self, theta: float) -> np.ndarray:
        """n_θ = n_perp cos θ + n_vdash sin θ."""
        return self.n_perp * np.cos(theta) + self.n_vdash * np.sin(theta)


def degeneracy_threshold() -> float:
    return settings.SQUEEZING['DEGENERACY_THRESHOLD']


def bloch_vector(state: QuantumState, i: int) -> np.ndarray:
    """(<σ_ix>, <σ_iy>, <σ_iz>) for a 1-based qubit label."""
    return np.array([pauli_expectation(state, i, axis) for axis in AXES])


def build_frame(bloch: Sequence[float]) -> BlochFrame:
    """Build the frame whose n_0 points along a Bloch vector.

    The transverse pair starts from the coordinate axis least aligned with
    n_0 (first axis on ties), Gram-Schmidt orthogonalized, and n_vdash = n_0 × n_perp.
    """
    bloch = np.asarray(bloch, dtype=float)
    length = float(np.linalg.norm(bloch))
    if length < degeneracy_threshold():
        return BlochFrame(
            n_perp=X_HAT.copy(), n_vdash=Y_HAT.copy(), n_0=Z_HAT.copy(),
            bloch_len=length, degenerate=True,
        )

    n_0 = bloch / length
    seed_axis = np.zeros(3)
    seed_axis[int(np.argmin(np.abs(n_0)))] = 1.0
    n_perp = seed_axis - np.dot(seed_axis, n_0) * n_0
    n_perp /= np.linalg.norm(n_perp)
    n_vdash = np.cross(n_0, n_perp)
    n_vdash /= np.linalg.norm(n_vdash)
    return BlochFrame(
        n_perp=n_perp, n_vdash=n_vdash, n_0=n_0,
        bloch_len=min(length, 1.0), degenerate=False,
    )


def frames_from_bloch(bloch_vectors: np.ndarray) -> list:
    return [build_frame(vector) for vector in bloch_vectors]


def j0_expectation(frames: Sequence[BlochFrame]) -> float:
    """<J_0> = ½ Σ_i |<σ_i>|."""
    return 0.5 * float(sum(frame.bloch_len for frame in frames))
