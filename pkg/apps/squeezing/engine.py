"""
Squeezing parameters of a state.

xi_tilde minimizes the variance of J_θ = ½ Σ_i σ_i·n_θi over per-qubit
transverse angles and is invariant under local unitaries. xi_collective is
the classic single-frame version built around the collective mean spin.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from django.conf import settings

from apps.frames.correlations import CorrelationTable, correlation_table
from apps.frames.frames import build_frame, frames_from_bloch, j0_expectation
from apps.states.quantum import QuantumState
from core.utils import ZERO_MEAN_SPIN, MaybeFloat, Undefined, canonical_angle

from .config import MinimizerConfig
from .minimizer import minimize_variance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SqueezingReport:
    """Every squeezing figure computed for one state."""

    n_qubits: int
    xi_tilde_1: float
    xi_tilde_2: MaybeFloat
    theta_opt: tuple
    var_min: float
    j0: float
    xi_1: MaybeFloat
    xi_2: MaybeFloat
    collective_mean_spin_len: float
    converged: bool = True
    restarts: int = 1


class CollectiveSqueezing(NamedTuple):
    xi_1: MaybeFloat
    xi_2: MaybeFloat
    mean_spin_len: float


def _threshold() -> float:
    return settings.SQUEEZING['DEGENERACY_THRESHOLD']


def xi_collective(state: QuantumState, config: Optional[MinimizerConfig] = None,
                  table: Optional[CorrelationTable] = None) -> CollectiveSqueezing:
    """
    ξ₁ = 2 (ΔJ_θ)_min / √N and ξ₂ = √N (ΔJ_θ)_min / <J_0> in the collective frame.

    The minimum over θ is the smallest eigenvalue of the 2×2 covariance of
    (J⊥, J⊢), so no search is needed and config is not consulted. Both values
    are undefined when the collective mean spin vanishes.
    """
    table = table if table is not None else correlation_table(state)
    n = state.n_qubits
    mean_spin = 0.5 * table.bloch.sum(axis=0)
    length = float(np.linalg.norm(mean_spin))
    if length < _threshold():
        undefined = Undefined(ZERO_MEAN_SPIN)
        return CollectiveSqueezing(xi_1=undefined, xi_2=undefined, mean_spin_len=length)

    transverse = build_frame(mean_spin).transverse()
    covariance = n * np.eye(2)
    for i, j in table.pairs():
        block = transverse @ table.get(i, j) @ transverse.T
        covariance += block + block.T
    covariance *= 0.25
    variance = max(float(np.linalg.eigvalsh(covariance)[0]), 0.0)

    return CollectiveSqueezing(
        xi_1=2.0 * math.sqrt(variance) / math.sqrt(n),
        xi_2=math.sqrt(n) * math.sqrt(variance) / length,
        mean_spin_len=length,
    )


def xi_tilde(state: QuantumState, config: Optional[MinimizerConfig] = None) -> SqueezingReport:
    """Compute ξ̃₁, ξ̃₂ and the collective ξ₁, ξ₂ of a state."""
    config = config or MinimizerConfig.from_settings()
    table = correlation_table(state)
    frames = frames_from_bloch(table.bloch)
    result = minimize_variance(table, frames, config)

    n = state.n_qubits
    j0 = j0_expectation(frames)
    root_var = math.sqrt(result.var_min)
    xi_tilde_2 = math.sqrt(n) * root_var / j0 if j0 > _threshold() else Undefined(ZERO_MEAN_SPIN)
    collective = xi_collective(state, config, table=table)

    report = SqueezingReport(
        n_qubits=n,
        xi_tilde_1=2.0 * root_var / math.sqrt(n),
        xi_tilde_2=xi_tilde_2,
        theta_opt=tuple(canonical_angle(float(t)) for t in result.theta_opt),
        var_min=result.var_min,
        j0=j0,
        xi_1=collective.xi_1,
        xi_2=collective.xi_2,
        collective_mean_spin_len=collective.mean_spin_len,
        converged=result.converged,
        restarts=result.restarts,
    )
    logger.debug(f"N={n}: xi_tilde_1={report.xi_tilde_1:.17g}, var_min={report.var_min:.17g}, j0={j0:.17g}")
    return report
