"""
Entanglement witness: ξ̃₂ < 1 certifies entanglement.

Every separable state has ξ̃₂ ≥ 1 (equivalently (ΔJ_θ)²_min ≥ <J_0>²/N), so
the test is sufficient but not necessary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import SqueezingReport, xi_tilde
from apps.states.quantum import QuantumState
from core.exceptions import InputError
from core.utils import MaybeFloat, is_defined

logger = logging.getLogger(__name__)

ENTANGLED = 'ENTANGLED'
INCONCLUSIVE = 'INCONCLUSIVE'


@dataclass(frozen=True)
class WitnessVerdict:
    xi_tilde_2: MaybeFloat
    entangled_certified: bool
    note: str

    @property
    def label(self) -> str:
        return ENTANGLED if self.entangled_certified else INCONCLUSIVE


def separable_bound(report: SqueezingReport) -> float:
    """var_min - <J_0>²/N; negative only for entangled states."""
    return report.var_min - report.j0 ** 2 / report.n_qubits


def witness(state: QuantumState, config: Optional[MinimizerConfig] = None,
            report: Optional[SqueezingReport] = None) -> WitnessVerdict:
    """Certify entanglement when ξ̃₂ < 1 - WITNESS_MARGIN, otherwise report inconclusive."""
    if state.n_qubits < 2:
        raise InputError("The witness needs at least two qubits", code="TOO_FEW_QUBITS")
    report = report if report is not None else xi_tilde(state, config)
    margin = settings.SQUEEZING['WITNESS_MARGIN']

    if not is_defined(report.xi_tilde_2):
        note = (
            f"xi_tilde_2 undefined ({report.xi_tilde_2.reason}); the generic estimator cannot decide. "
            "For two-qubit pure states use concurrence_closed_form for the limiting value."
        )
        verdict = WitnessVerdict(xi_tilde_2=report.xi_tilde_2, entangled_certified=False, note=note)
    elif report.xi_tilde_2 < 1.0 - margin:
        verdict = WitnessVerdict(
            xi_tilde_2=report.xi_tilde_2, entangled_certified=True,
            note="xi_tilde_2 < 1 certifies entanglement",
        )
    else:
        verdict = WitnessVerdict(
            xi_tilde_2=report.xi_tilde_2, entangled_certified=False,
            note="xi_tilde_2 >= 1; the witness is sufficient, not necessary",
        )
    logger.info(f"Witness verdict for {state.n_qubits} qubits: {verdict.label}")
    return verdict
