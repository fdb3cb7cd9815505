"""
One-parameter sweeps over a state family.
"""

from __future__ import annotations

import json
import logging
from typing import List

from apps.entanglement.schmidt import concurrence_pure, is_symmetric_pair, symmetric_pair_closed_form
from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import xi_tilde
from apps.states.factory import FAMILY_PARAMETERS, FamilySpec, build
from core.exceptions import FamilyError, InputError
from core.utils import Undefined, is_defined

from .documents import csv_table
from .serializers import SweepRowSerializer
from .types import CLOSED_FORM, GENERIC, SweepRow

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ('param', 'xi_1', 'xi_2', 'xi_tilde_1', 'xi_tilde_2', 'concurrence', 'j0', 'resolution')
NOT_A_PURE_PAIR = "not a two-qubit pure state"


def sweep_values(start: float, stop: float, steps: int) -> List[float]:
    """steps evenly spaced values with both endpoints included."""
    if steps < 1:
        raise InputError(f"steps must be at least 1, got {steps}", code="INVALID_STEPS")
    if steps == 1:
        return [float(start)]
    values = [start + (stop - start) * k / (steps - 1) for k in range(steps)]
    values[-1] = float(stop)
    return values


def sweep_row(spec: FamilySpec, value: float, config: MinimizerConfig) -> SweepRow:
    state = build(spec)
    report = xi_tilde(state, config)
    xi_1, xi_2, resolution = report.xi_1, report.xi_2, GENERIC
    if not is_defined(xi_1) and is_symmetric_pair(state):
        xi_1, xi_2 = symmetric_pair_closed_form(state)
        resolution = CLOSED_FORM

    two_qubit_pure = state.n_qubits == 2 and state.is_pure
    return SweepRow(
        param=float(value),
        xi_1=xi_1,
        xi_2=xi_2,
        xi_tilde_1=report.xi_tilde_1,
        xi_tilde_2=report.xi_tilde_2,
        concurrence=concurrence_pure(state) if two_qubit_pure else Undefined(NOT_A_PURE_PAIR),
        j0=report.j0,
        resolution=resolution,
    )


def run_sweep(base: FamilySpec, parameter: str, start: float, stop: float, steps: int,
              config: MinimizerConfig) -> List[SweepRow]:
    """Analyze base with `parameter` stepped from start to stop.

    Where the collective ξ₁, ξ₂ are undefined at a symmetric two-qubit pure
    point, they are taken from the symmetric-pair closed form and the row's
    resolution says so. ξ̃ columns always come from the generic estimator.
    """
    if base.family not in FAMILY_PARAMETERS:
        raise FamilyError(family=base.family, reason="unknown family")
    if parameter not in FAMILY_PARAMETERS[base.family]:
        raise FamilyError(family=base.family, parameter=parameter, reason="not a parameter of this family")

    rows = [sweep_row(base.with_param(parameter, value), value, config)
            for value in sweep_values(start, stop, steps)]
    logger.info(f"Swept {base.family}.{parameter} over {len(rows)} points")
    return rows


def render_sweep_csv(rows: List[SweepRow]) -> str:
    return csv_table(SWEEP_COLUMNS, [[getattr(row, c) for c in SWEEP_COLUMNS] for row in rows])


def render_sweep_json(rows: List[SweepRow]) -> str:
    data = SweepRowSerializer(rows, many=True).data
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
