"""
Plain result containers rendered by the reports app.
"""

from dataclasses import dataclass
from typing import Optional

from apps.entanglement.witness import WitnessVerdict
from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import SqueezingReport
from core.utils import MaybeFloat

GENERIC = 'generic'
CLOSED_FORM = 'closed_form'
RESOLUTION_CHOICES = [
    (GENERIC, 'Generic estimator'),
    (CLOSED_FORM, 'Symmetric-pair closed form'),
]


@dataclass(frozen=True)
class ReportDocument:
    """Everything written for one analyzed state file."""

    schema_version: str
    input_digest: str
    report: SqueezingReport
    config_echo: MinimizerConfig
    verdict: Optional[WitnessVerdict] = None
    timing_ms: Optional[float] = None


@dataclass(frozen=True)
class SweepRow:
    param: float
    xi_1: MaybeFloat
    xi_2: MaybeFloat
    xi_tilde_1: MaybeFloat
    xi_tilde_2: MaybeFloat
    concurrence: MaybeFloat
    j0: float
    resolution: str = GENERIC
