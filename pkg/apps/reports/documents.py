"""
Building and rendering report documents as JSON or CSV.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional

from django.conf import settings

from apps.entanglement.witness import WitnessVerdict
from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import SqueezingReport
from core.exceptions import InputError
from core.utils import Undefined, format_number

from .serializers import ReportDocumentSerializer
from .types import ReportDocument

JSON = 'json'
CSV = 'csv'
REPORT_FORMATS = (JSON, CSV)

REPORT_COLUMNS = (
    'n_qubits', 'xi_tilde_1', 'xi_tilde_2', 'var_min', 'j0',
    'xi_1', 'xi_2', 'collective_mean_spin_len', 'converged', 'restarts', 'theta_opt',
)
CONFIG_COLUMNS = ('seed', 'n_restarts', 'max_sweeps', 'convergence_tol', 'large_n_restarts', 'large_n_threshold')


def build_document(report: SqueezingReport, config: MinimizerConfig, input_digest: str = '',
                   verdict: Optional[WitnessVerdict] = None,
                   timing_ms: Optional[float] = None) -> ReportDocument:
    return ReportDocument(
        schema_version=settings.SQUEEZING['REPORT_SCHEMA_VERSION'],
        input_digest=input_digest,
        report=report,
        config_echo=config,
        verdict=verdict,
        timing_ms=timing_ms,
    )


def document_data(document: ReportDocument) -> dict:
    return ReportDocumentSerializer(document).data


def render_json(document: ReportDocument) -> str:
    """Sorted-key JSON; floats use the shortest repr that round-trips."""
    return json.dumps(document_data(document), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> ReportDocument:
    """Inverse of render_json."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Report is not valid JSON: {e}", code="MALFORMED_REPORT")
    serializer = ReportDocumentSerializer(data=data)
    if not serializer.is_valid():
        raise InputError("Report does not match the document schema", code="MALFORMED_REPORT",
                         details=serializer.errors)
    return serializer.save()


def _cell(value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (float, Undefined)):
        return format_number(value)
    if isinstance(value, (list, tuple)):
        return ';'.join(format_number(v) for v in value)
    return str(value)


def csv_table(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def render_csv(document: ReportDocument) -> str:
    """One header row and one data row; numbers use 17 significant digits."""
    report, config = document.report, document.config_echo
    header = ['schema_version', 'input_digest', *REPORT_COLUMNS]
    row = [document.schema_version, document.input_digest, *[getattr(report, c) for c in REPORT_COLUMNS]]
    if document.verdict is not None:
        header += ['entangled_certified', 'note']
        row += [document.verdict.entangled_certified, document.verdict.note]
    header += list(CONFIG_COLUMNS)
    row += [getattr(config, c) for c in CONFIG_COLUMNS]
    if document.timing_ms is not None:
        header.append('timing_ms')
        row.append(float(document.timing_ms))
    return csv_table(header, [row])


def render(document: ReportDocument, report_format: str = JSON) -> str:
    if report_format == JSON:
        return render_json(document)
    if report_format == CSV:
        return render_csv(document)
    raise InputError(f"Unknown report format {report_format!r}", code="INVALID_REPORT_FORMAT")
