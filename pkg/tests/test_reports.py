"""
Tests for report documents, parameter sweeps and verification checks.
"""

import csv
import io
import json
import math

from django.test import SimpleTestCase
from numpy.testing import assert_allclose

from apps.entanglement.witness import witness
from apps.frames.correlations import correlation_table
from apps.frames.frames import frames_from_bloch
from apps.reports.documents import CSV, JSON, build_document, parse_json, render, render_csv, render_json
from apps.reports.sweep import render_sweep_csv, render_sweep_json, run_sweep, sweep_values
from apps.reports.types import CLOSED_FORM, GENERIC
from apps.reports.verification import VerificationSuite, grid_refine_variance
from apps.squeezing.engine import xi_tilde
from apps.states.factory import FamilySpec, sample_pure_state
from core.exceptions import FamilyError, InputError
from core.utils import ZERO_MEAN_SPIN, Undefined, is_defined

from .helpers import SQRT_HALF, bell_state, family, minimizer_config, schmidt_state_for_concurrence


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class ReportDocumentTestCase(SimpleTestCase):
    """Test JSON and CSV rendering of report documents."""

    def setUp(self):
        self.config = minimizer_config()

    def test_json_round_trip(self):
        report = xi_tilde(sample_pure_state(3, 2), self.config)
        document = build_document(report, self.config, input_digest='sha256:abc')
        self.assertEqual(parse_json(render_json(document)), document)

    def test_round_trip_with_verdict_and_undefined_values(self):
        state = bell_state()
        report = xi_tilde(state, self.config)
        document = build_document(report, self.config, verdict=witness(state, self.config, report=report))
        parsed = parse_json(render_json(document))
        self.assertEqual(parsed, document)
        self.assertEqual(parsed.report.xi_tilde_2, Undefined(ZERO_MEAN_SPIN))

    def test_undefined_is_an_object(self):
        report = xi_tilde(bell_state(), self.config)
        data = json.loads(render_json(build_document(report, self.config)))
        self.assertEqual(data['report']['xi_tilde_2'], {'undefined': ZERO_MEAN_SPIN})
        self.assertEqual(data['report']['xi_1'], {'undefined': ZERO_MEAN_SPIN})

    def test_optional_fields_are_omitted(self):
        report = xi_tilde(sample_pure_state(2, 3), self.config)
        data = json.loads(render_json(build_document(report, self.config)))
        self.assertNotIn('timing_ms', data)
        self.assertNotIn('verdict', data)
        self.assertNotIn('workers', data['config_echo'])
        self.assertEqual(data['schema_version'], '1.0')

    def test_rendering_is_deterministic(self):
        state = sample_pure_state(3, 4)
        first = render_json(build_document(xi_tilde(state, self.config), self.config))
        second = render_json(build_document(xi_tilde(state, self.config), self.config))
        self.assertEqual(first, second)

    def test_csv_matches_json(self):
        """Test both formats carry the same numbers bit for bit."""
        state = schmidt_state_for_concurrence(0.4)
        document = build_document(xi_tilde(state, self.config), self.config, verdict=witness(state, self.config))
        data = json.loads(render_json(document))
        rows = csv_rows(render_csv(document))
        self.assertEqual(len(rows), 1)
        row = rows[0]
        for column in ('xi_tilde_1', 'xi_tilde_2', 'var_min', 'j0', 'xi_1', 'xi_2'):
            self.assertEqual(float(row[column]), data['report'][column])
        self.assertEqual(row['converged'], 'true')
        self.assertEqual(row['entangled_certified'], 'true')
        self.assertEqual([float(t) for t in row['theta_opt'].split(';')], data['report']['theta_opt'])
        self.assertEqual(int(row['seed']), data['config_echo']['seed'])

    def test_csv_undefined_cell(self):
        row = csv_rows(render(build_document(xi_tilde(bell_state(), self.config), self.config), CSV))[0]
        self.assertEqual(json.loads(row['xi_tilde_2']), {'undefined': ZERO_MEAN_SPIN})

    def test_timing_is_included_on_request(self):
        document = build_document(xi_tilde(sample_pure_state(2, 5), self.config), self.config, timing_ms=12.5)
        self.assertEqual(json.loads(render(document, JSON))['timing_ms'], 12.5)
        self.assertEqual(csv_rows(render(document, CSV))[0]['timing_ms'], '12.5')

    def test_parse_errors(self):
        for text in ('{', '{"schema_version": "1.0"}', '[]'):
            with self.subTest(text=text):
                with self.assertRaises(InputError) as ctx:
                    parse_json(text)
                self.assertEqual(ctx.exception.code, 'MALFORMED_REPORT')

    def test_unknown_format(self):
        document = build_document(xi_tilde(sample_pure_state(2, 5), self.config), self.config)
        with self.assertRaises(InputError):
            render(document, 'xml')


class SweepTestCase(SimpleTestCase):
    """Test sweep_values and run_sweep."""

    def setUp(self):
        self.config = minimizer_config()

    def test_sweep_values(self):
        self.assertEqual(sweep_values(0.0, 1.0, 5), [0.0, 0.25, 0.5, 0.75, 1.0])
        self.assertEqual(sweep_values(0.3, 0.9, 1), [0.3])
        values = sweep_values(0.0, math.pi / 2, 7)
        self.assertEqual(values[-1], math.pi / 2)
        with self.assertRaises(InputError):
            sweep_values(0.0, 1.0, 0)

    def test_two_qubit_family_sweep(self):
        """Test ξ₁ and ξ̃₁ against √(1-|sin 2φ|), with the closed form at φ = π/4."""
        rows = run_sweep(FamilySpec('psi_prime', {}), 'phi', 0.0, math.pi / 2, 21, self.config)
        self.assertEqual(len(rows), 21)
        middle = rows[10]
        self.assertEqual(middle.resolution, CLOSED_FORM)
        self.assertAlmostEqual(middle.xi_1, 0.0, delta=1e-9)
        self.assertAlmostEqual(middle.xi_2, SQRT_HALF, delta=1e-9)
        self.assertFalse(is_defined(middle.xi_tilde_2))
        for row in rows:
            s = abs(math.sin(2 * row.param))
            self.assertAlmostEqual(row.xi_tilde_1, math.sqrt(1 - s), delta=1e-6)
            self.assertAlmostEqual(row.concurrence, s, delta=1e-12)
            if row is not middle:
                self.assertEqual(row.resolution, GENERIC)
                assert_allclose([row.xi_1, row.xi_2], [math.sqrt(1 - s), 1 / math.sqrt(1 + s)], atol=1e-9)

    def test_schmidt_sweep(self):
        rows = run_sweep(FamilySpec('schmidt_pair', {}), 'lambda1_sq', 0.5, 1.0, 6, self.config)
        self.assertFalse(is_defined(rows[0].xi_tilde_2))
        for row in rows[1:]:
            product = math.sqrt(row.param * (1 - row.param))
            self.assertAlmostEqual(row.xi_tilde_1, math.sqrt(1 - 2 * product), delta=1e-7)
            self.assertAlmostEqual(row.xi_tilde_2, math.sqrt(1 - 2 * product) / (2 * row.param - 1), delta=1e-7)

    def test_psi_rows_have_zero_mean_spin(self):
        """Test cos φ|01> + sin φ|10> keeps undefined ξ₁, ξ₂ away from the symmetric point."""
        rows = run_sweep(FamilySpec('psi', {}), 'phi', 0.1, 1.2, 4, self.config)
        for row in rows:
            self.assertEqual(row.xi_1, Undefined(ZERO_MEAN_SPIN))
            self.assertEqual(row.xi_2, Undefined(ZERO_MEAN_SPIN))
            self.assertEqual(row.resolution, GENERIC)

    def test_multi_qubit_rows_have_no_concurrence(self):
        rows = run_sweep(FamilySpec('spin_coherent', {'n_qubits': 3}), 'polar', 0.0, 1.0, 3, self.config)
        for row in rows:
            self.assertFalse(is_defined(row.concurrence))
            self.assertAlmostEqual(row.xi_tilde_1, 1.0, delta=1e-9)

    def test_unknown_family_or_parameter(self):
        with self.assertRaises(FamilyError):
            run_sweep(FamilySpec('squeezed_vacuum', {}), 'phi', 0.0, 1.0, 3, self.config)
        with self.assertRaises(FamilyError):
            run_sweep(FamilySpec('psi', {}), 'theta', 0.0, 1.0, 3, self.config)

    def test_rendered_sweeps_agree(self):
        rows = run_sweep(FamilySpec('psi', {}), 'phi', 0.1, 0.7, 4, self.config)
        from_csv = csv_rows(render_sweep_csv(rows))
        from_json = json.loads(render_sweep_json(rows))
        self.assertEqual(len(from_csv), 4)
        for csv_row, json_row in zip(from_csv, from_json):
            self.assertEqual(float(csv_row['xi_tilde_1']), json_row['xi_tilde_1'])
            self.assertEqual(csv_row['resolution'], json_row['resolution'])


class VerificationSuiteTestCase(SimpleTestCase):
    """Test individual verification checks."""

    def setUp(self):
        self.lines = []
        self.suite = VerificationSuite(config=minimizer_config(), quick=True, write=self.lines.append)

    def test_collective_sweep_covers_every_point(self):
        passed, details = self.suite.check_collective_sweep()
        self.assertTrue(passed)
        self.assertTrue(details.startswith('21 points (1 closed form)'))

    def test_oracle_grid_on_schmidt_states(self):
        for lambda1_sq in (0.6, 0.85):
            state = family('schmidt_pair', lambda1_sq=lambda1_sq)
            table = correlation_table(state)
            product = math.sqrt(lambda1_sq * (1 - lambda1_sq))
            oracle = grid_refine_variance(table, frames_from_bloch(table.bloch))
            self.assertAlmostEqual(oracle, (1 - 2 * product) / 2, delta=1e-10)

    def test_failed_check_is_printed(self):
        self.assertFalse(self.suite.run_check('always fails', lambda: (False, 'nope')))
        self.assertIn('FAIL', self.lines[0])
        self.assertEqual(self.lines[1].strip(), 'nope')
