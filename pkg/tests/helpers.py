"""
Shared states and file helpers for the test suite.
"""

import json
import math
import tempfile
from pathlib import Path

import numpy as np

from apps.squeezing.config import MinimizerConfig
from apps.states.factory import FamilySpec, build
from apps.states.quantum import make_pure

SQRT_HALF = 1.0 / math.sqrt(2.0)


def bell_state():
    """(|00> + |11>)/√2"""
    return make_pure(2, [SQRT_HALF, 0.0, 0.0, SQRT_HALF])


def family(name, **params):
    return build(FamilySpec(family=name, params=params))


def schmidt_state_for_concurrence(c):
    """λ₁|00> + λ₂|11> with 2λ₁λ₂ = c."""
    return family('schmidt_pair', lambda1_sq=0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def minimizer_config(**overrides):
    return MinimizerConfig.from_settings(**overrides)


class TempDirMixin:
    """Creates a scratch directory per test."""

    def setUp(self):
        super().setUp()
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp_path = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()
        super().tearDown()

    def write_json(self, name, document):
        path = self.tmp_path / name
        path.write_text(json.dumps(document), encoding='utf-8')
        return path


def amplitudes_json(vector):
    return [[float(a.real), float(a.imag)] for a in np.asarray(vector, dtype=complex)]
