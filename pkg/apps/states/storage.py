"""
Reading and writing JSON state files.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from core.exceptions import StateFileError, StateInvariantError
from core.utils import content_digest

from .factory import FamilySpec
from .quantum import PURE, PURE_TOLERANCE, QuantumState, make_mixture, make_pure
from .serializers import StateFileSerializer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedState:
    """A state read from disk together with its provenance."""

    state: QuantumState
    digest: str
    family: Optional[FamilySpec] = None


def _amplitudes_to_json(vector: np.ndarray) -> list:
    return [[float(a.real), float(a.imag)] for a in vector]


def _amplitudes_from_json(pairs: list) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=complex)


def _normalized_vector(pairs: list, where: str) -> np.ndarray:
    vector = _amplitudes_from_json(pairs)
    norm_sq = float(np.sum(np.abs(vector) ** 2))
    if abs(norm_sq - 1.0) > PURE_TOLERANCE:
        raise StateInvariantError(invariant=f"normalized amplitudes ({where})", value=norm_sq)
    return vector


def state_document(state: QuantumState, family: Optional[FamilySpec] = None) -> dict:
    """Render a state in the state file format."""
    document = {'n_qubits': state.n_qubits, 'kind': state.kind}
    if state.is_pure:
        document['amplitudes'] = _amplitudes_to_json(state.amplitudes)
    else:
        weights, vectors = state.pure_decomposition()
        if not state.components:
            # eigen-decomposition drops non-positive eigenvalues
            weights = weights / weights.sum()
        document['terms'] = [
            {'weight': float(w), 'amplitudes': _amplitudes_to_json(vectors[:, k])}
            for k, w in enumerate(weights)
        ]
    if family is not None:
        document['family'] = family.as_dict()
    return document


def state_from_document(document) -> LoadedState:
    """Validate a decoded state document and build the state."""
    serializer = StateFileSerializer(data=document)
    if not serializer.is_valid():
        raise StateFileError(field_errors=serializer.errors)
    data = serializer.validated_data

    if data['kind'] == PURE:
        state = make_pure(data['n_qubits'], _normalized_vector(data['amplitudes'], 'pure state'))
    else:
        components = [
            make_pure(data['n_qubits'], _normalized_vector(term['amplitudes'], f"term {k}"))
            for k, term in enumerate(data['terms'])
        ]
        state = make_mixture([term['weight'] for term in data['terms']], components)

    family = None
    if 'family' in data:
        family = FamilySpec(family=data['family']['family'], params=dict(data['family']['params']))
    return LoadedState(state=state, digest='', family=family)


def dumps_state(state: QuantumState, family: Optional[FamilySpec] = None) -> str:
    return json.dumps(state_document(state, family), indent=2) + "\n"


def write_state_file(path, state: QuantumState, family: Optional[FamilySpec] = None) -> str:
    """Write a state file and return its content digest."""
    text = dumps_state(state, family)
    Path(path).write_text(text, encoding='utf-8')
    logger.info(f"Wrote {state.n_qubits}-qubit {state.kind} state to {path}")
    return content_digest(text.encode('utf-8'))


def read_state_file(path) -> LoadedState:
    """Read, validate and build a state from a JSON state file."""
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        logger.error(f"Cannot read state file {path}: {e}")
        raise StateFileError(path=str(path), field_errors={'file': [str(e)]})

    try:
        document = json.loads(raw.decode('utf-8'))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        logger.error(f"State file {path} is not valid JSON: {e}")
        raise StateFileError(path=str(path), field_errors={'json': [str(e)]})

    try:
        loaded = state_from_document(document)
    except StateFileError as e:
        raise StateFileError(path=str(path), field_errors=e.details)
    return LoadedState(state=loaded.state, digest=content_digest(raw), family=loaded.family)
