"""
Named state families and the random samplers used by the property suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping

import numpy as np

from core.exceptions import FamilyError
from core.utils import derive_seed, make_rng

from .quantum import QuantumState, make_mixture, make_pure, product_state

FAMILY_CHOICES = [
    ('psi', 'cos φ|01> + sin φ|10>'),
    ('psi_prime', 'cos φ|00> + sin φ|11>'),
    ('two_qubit_general', 'α|00> + β|01> + γ|10> + δ|11>'),
    ('schmidt_pair', 'λ1|00> + λ2|11>'),
    ('product_zero', '|0...0>'),
    ('spin_coherent', 'N identically oriented qubits'),
    ('ghz', '(|0...0> + |1...1>)/√2'),
    ('separable_random', 'random mixture of product states'),
    ('pure_random', 'Haar-random pure state'),
]

INTEGER_PARAMS = {'n_qubits', 'seed', 'terms'}


@dataclass(frozen=True)
class FamilySpec:
    """A state family name plus its parameters."""

    family: str
    params: Mapping[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {'family': self.family, 'params': dict(sorted(self.params.items()))}

    def with_param(self, name: str, value: float) -> 'FamilySpec':
        return FamilySpec(family=self.family, params={**self.params, name: value})


def haar_qubit(rng: np.random.Generator) -> np.ndarray:
    """Haar-random single-qubit amplitudes (normalized complex Gaussian pair)."""
    pair = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return pair / np.linalg.norm(pair)


def sample_product_state(n_qubits: int, seed: int) -> QuantumState:
    """Tensor product of independent Haar-random qubits; qubit q uses (seed, q)."""
    if n_qubits < 1:
        raise FamilyError(family='product', parameter='n_qubits', reason="must be at least 1")
    return product_state([haar_qubit(make_rng(seed, q)) for q in range(n_qubits)])


def sample_pure_state(n_qubits: int, seed: int) -> QuantumState:
    """Haar-random N-qubit pure state."""
    rng = make_rng(seed)
    dim = 2 ** n_qubits
    vector = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return make_pure(n_qubits, vector / np.linalg.norm(vector))


def sample_separable_state(n_qubits: int, terms: int, seed: int) -> QuantumState:
    """Σ_k p_k ρ_1^(k) ⊗ ... ⊗ ρ_N^(k) with flat-simplex weights and Haar product terms."""
    rng = make_rng(seed, 0)
    weights = rng.dirichlet(np.ones(terms))
    weights = weights / weights.sum()
    components = [sample_product_state(n_qubits, derive_seed(seed, k + 1)) for k in range(terms)]
    return make_mixture(weights, components)


def _integer(spec: FamilySpec, name: str, minimum: int = 0) -> int:
    value = _require(spec, name)
    if float(value) != int(value):
        raise FamilyError(family=spec.family, parameter=name, reason="must be an integer")
    if int(value) < minimum:
        raise FamilyError(family=spec.family, parameter=name, reason=f"must be at least {minimum}")
    return int(value)


def _require(spec: FamilySpec, name: str) -> float:
    if name not in spec.params:
        raise FamilyError(family=spec.family, parameter=name, reason="missing")
    return spec.params[name]


def _build_psi(spec: FamilySpec) -> QuantumState:
    phi = float(_require(spec, 'phi'))
    return make_pure(2, [0.0, math.cos(phi), math.sin(phi), 0.0])


def _build_psi_prime(spec: FamilySpec) -> QuantumState:
    phi = float(_require(spec, 'phi'))
    return make_pure(2, [math.cos(phi), 0.0, 0.0, math.sin(phi)])


def _build_two_qubit_general(spec: FamilySpec) -> QuantumState:
    amplitudes = [
        complex(spec.params.get(name, 0.0), spec.params.get(f"{name}_im", 0.0))
        for name in ('alpha', 'beta', 'gamma', 'delta')
    ]
    return make_pure(2, amplitudes)


def _build_schmidt_pair(spec: FamilySpec) -> QuantumState:
    if 'lambda1_sq' in spec.params and 'lambda1' in spec.params:
        raise FamilyError(family=spec.family, parameter='lambda1', reason="give lambda1 or lambda1_sq, not both")
    if 'lambda1_sq' in spec.params:
        lambda1_sq = float(spec.params['lambda1_sq'])
    else:
        lambda1_sq = float(_require(spec, 'lambda1')) ** 2
    if not 0.0 <= lambda1_sq <= 1.0:
        raise FamilyError(family=spec.family, parameter='lambda1', reason="λ1² must lie in [0, 1]")
    return make_pure(2, [math.sqrt(lambda1_sq), 0.0, 0.0, math.sqrt(1.0 - lambda1_sq)])


def _build_product_zero(spec: FamilySpec) -> QuantumState:
    n_qubits = _integer(spec, 'n_qubits', minimum=1)
    vector = np.zeros(2 ** n_qubits, dtype=complex)
    vector[0] = 1.0
    return make_pure(n_qubits, vector)


def _build_spin_coherent(spec: FamilySpec) -> QuantumState:
    n_qubits = _integer(spec, 'n_qubits', minimum=1)
    if {'dx', 'dy', 'dz'} & set(spec.params):
        direction = np.array([spec.params.get(k, 0.0) for k in ('dx', 'dy', 'dz')], dtype=float)
        if abs(np.linalg.norm(direction) - 1.0) > 1e-9:
            raise FamilyError(family=spec.family, parameter='direction', reason="must be a unit vector")
        polar = math.acos(max(-1.0, min(1.0, direction[2])))
        azimuth = math.atan2(direction[1], direction[0])
    else:
        polar = float(spec.params.get('polar', 0.0))
        azimuth = float(spec.params.get('azimuth', 0.0))
    qubit = [math.cos(polar / 2), complex(math.cos(azimuth), math.sin(azimuth)) * math.sin(polar / 2)]
    return product_state([qubit] * n_qubits)


def _build_ghz(spec: FamilySpec) -> QuantumState:
    n_qubits = _integer(spec, 'n_qubits', minimum=1)
    vector = np.zeros(2 ** n_qubits, dtype=complex)
    vector[0] = vector[-1] = 1.0 / math.sqrt(2.0)
    return make_pure(n_qubits, vector)


def _build_separable_random(spec: FamilySpec) -> QuantumState:
    return sample_separable_state(
        _integer(spec, 'n_qubits', minimum=1),
        _integer(spec, 'terms', minimum=1),
        _integer(spec, 'seed'),
    )


def _build_pure_random(spec: FamilySpec) -> QuantumState:
    return sample_pure_state(_integer(spec, 'n_qubits', minimum=1), _integer(spec, 'seed'))


FAMILY_BUILDERS: Dict[str, Callable[[FamilySpec], QuantumState]] = {
    'psi': _build_psi,
    'psi_prime': _build_psi_prime,
    'two_qubit_general': _build_two_qubit_general,
    'schmidt_pair': _build_schmidt_pair,
    'product_zero': _build_product_zero,
    'spin_coherent': _build_spin_coherent,
    'ghz': _build_ghz,
    'separable_random': _build_separable_random,
    'pure_random': _build_pure_random,
}

FAMILY_PARAMETERS: Dict[str, frozenset] = {
    'psi': frozenset({'phi'}),
    'psi_prime': frozenset({'phi'}),
    'two_qubit_general': frozenset({
        'alpha', 'beta', 'gamma', 'delta', 'alpha_im', 'beta_im', 'gamma_im', 'delta_im',
    }),
    'schmidt_pair': frozenset({'lambda1', 'lambda1_sq'}),
    'product_zero': frozenset({'n_qubits'}),
    'spin_coherent': frozenset({'n_qubits', 'polar', 'azimuth', 'dx', 'dy', 'dz'}),
    'ghz': frozenset({'n_qubits'}),
    'separable_random': frozenset({'n_qubits', 'terms', 'seed'}),
    'pure_random': frozenset({'n_qubits', 'seed'}),
}


def build(spec: FamilySpec) -> QuantumState:
    """Construct the state of a named family."""
    if spec.family not in FAMILY_BUILDERS:
        raise FamilyError(family=spec.family, reason="unknown family")
    unknown = set(spec.params) - FAMILY_PARAMETERS[spec.family]
    if unknown:
        raise FamilyError(family=spec.family, parameter=sorted(unknown)[0], reason="not a parameter of this family")
    for name, value in spec.params.items():
        if not math.isfinite(float(value)):
            raise FamilyError(family=spec.family, parameter=name, reason="must be finite")
    return FAMILY_BUILDERS[spec.family](spec)
