"""
Minimizer configuration.
"""

from dataclasses import asdict, dataclass, replace

from django.conf import settings

from core.exceptions import ConfigurationError


@dataclass(frozen=True)
class MinimizerConfig:
    """Multistart coordinate-descent settings.

    n_restarts is raised to large_n_restarts for registers larger than
    large_n_threshold qubits (see effective_restarts).
    """

    n_restarts: int = 16
    max_sweeps: int = 200
    convergence_tol: float = 1e-12
    seed: int = 7
    workers: int = 1
    large_n_restarts: int = 64
    large_n_threshold: int = 8

    def __post_init__(self):
        for name in ('n_restarts', 'max_sweeps', 'workers', 'large_n_restarts', 'large_n_threshold'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigurationError(component='minimizer', setting=f"{name} must be a positive integer, got {value!r}")
        if not self.convergence_tol > 0:
            raise ConfigurationError(component='minimizer', setting=f"convergence_tol must be positive, got {self.convergence_tol!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise ConfigurationError(component='minimizer', setting=f"seed must be a 64-bit unsigned integer, got {self.seed!r}")

    @classmethod
    def from_settings(cls, **overrides) -> 'MinimizerConfig':
        """Build a config from settings.SQUEEZING; None-valued overrides are ignored."""
        conf = settings.SQUEEZING
        values = {
            'n_restarts': conf['N_RESTARTS'],
            'max_sweeps': conf['MAX_SWEEPS'],
            'convergence_tol': conf['CONVERGENCE_TOL'],
            'seed': conf['DEFAULT_SEED'],
            'workers': conf['WORKERS'],
            'large_n_restarts': conf['LARGE_N_RESTARTS'],
            'large_n_threshold': conf['LARGE_N_THRESHOLD'],
        }
        unknown = set(overrides) - set(values)
        if unknown:
            raise ConfigurationError(component='minimizer', setting=f"unknown option {sorted(unknown)[0]}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def effective_restarts(self, n_qubits: int) -> int:
        if n_qubits > self.large_n_threshold:
            return max(self.n_restarts, self.large_n_restarts)
        return self.n_restarts

    def with_seed(self, seed: int) -> 'MinimizerConfig':
        return replace(self, seed=seed)

    def as_dict(self) -> dict:
        return asdict(self)
