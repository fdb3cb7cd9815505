"""
Built-in verification runs.

Each check samples states from a seed, compares the generic estimators with
a closed form, a bound or a brute-force oracle, and prints one PASS/FAIL line.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy import optimize

from apps.entanglement.schmidt import concurrence_closed_form, concurrence_pure
from apps.entanglement.witness import separable_bound, witness
from apps.frames.correlations import CorrelationTable, correlation_table
from apps.frames.frames import BlochFrame, frames_from_bloch
from apps.frames.operators import (
    collective_operators, operator_expectation, operator_variance, theta_operator,
)
from apps.squeezing.config import MinimizerConfig
from apps.squeezing.engine import xi_tilde
from apps.squeezing.minimizer import coupling_matrix, minimize_variance, variance_at_angles, variance_objective
from apps.states.factory import FamilySpec, build, sample_pure_state, sample_separable_state
from apps.states.quantum import QuantumState, make_mixture
from apps.transforms.local_unitary import invariance_check
from core.exceptions import SqueezingError
from core.utils import derive_seed, format_duration, is_defined, make_rng

from .sweep import run_sweep
from .types import CLOSED_FORM

logger = logging.getLogger(__name__)


# Grid points per angle for the brute-force oracle. The full grid has
# points**N entries, so it is coarser beyond two qubits.
ORACLE_POINTS_SMALL_N = 256
ORACLE_POINTS_LARGE_N = 48


def grid_refine_variance(table: CorrelationTable, frames: List[BlochFrame],
                         points: Optional[int] = None, refine: int = 8) -> float:
    """Brute-force minimum of the transverse variance.

    Evaluates every angle vector on a uniform grid (256 points per angle up
    to two qubits, 48 beyond), then polishes the best `refine` grid points
    with BFGS.
    """
    coupling = coupling_matrix(table, frames)
    n = len(frames)
    if points is None:
        points = ORACLE_POINTS_SMALL_N if n <= 2 else ORACLE_POINTS_LARGE_N
    grid = np.linspace(0.0, 2 * math.pi, points, endpoint=False)
    mesh = np.stack(np.meshgrid(*[grid] * n, indexing='ij'), axis=-1).reshape(-1, n)
    pairs = np.empty((mesh.shape[0], 2 * n))
    pairs[:, 0::2] = np.cos(mesh)
    pairs[:, 1::2] = np.sin(mesh)
    values = 0.25 * (n + np.einsum('mi,ij,mj->m', pairs, coupling, pairs))
    objective, gradient = variance_objective(coupling)

    best = float(values.min())
    for index in np.argsort(values)[:refine]:
        result = optimize.minimize(objective, mesh[index], jac=gradient, method='BFGS', options={'gtol': 1e-12})
        best = min(best, float(result.fun))
    return best


def random_mixed_state(n_qubits: int, seed: int) -> QuantumState:
    """Rank-2 mixture of two Haar-random pure states."""
    weight = float(make_rng(seed, 0).uniform(0.05, 0.95))
    return make_mixture(
        [weight, 1.0 - weight],
        [sample_pure_state(n_qubits, derive_seed(seed, 1)), sample_pure_state(n_qubits, derive_seed(seed, 2))],
    )


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""
    seconds: float = 0.0


@dataclass
class VerificationSuite:
    """Runs every verification check and collects the results."""

    config: MinimizerConfig
    quick: bool = False
    write: Callable[[str], None] = print
    results: List[CheckResult] = field(default_factory=list)

    def count(self, full: int, quick: int) -> int:
        return quick if self.quick else full

    def seed_for(self, check: int, sample: int) -> int:
        return derive_seed(self.config.seed, check, sample)

    def print_result(self, result: CheckResult):
        icon = "✅" if result.passed else "❌"
        status = "PASS" if result.passed else "FAIL"
        self.write(f"{icon} {result.name:<40} {status} ({format_duration(result.seconds)})")
        if result.details:
            self.write(f"   {result.details}")

    def run_check(self, name: str, check: Callable[[], Tuple[bool, str]]) -> bool:
        started = time.perf_counter()
        try:
            passed, details = check()
        except SqueezingError as e:
            logger.error(f"Verification check {name} raised {e.code}: {e.message}")
            passed, details = False, f"Error: {e.message}"
        result = CheckResult(name=name, passed=passed, details=details, seconds=time.perf_counter() - started)
        self.results.append(result)
        self.print_result(result)
        return passed

    def check_collective_sweep(self) -> Tuple[bool, str]:
        """cos φ|00> + sin φ|11> at φ = kπ/40 against √(1-|sin 2φ|), 1/√(1+|sin 2φ|)."""
        rows = run_sweep(FamilySpec('psi_prime', {}), 'phi', 0.0, math.pi / 2, 21, self.config)
        worst, undefined = 0.0, 0
        for row in rows:
            s = abs(math.sin(2 * row.param))
            if not (is_defined(row.xi_1) and is_defined(row.xi_2)):
                undefined += 1
                continue
            worst = max(worst, abs(row.xi_1 - math.sqrt(1 - s)), abs(row.xi_2 - 1 / math.sqrt(1 + s)))
        closed = sum(row.resolution == CLOSED_FORM for row in rows)
        passed = len(rows) == 21 and undefined == 0 and worst <= 1e-9
        return passed, f"{len(rows)} points ({closed} closed form), max deviation {worst:.3e}"

    def check_local_unitary_invariance(self) -> Tuple[bool, str]:
        samples, trials = self.count(50, 6), self.count(10, 3)
        worst, worst_j0 = 0.0, 0.0
        for k in range(samples):
            n = 2 + k % 3
            seed = self.seed_for(2, k)
            state = sample_pure_state(n, seed) if k % 2 == 0 else random_mixed_state(n, seed)
            result = invariance_check(state, trials, derive_seed(seed, 99), self.config)
            worst = max(worst, result.max_deviation)
            worst_j0 = max(worst_j0, result.max_j0_deviation)
        passed = worst <= 1e-6 and worst_j0 <= 1e-10
        return passed, f"max |Δξ̃| {worst:.3e}, max |Δ<J0>| {worst_j0:.3e}"

    def check_two_qubit_closed_forms(self) -> Tuple[bool, str]:
        samples = self.count(1000, 100)
        worst, checked, equivalence_failures = 0.0, 0, 0
        for k in range(samples):
            state = sample_pure_state(2, self.seed_for(3, k))
            report = xi_tilde(state, self.config)
            if report.j0 <= 1e-3:
                continue
            c = concurrence_pure(state)
            xi_1, xi_2 = concurrence_closed_form(c)
            worst = max(worst, abs(report.xi_tilde_1 - xi_1), abs(report.xi_tilde_2 - xi_2))
            if (report.xi_tilde_1 < 1 - 1e-9) != (c > 1e-9):
                equivalence_failures += 1
            checked += 1
        passed = worst <= 1e-6 and equivalence_failures == 0
        return passed, f"{checked} states, max deviation {worst:.3e}, equivalence failures {equivalence_failures}"

    def check_separable_bound(self) -> Tuple[bool, str]:
        samples = self.count(500, 40)
        false_positives, lowest_xi_2, lowest_margin = 0, math.inf, math.inf
        for k in range(samples):
            rng = make_rng(self.seed_for(4, k))
            n = int(rng.integers(2, 7))
            terms = int(rng.integers(1, 9))
            state = sample_separable_state(n, terms, self.seed_for(4, k))
            report = xi_tilde(state, self.config)
            if is_defined(report.xi_tilde_2):
                lowest_xi_2 = min(lowest_xi_2, report.xi_tilde_2)
            lowest_margin = min(lowest_margin, separable_bound(report))
            if witness(state, self.config, report=report).entangled_certified:
                false_positives += 1
        passed = lowest_xi_2 >= 1 - 1e-8 and lowest_margin >= -1e-10 and false_positives == 0
        return passed, (
            f"min ξ̃₂ {lowest_xi_2:.12g}, min var - <J0>²/N {lowest_margin:.3e}, "
            f"false positives {false_positives}"
        )

    def check_optimizer_oracle(self) -> Tuple[bool, str]:
        samples = self.count(100, 10)
        worst = 0.0
        for k in range(samples):
            state = sample_pure_state(2 + k % 2, self.seed_for(5, k))
            table = correlation_table(state)
            frames = frames_from_bloch(table.bloch)
            found = minimize_variance(table, frames, self.config).var_min
            worst = max(worst, abs(found - grid_refine_variance(table, frames)))
        return worst <= 1e-6, f"max |var_min - oracle| {worst:.3e}"

    def check_operator_consistency(self) -> Tuple[bool, str]:
        samples = self.count(200, 20)
        worst_variance, worst_mean, worst_commutator = 0.0, 0.0, 0.0
        for k in range(samples):
            n = 2 + k % 3
            seed = self.seed_for(6, k)
            state = sample_pure_state(n, seed)
            table = correlation_table(state)
            frames = frames_from_bloch(table.bloch)
            thetas = make_rng(seed, 1).uniform(0.0, 2 * math.pi, n)
            operator = theta_operator(frames, thetas)
            worst_variance = max(worst_variance, abs(
                variance_at_angles(table, frames, thetas) - operator_variance(state, operator)
            ))
            worst_mean = max(worst_mean, abs(operator_expectation(state, operator)))
            j_perp, j_vdash, j_0 = collective_operators(frames)
            commutator = j_perp @ j_vdash - j_vdash @ j_perp
            worst_commutator = max(worst_commutator, float(np.max(np.abs(commutator - 1j * j_0))))
        passed = worst_variance <= 1e-10 and worst_mean <= 1e-12 and worst_commutator <= 1e-10
        return passed, (
            f"variance {worst_variance:.3e}, <J_θ> {worst_mean:.3e}, commutator {worst_commutator:.3e}"
        )

    def check_zero_mean_spin(self) -> Tuple[bool, str]:
        phi = math.pi / 4
        zero_mean = xi_tilde(build(FamilySpec('psi', {'phi': phi})), self.config)
        partner = xi_tilde(build(FamilySpec('psi_prime', {'phi': phi})), self.config)
        undefined = not is_defined(zero_mean.xi_1) and not is_defined(zero_mean.xi_2)
        gap = abs(zero_mean.xi_tilde_1 - partner.xi_tilde_1)
        return undefined and gap <= 1e-9, f"ξ₁ undefined: {undefined}, |Δξ̃₁| {gap:.3e}"

    def run_all(self) -> bool:
        checks = [
            ("collective squeezing sweep", self.check_collective_sweep),
            ("local-unitary invariance", self.check_local_unitary_invariance),
            ("two-qubit pure closed forms", self.check_two_qubit_closed_forms),
            ("separable-state bound", self.check_separable_bound),
            ("optimizer oracle", self.check_optimizer_oracle),
            ("operator-level consistency", self.check_operator_consistency),
            ("zero mean spin handling", self.check_zero_mean_spin),
        ]
        for name, check in checks:
            self.run_check(name, check)
        passed = sum(r.passed for r in self.results)
        self.write(f"{passed}/{len(self.results)} checks passed")
        return passed == len(self.results)
