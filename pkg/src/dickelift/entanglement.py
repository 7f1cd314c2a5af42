"""Bipartite entanglement of the pair source and of single Dicke qubits.

All states here are globally pure, so both supported measures reduce to
functions of one 2x2 reduced density matrix: the base-2 von Neumann
entropy (ebits) and the 2-tangle, i.e. concurrence squared, which for a
pure global state equals 4 det(rho) of the single-qubit reduction.

A monotonicity argument bounds the entanglement a heralded Dicke qubit
can hold against the rest of its register: it cannot exceed the source
entanglement divided by the success probability, which forces the
qubit-vs-rest entanglement of large Dicke states to vanish while the
GHZ value stays pinned at 1 ebit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .optimize import Regime, optimize_source, asymptotic_expansion, critical_threshold
from .probabilities import DickeSpec, SourceState, _as_int

__all__ = [
    "BipartiteMeasure",
    "binary_entropy",
    "von_neumann_entropy",
    "two_tangle_of_density",
    "source_entanglement",
    "dicke_single_qubit_entanglement",
    "ghz_single_qubit_entanglement",
    "LoccBoundReport",
    "check_locc_bound",
    "tangle_decay_bound",
]


class BipartiteMeasure(Enum):
    VON_NEUMANN_ENTROPY = "entropy"
    TWO_TANGLE = "tangle"


def binary_entropy(p: float) -> float:
    """H2(p) in bits, with the 0 log 0 = 0 limit at the endpoints."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Base-2 entropy of a density matrix (ebits for a qubit reduction)."""
    evals = np.linalg.eigvalsh(rho)
    evals = evals[evals > 0.0]
    return float(-np.sum(evals * np.log2(evals)))


def two_tangle_of_density(rho: np.ndarray) -> float:
    """2-tangle of a qubit reduction of a pure state: 4 det(rho)."""
    return float(4.0 * np.linalg.det(rho).real)


def _qubit_measure(p: float, kind: BipartiteMeasure) -> float:
    # entanglement of a pure state whose qubit reduction is diag(p, 1-p)
    if kind is BipartiteMeasure.VON_NEUMANN_ENTROPY:
        return binary_entropy(p)
    if kind is BipartiteMeasure.TWO_TANGLE:
        return 4.0 * p * (1.0 - p)
    raise TypeError(f"unknown measure {kind!r}")


def source_entanglement(source: SourceState, kind: BipartiteMeasure) -> float:
    """Entanglement of one pair: H2(p00) in ebits, or the 2-tangle 4 p00 (1-p00)."""
    return _qubit_measure(source.p00, kind)


def dicke_single_qubit_entanglement(spec: DickeSpec, kind: BipartiteMeasure) -> float:
    """One Dicke qubit against the rest: measure of the reduction diag(1-k/n, k/n)."""
    return _qubit_measure(spec.k / spec.n, kind)


def ghz_single_qubit_entanglement(n) -> float:
    """One GHZ qubit against the rest: exactly 1 ebit for every n."""
    n = _as_int(n, "n")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return 1.0


@dataclass(frozen=True)
class LoccBoundReport:
    """Evaluation of the source-vs-heralded entanglement inequality.

    lhs is the source entanglement at the optimal weight, rhs the success
    probability times the single-Dicke-qubit entanglement; a monotone
    measure must satisfy lhs > rhs.
    """

    n: int
    k: int
    kind: BipartiteMeasure
    p00_opt: float
    p_opt: float
    lhs: float
    dicke_value: float
    rhs: float
    holds: bool


def check_locc_bound(spec: DickeSpec, kind: BipartiteMeasure) -> LoccBoundReport:
    """Verify source entanglement > success probability x Dicke-qubit entanglement.

    Evaluated at the exact optimizer weight, in the supercritical regime
    where the optimal source is the relevant resource.
    """
    point = optimize_source(spec)
    if point.regime is not Regime.SUPERCRITICAL:
        raise ValueError(
            f"n={spec.n}, k={spec.k} is {point.regime.value}; the bound is "
            "evaluated in the supercritical regime"
        )
    lhs = _qubit_measure(point.p00_opt, kind)
    dicke_value = dicke_single_qubit_entanglement(spec, kind)
    rhs = point.p_opt * dicke_value
    return LoccBoundReport(
        n=spec.n,
        k=spec.k,
        kind=kind,
        p00_opt=point.p00_opt,
        p_opt=point.p_opt,
        lhs=lhs,
        dicke_value=dicke_value,
        rhs=rhs,
        holds=lhs > rhs,
    )


def tangle_decay_bound(spec: DickeSpec) -> tuple[float, float]:
    """(bound, actual) for the qubit-vs-rest 2-tangle of a Dicke state.

    bound = 4k / (P n) with P the first-order success probability; actual
    is the exact 4 (k/n)(1 - k/n). The actual value stays below the bound
    throughout the supercritical regime, decaying as 1/n.
    """
    thr = critical_threshold(spec.k)
    if spec.n <= thr.eta_c:
        raise ValueError(
            f"n={spec.n} is not above the threshold eta_c={thr.eta_c} for k={spec.k}"
        )
    bound = 4.0 * spec.k / (asymptotic_expansion(spec) * spec.n)
    actual = 4.0 * (spec.k / spec.n) * (1.0 - spec.k / spec.n)
    return bound, actual
