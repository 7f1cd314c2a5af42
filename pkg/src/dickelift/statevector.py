"""Exact statevector simulation of the lifting protocol for small n.

This is the ground truth the closed-form engine is checked against, so it
deliberately avoids binomial and power formulas: the global state is built
by repeated tensor products, herald outcomes are Hamming weights obtained
by bit counting, and reference Dicke states are normalized by enumeration.

The measured register is perfectly correlated with the remote one, so a
single array of 2^n amplitudes indexed by the remote bitstring represents
the full pre-measurement state. Index bit conventions: site 0 is the most
significant bit of the integer index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .probabilities import SourceState, _as_int

__all__ = [
    "ORACLE_MAX_QUBITS",
    "CorrelatedState",
    "ConditionalState",
    "build_state",
    "measure_fock",
    "dicke_state_amplitudes",
    "dicke_fidelity",
    "locc_fold",
    "single_qubit_density",
    "reduced_single_qubit",
]

# 2^20 complex amplitudes (16 MB); larger n is served by the closed form.
ORACLE_MAX_QUBITS = 20

_NORM_TOL = 1e-12


def _hamming_weights(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint32))


@dataclass(frozen=True, eq=False)
class CorrelatedState:
    """Pre-measurement state of n pairs, indexed by the remote bitstring."""

    n: int
    amps: np.ndarray

    def __post_init__(self):
        if self.amps.shape != (1 << self.n,):
            raise ValueError("amps must have 2^n entries")
        norm = float(np.sum(np.abs(self.amps) ** 2))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state norm^2 is {norm!r}, not 1")


@dataclass(frozen=True, eq=False)
class ConditionalState:
    """Remote n-qubit state conditioned on herald outcome k.

    Amplitudes are supported on bitstrings of Hamming weight outcome_k and
    renormalized; probability is the weight of the branch. A branch of
    probability zero carries an all-zero amplitude array.
    """

    n: int
    outcome_k: int
    amps: np.ndarray
    probability: float

    def __post_init__(self):
        if self.amps.shape != (1 << self.n,):
            raise ValueError("amps must have 2^n entries")
        if not 0 <= self.outcome_k <= self.n:
            raise ValueError(f"outcome_k must lie in [0, n], got {self.outcome_k}")
        if not 0.0 <= self.probability <= 1.0 + _NORM_TOL:
            raise ValueError(f"probability {self.probability!r} outside [0, 1]")
        off_support = _hamming_weights(self.n) != self.outcome_k
        if np.any(self.amps[off_support] != 0):
            raise ValueError("amplitudes leak outside the fixed-weight subspace")
        if self.probability > 0.0:
            norm = float(np.sum(np.abs(self.amps) ** 2))
            if abs(norm - 1.0) > _NORM_TOL:
                raise ValueError(f"conditional state norm^2 is {norm!r}, not 1")


def build_state(source: SourceState, n) -> CorrelatedState:
    """Tensor n identical pair sources into the correlated global state.

    The amplitude of bitstring j is the product over sites of amp00 or
    amp11; the product construction keeps this path independent of any
    closed-form coefficient formula.
    """
    n = _as_int(n, "n")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n > ORACLE_MAX_QUBITS:
        raise ValueError(
            f"n = {n} exceeds the statevector capacity of {ORACLE_MAX_QUBITS} qubits"
        )
    pair = np.array([source.amp00, source.amp11], dtype=complex)
    amps = pair
    for _ in range(n - 1):
        amps = np.kron(amps, pair)
    amps = amps / math.sqrt(float(np.sum(np.abs(amps) ** 2)))
    return CorrelatedState(n=n, amps=amps)


def measure_fock(state: CorrelatedState) -> list[ConditionalState]:
    """Resolve the herald outcome: project onto each Hamming-weight sector.

    Returns n + 1 conditional states; entry k has probability equal to the
    squared norm of the weight-k slice, and the probabilities sum to 1.
    """
    weights = _hamming_weights(state.n)
    branches = []
    for k in range(state.n + 1):
        sliced = np.where(weights == k, state.amps, 0.0)
        prob = float(np.sum(np.abs(sliced) ** 2))
        if prob > 0.0:
            sliced = sliced / math.sqrt(prob)
        branches.append(
            ConditionalState(n=state.n, outcome_k=k, amps=sliced, probability=prob)
        )
    return branches


def dicke_state_amplitudes(n: int, k: int) -> np.ndarray:
    """Reference Dicke state: uniform amplitude on every weight-k bitstring."""
    support = _hamming_weights(n) == k
    count = int(support.sum())
    return support.astype(complex) / math.sqrt(count)


def dicke_fidelity(cond: ConditionalState) -> float:
    """Overlap squared between a conditional state and the ideal Dicke state."""
    if cond.outcome_k in (0, cond.n):
        raise ValueError("outcome 0 or n is a separable branch, not a Dicke state")
    ref = dicke_state_amplitudes(cond.n, cond.outcome_k)
    return float(abs(np.vdot(ref, cond.amps)) ** 2)


def locc_fold(cond: ConditionalState) -> ConditionalState:
    """Apply the global bit flip: amplitude at j moves to its complement.

    Weight n-k support becomes weight k; Dicke fidelity is preserved.
    """
    # complement of index j is (2^n - 1) - j, so flipping reverses the array
    flipped = cond.amps[::-1].copy()
    return ConditionalState(
        n=cond.n,
        outcome_k=cond.n - cond.outcome_k,
        amps=flipped,
        probability=cond.probability,
    )


def single_qubit_density(amps: np.ndarray, site: int) -> np.ndarray:
    """Partial trace of a pure n-qubit state down to one site's 2x2 matrix."""
    n = int(round(math.log2(amps.size)))
    if 1 << n != amps.size:
        raise ValueError("amplitude array length must be a power of two")
    if not 0 <= site < n:
        raise ValueError(f"site must lie in [0, n), got {site}")
    psi = amps.reshape((2,) * n)
    others = tuple(ax for ax in range(n) if ax != site)
    return np.tensordot(psi, psi.conj(), axes=(others, others))


def reduced_single_qubit(cond: ConditionalState, site) -> np.ndarray:
    """Reduced density matrix of one qubit of a conditional state."""
    site = _as_int(site, "site")
    return single_qubit_density(cond.amps, site)
