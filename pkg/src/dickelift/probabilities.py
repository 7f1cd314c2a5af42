"""Closed-form outcome probabilities for lifting pair sources into Dicke states.

The protocol consumes n identical two-qubit sources amp00|00> + amp11|11>.
One qubit of each pair is measured collectively; the heralded excitation
count k leaves the remote register in the n-qubit Dicke state with k
excitations, and the classes k and n-k are merged by a conditional global
bit flip. Every probability depends on the source only through
p00 = |amp00|^2, and all arithmetic runs in the natural-log domain so that
n of order 10^6 neither overflows nor underflows.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

__all__ = [
    "SourceState",
    "DickeSpec",
    "LogProb",
    "OutcomeDistribution",
    "log_raw_outcome_prob",
    "raw_outcome_prob",
    "log_folded_prob",
    "folded_prob",
    "failure_prob",
    "distribution",
]

_NORM_TOL = 1e-12


def _as_int(value, name: str) -> int:
    try:
        return operator.index(value)
    except TypeError:
        raise TypeError(f"{name} must be an integer, got {value!r}") from None


def _check_p00(p00: float) -> float:
    p00 = float(p00)
    if not 0.0 <= p00 <= 1.0:
        raise ValueError(f"p00 must lie in [0, 1], got {p00!r}")
    return p00


@dataclass(frozen=True)
class SourceState:
    """Pure two-qubit pair source amp00|00> + amp11|11>.

    Amplitudes may carry arbitrary complex phases; all heralding
    probabilities depend only on p00 = |amp00|^2.
    """

    amp00: complex
    amp11: complex

    def __post_init__(self):
        norm = abs(self.amp00) ** 2 + abs(self.amp11) ** 2
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"source amplitudes are not normalized: |.|^2 sums to {norm!r}")

    @property
    def p00(self) -> float:
        """Weight of the |00> component, clipped to [0, 1] against roundoff."""
        return min(max(abs(self.amp00) ** 2, 0.0), 1.0)

    @classmethod
    def from_p00(cls, p00: float) -> "SourceState":
        """Real, non-negative source with the given |00> weight."""
        p00 = _check_p00(p00)
        return cls(math.sqrt(p00), math.sqrt(1.0 - p00))


@dataclass(frozen=True)
class DickeSpec:
    """Target Dicke class: n qubits, k excitations in the canonical range.

    After the conditional bit flip only 1 <= k <= n//2 survive as distinct
    entangled classes; k = 0 is separable and is not a valid target.
    """

    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "n", _as_int(self.n, "n"))
        object.__setattr__(self, "k", _as_int(self.k, "k"))
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not 1 <= self.k <= self.n // 2:
            raise ValueError(
                f"k must satisfy 1 <= k <= n//2 = {self.n // 2}, got k={self.k}"
            )


@dataclass(frozen=True)
class LogProb:
    """A probability stored as its natural logarithm.

    value = -inf is the exact-zero sentinel; finite values satisfy
    exp(value) <= 1.
    """

    value: float

    def __post_init__(self):
        if math.isnan(self.value) or self.value > 0.0:
            raise ValueError(f"not a log-probability: {self.value!r}")

    @classmethod
    def zero(cls) -> "LogProb":
        return cls(float("-inf"))

    @classmethod
    def from_linear(cls, p: float) -> "LogProb":
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], got {p!r}")
        return cls(math.log(p)) if p > 0.0 else cls.zero()

    @property
    def linear(self) -> float:
        return math.exp(self.value)

    @property
    def is_zero(self) -> bool:
        return self.value == float("-inf")


def _log_core(n: int, k: int, p00: float) -> float:
    # assumes 0.5 <= p00 <= 1 and 0 <= k <= n
    if p00 == 1.0:
        return 0.0 if k == 0 else float("-inf")
    lo, hi = (k, n - k) if k <= n - k else (n - k, k)
    log_binom = math.lgamma(n + 1) - math.lgamma(lo + 1) - math.lgamma(hi + 1)
    return min(0.0, log_binom + (n - k) * math.log(p00) + k * math.log1p(-p00))


def log_raw_outcome_prob(n, k, p00) -> LogProb:
    """Natural log of the probability that the herald reads k excitations.

    Equals log of binom(n, k) * p00^(n-k) * (1-p00)^k. Arguments with
    p00 < 1/2 are evaluated through the mirrored pair (n-k, 1-p00), which
    makes the k <-> n-k, p00 <-> 1-p00 symmetry hold bit-for-bit.
    """
    n = _as_int(n, "n")
    k = _as_int(k, "k")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, n] = [0, {n}], got {k}")
    p00 = _check_p00(p00)
    if p00 < 0.5:
        return log_raw_outcome_prob(n, n - k, 1.0 - p00)
    if p00 == 0.5 and k > n - k:
        k = n - k
    return LogProb(_log_core(n, k, p00))


def raw_outcome_prob(n, k, p00) -> float:
    """Probability that the herald reads k excitations out of n pairs."""
    return log_raw_outcome_prob(n, k, p00).linear


def log_folded_prob(spec: DickeSpec, p00) -> LogProb:
    """Natural log of the success probability for the canonical class spec.k."""
    la = log_raw_outcome_prob(spec.n, spec.k, p00).value
    if 2 * spec.k == spec.n:
        return LogProb(la)
    lb = log_raw_outcome_prob(spec.n, spec.n - spec.k, p00).value
    return LogProb(min(0.0, float(np.logaddexp(la, lb))))


def folded_prob(spec: DickeSpec, p00) -> float:
    """Probability of heralding the Dicke class spec.k after the bit-flip merge.

    Sums the raw outcomes k and n-k; for even n and k = n/2 the single
    self-paired outcome is returned unchanged.
    """
    p00 = _check_p00(p00)
    a = raw_outcome_prob(spec.n, spec.k, p00)
    if 2 * spec.k == spec.n:
        return a
    return a + raw_outcome_prob(spec.n, spec.n - spec.k, p00)


def failure_prob(n, p00) -> float:
    """Probability of the two separable outcomes, p00^n + (1-p00)^n."""
    n = _as_int(n, "n")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    p00 = _check_p00(p00)
    return p00**n + (1.0 - p00) ** n


def _log_raw_all_k(n: int, p00: float) -> np.ndarray:
    """Log outcome probabilities for every k = 0..n, same mirroring as the scalar path."""
    if p00 < 0.5:
        return _log_raw_all_k(n, 1.0 - p00)[::-1]
    out = np.full(n + 1, float("-inf"))
    if p00 == 1.0:
        out[0] = 0.0
        return out
    k = np.arange(n + 1)
    lo = np.minimum(k, n - k)
    log_binom = gammaln(n + 1) - gammaln(lo + 1) - gammaln(n - lo + 1)
    out = log_binom + (n - k) * math.log(p00) + k * math.log1p(-p00)
    np.minimum(out, 0.0, out=out)
    return out


@dataclass(frozen=True, eq=False)
class OutcomeDistribution:
    """Herald-outcome law for n pairs at a given source weight.

    raw[k] is the probability of seeing k excitations, k = 0..n.
    folded[j] for j = 1..n//2 is the merged probability raw[j] + raw[n-j]
    (raw[n/2] alone at the midpoint of even n); folded[0] is the failure
    entry raw[0] + raw[n].
    """

    n: int
    raw: np.ndarray
    folded: np.ndarray

    def __post_init__(self):
        if self.raw.shape != (self.n + 1,):
            raise ValueError("raw must have n + 1 entries")
        if np.any(self.raw < 0.0) or np.any(self.raw > 1.0):
            raise ValueError("raw entries must lie in [0, 1]")
        if abs(self.raw.sum() - 1.0) > _NORM_TOL:
            raise ValueError(f"raw probabilities sum to {self.raw.sum()!r}, not 1")

    @property
    def failure(self) -> float:
        return float(self.folded[0])


def distribution(n, p00) -> OutcomeDistribution:
    """Full raw and folded outcome distribution for n pairs."""
    n = _as_int(n, "n")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    p00 = _check_p00(p00)
    raw = np.exp(_log_raw_all_k(n, p00))
    half = n // 2
    folded = raw[: half + 1] + raw[::-1][: half + 1]
    if n % 2 == 0:
        folded[half] = raw[half]
    return OutcomeDistribution(n=n, raw=raw, folded=folded)
