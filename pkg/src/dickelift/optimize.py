"""Optimal source weight for each Dicke class and its critical behaviour.

The success probability of class (n, k), viewed as a function of the
source weight p00, keeps a single maximum at 1/2 for small n and splits
into two mirror maxima once n crosses eta_c(k) = 2k + 1/2 + sqrt(2k + 1/4).
This module locates the maxima, classifies the regime, and evaluates the
large-n limits: optimal weight k/n and limiting probability k^k e^-k / k!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .probabilities import DickeSpec, SourceState, _as_int, folded_prob

__all__ = [
    "Regime",
    "CriticalThreshold",
    "BifurcationPoint",
    "critical_threshold",
    "optimize_source",
    "bifurcation_diagram",
    "asymptotic_prob",
    "asymptotic_expansion",
    "asymptotic_source",
]

_A_EPS = 1e-15  # open-interval guard for the line search
_A_TOL = 1e-12  # required accuracy of the reported optimum
_FD_STEP = 5e-5
_FD_BAND = 1e-6  # |d2P| below this counts as flat


class Regime(str, Enum):
    SUBCRITICAL = "subcritical"
    CRITICAL = "critical"
    SUPERCRITICAL = "supercritical"


@dataclass(frozen=True)
class CriticalThreshold:
    """Bifurcation threshold for k excitations.

    eta_c = 2k + 1/2 + sqrt(2k + 1/4) and n_c is its ceiling. eta_c is an
    integer exactly when 8k + 1 is a perfect square (k = 1, 3, 6, 10, ...),
    which eta_is_integer records without floating-point comparisons.
    """

    k: int
    eta_c: float
    n_c: int
    eta_is_integer: bool


def critical_threshold(k) -> CriticalThreshold:
    """Threshold above which the optimal source weight leaves 1/2."""
    k = _as_int(k, "k")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    root = math.isqrt(8 * k + 1)
    exact = root * root == 8 * k + 1
    eta_c = 2 * k + 0.5 + math.sqrt(2 * k + 0.25)
    if exact:
        n_c = 2 * k + (1 + root) // 2
    else:
        n_c = math.ceil(eta_c)
    return CriticalThreshold(k=k, eta_c=eta_c, n_c=n_c, eta_is_integer=exact)


@dataclass(frozen=True)
class BifurcationPoint:
    """Optimal source weight(s) for one (n, k).

    branches holds (p00_opt, p_opt) pairs: a single entry at 1/2 in the
    sub- and critical regimes, the mirror pair (lower weight first) in the
    supercritical regime.
    """

    n: int
    k: int
    regime: Regime
    branches: tuple[tuple[float, float], ...]

    @property
    def p00_opt(self) -> float:
        """Lower-branch optimal weight."""
        return self.branches[0][0]

    @property
    def p_opt(self) -> float:
        return self.branches[0][1]


def _classify(spec: DickeSpec) -> Regime:
    thr = critical_threshold(spec.k)
    if thr.eta_is_integer:
        if spec.n < thr.n_c:
            return Regime.SUBCRITICAL
        if spec.n == thr.n_c:
            return Regime.CRITICAL
        return Regime.SUPERCRITICAL
    # non-integer eta_c is irrational, so n never lands on it
    return Regime.SUBCRITICAL if spec.n < thr.eta_c else Regime.SUPERCRITICAL


def _second_derivative_at_half(spec: DickeSpec, h: float = _FD_STEP) -> float:
    center = folded_prob(spec, 0.5)
    return (folded_prob(spec, 0.5 + h) - 2.0 * center + folded_prob(spec, 0.5 - h)) / h**2


def _derivative_sign(spec: DickeSpec, p00: float) -> float:
    """Sign of d(folded_prob)/d(p00), from the log-domain closed form.

    The four monomial terms are combined after factoring out the largest
    log magnitude, so the sign survives even when every term underflows.
    """
    n, k = spec.n, spec.k
    a = math.log(p00)
    b = math.log1p(-p00)
    if 2 * k == n:
        # binom * k * p00^(k-1) (1-p00)^(k-1) ((1-p00) - p00): sign of 1 - 2 p00
        return math.copysign(1.0, 1.0 - 2.0 * p00) if p00 != 0.5 else 0.0
    terms = [
        (1.0, math.log(n - k) + (n - k - 1) * a + k * b),
        (-1.0, math.log(k) + (n - k) * a + (k - 1) * b),
        (1.0, math.log(k) + (k - 1) * a + (n - k) * b),
        (-1.0, math.log(n - k) + k * a + (n - k - 1) * b),
    ]
    top = max(log for _, log in terms)
    if top == float("-inf"):
        return 0.0
    s = sum(sign * math.exp(log - top) for sign, log in terms)
    return math.copysign(1.0, s) if s != 0.0 else 0.0


def _golden_section_max(spec: DickeSpec, lo: float, hi: float, tol: float) -> float:
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1 = folded_prob(spec, x1)
    f2 = folded_prob(spec, x2)
    while hi - lo > tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = folded_prob(spec, x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = folded_prob(spec, x1)
    return 0.5 * (lo + hi)


def _refine_by_derivative(spec: DickeSpec, x: float) -> float:
    """Bisect the closed-form derivative to pin the maximum to _A_TOL."""
    width = 1e-8
    lo = hi = None
    while width < 0.25:
        cand_lo = max(_A_EPS, x - width)
        cand_hi = min(0.5 - _A_EPS, x + width)
        s_lo = _derivative_sign(spec, cand_lo)
        s_hi = _derivative_sign(spec, cand_hi)
        if s_lo == 0.0:
            return cand_lo
        if s_hi == 0.0:
            return cand_hi
        if s_lo > 0.0 > s_hi:
            lo, hi = cand_lo, cand_hi
            break
        width *= 4.0
    if lo is None:
        return x
    while hi - lo > _A_TOL:
        mid = 0.5 * (lo + hi)
        s = _derivative_sign(spec, mid)
        if s == 0.0:
            return mid
        if s > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def optimize_source(spec: DickeSpec) -> BifurcationPoint:
    """Maximize the class-(n, k) success probability over the source weight.

    Sub- and critical regimes report the single maximum at 1/2; the
    supercritical regime locates the lower-branch maximum on (0, 1/2) by
    golden-section search refined with derivative bisection and emits the
    mirror branch explicitly. The regime label is cross-checked against
    the finite-difference curvature at 1/2.
    """
    regime = _classify(spec)
    if regime is Regime.SUPERCRITICAL:
        x = _golden_section_max(spec, _A_EPS, 0.5 - _A_EPS, 1e-10)
        x = _refine_by_derivative(spec, x)
        p_low = folded_prob(spec, x)
        mirror = 1.0 - x
        branches = ((x, p_low), (mirror, folded_prob(spec, mirror)))
    else:
        branches = ((0.5, folded_prob(spec, 0.5)),)

    d2 = _second_derivative_at_half(spec)
    consistent = {
        Regime.SUBCRITICAL: d2 < _FD_BAND,
        Regime.CRITICAL: abs(d2) < _FD_BAND,
        Regime.SUPERCRITICAL: d2 > -_FD_BAND,
    }[regime]
    if not consistent:
        raise RuntimeError(
            f"regime {regime.value} disagrees with curvature {d2!r} at p00 = 1/2 "
            f"for n={spec.n}, k={spec.k}"
        )
    return BifurcationPoint(n=spec.n, k=spec.k, regime=regime, branches=branches)


def bifurcation_diagram(k, n_min, n_max) -> list[BifurcationPoint]:
    """Optimal-weight branches for every n in [n_min, n_max]."""
    k = _as_int(k, "k")
    n_min = _as_int(n_min, "n_min")
    n_max = _as_int(n_max, "n_max")
    if n_min < 2 * k:
        raise ValueError(f"n_min must be at least 2k = {2 * k}, got {n_min}")
    if n_max < n_min:
        raise ValueError(f"empty range: n_max = {n_max} < n_min = {n_min}")
    return [optimize_source(DickeSpec(n, k)) for n in range(n_min, n_max + 1)]


def asymptotic_prob(k) -> float:
    """Limiting success probability k^k e^-k / k! of the optimal source."""
    k = _as_int(k, "k")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return math.exp(k * math.log(k) - k - math.lgamma(k + 1))


def asymptotic_expansion(spec: DickeSpec) -> float:
    """First-order large-n success probability: limit times (1 + k/(2n))."""
    return asymptotic_prob(spec.k) * (1.0 + spec.k / (2.0 * spec.n))


def asymptotic_source(spec: DickeSpec) -> SourceState:
    """Lower-branch large-n optimal source, weight k/n (mirror: swap amplitudes)."""
    if spec.n <= spec.k:
        raise ValueError(f"need n > k, got n={spec.n}, k={spec.k}")
    return SourceState.from_p00(spec.k / spec.n)
