"""Seeded Monte Carlo runs of the heralded protocol and yield accounting.

Each run consumes n pairs, draws a herald outcome from the closed-form
law, and records the folding bookkeeping: the canonical class is
min(k, n-k), a collective bit flip is logged whenever k > n-k, and the
separable outcomes 0 and n are failures. The generator is the
counter-based Philox keyed by the caller's seed, so identical seeds give
identical record lists and run-index ranges can be replayed independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .probabilities import _as_int, _check_p00, distribution

__all__ = ["RunRecord", "YieldReport", "sample_runs", "yield_report"]


@dataclass(frozen=True, slots=True)
class RunRecord:
    """One protocol run: herald outcome and LOCC folding bookkeeping."""

    run_index: int
    raw_outcome_k: int
    folded_k: int | None  # None flags the separable failure outcomes
    bitflip_applied: bool

    @property
    def is_failure(self) -> bool:
        return self.folded_k is None


@dataclass(frozen=True)
class YieldReport:
    """Aggregate accounting of a batch of runs.

    pairs_per_dicke is the resource cost of one heralded Dicke state of
    any class; it is inf when every run failed.
    """

    runs: int
    pairs_consumed: int
    dicke_produced: dict[int, int]
    failures: int
    empirical_probs: dict[int, float]
    pairs_per_dicke: float


def sample_runs(n, p00, runs, seed) -> list[RunRecord]:
    """Draw independent protocol runs from the closed-form outcome law.

    Outcomes are sampled by inverse CDF over the n + 1 herald values; the
    uniform variate of run i is position i of the Philox stream keyed by
    seed, which makes the record list a pure function of (n, p00, runs, seed).
    """
    n = _as_int(n, "n")
    runs = _as_int(runs, "runs")
    seed = _as_int(seed, "seed")
    if runs < 1:
        raise ValueError(f"runs must be at least 1, got {runs}")
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    p00 = _check_p00(p00)

    cdf = np.cumsum(distribution(n, p00).raw)
    cdf[-1] = 1.0  # guard the top bin against roundoff
    rng = np.random.Generator(np.random.Philox(key=seed))
    u = rng.random(runs)
    outcomes = np.searchsorted(cdf, u, side="right")

    records = []
    for i, k in enumerate(outcomes.tolist()):
        canonical = min(k, n - k)
        records.append(
            RunRecord(
                run_index=i,
                raw_outcome_k=k,
                folded_k=canonical if canonical >= 1 else None,
                bitflip_applied=k > n - k,
            )
        )
    return records


def yield_report(records: list[RunRecord], n) -> YieldReport:
    """Summarize a batch of runs into counts, frequencies, and pair cost."""
    n = _as_int(n, "n")
    if not records:
        raise ValueError("records must be nonempty")
    runs = len(records)
    raw_counts = dict.fromkeys(range(n + 1), 0)
    dicke_produced: dict[int, int] = {}
    failures = 0
    for rec in records:
        raw_counts[rec.raw_outcome_k] += 1
        if rec.is_failure:
            failures += 1
        else:
            dicke_produced[rec.folded_k] = dicke_produced.get(rec.folded_k, 0) + 1
    total_dicke = runs - failures
    pairs_consumed = n * runs
    return YieldReport(
        runs=runs,
        pairs_consumed=pairs_consumed,
        dicke_produced=dict(sorted(dicke_produced.items())),
        failures=failures,
        empirical_probs={k: c / runs for k, c in raw_counts.items()},
        pairs_per_dicke=pairs_consumed / total_dicke if total_dicke else math.inf,
    )
