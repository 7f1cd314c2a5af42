import math

import numpy as np
import pytest
from scipy.stats import chisquare

from dickelift import (
    DickeSpec,
    distribution,
    folded_prob,
    sample_runs,
    yield_report,
)

RUNS = 200_000


def z_score(freq, p, runs):
    return (freq - p) / math.sqrt(p * (1 - p) / runs)


class TestSampleRuns:
    def test_reproducible(self):
        a = sample_runs(5, 0.3, 2000, seed=123)
        b = sample_runs(5, 0.3, 2000, seed=123)
        assert a == b

    def test_seed_changes_stream(self):
        a = sample_runs(5, 0.3, 2000, seed=123)
        b = sample_runs(5, 0.3, 2000, seed=124)
        assert a != b

    def test_run_indices_and_folding_fields(self):
        records = sample_runs(7, 0.4, 500, seed=9)
        for i, rec in enumerate(records):
            assert rec.run_index == i
            assert 0 <= rec.raw_outcome_k <= 7
            if rec.raw_outcome_k in (0, 7):
                assert rec.is_failure and rec.folded_k is None
            else:
                assert rec.folded_k == min(rec.raw_outcome_k, 7 - rec.raw_outcome_k)
                assert 1 <= rec.folded_k <= 3
            assert rec.bitflip_applied == (rec.raw_outcome_k > 7 - rec.raw_outcome_k)

    def test_even_midpoint_not_flipped(self):
        records = sample_runs(4, 0.5, 2000, seed=3)
        mids = [r for r in records if r.raw_outcome_k == 2]
        assert mids and all(not r.bitflip_applied and r.folded_k == 2 for r in mids)

    def test_degenerate_source_all_failures(self):
        records = sample_runs(4, 1.0, 100, seed=0)
        assert all(r.raw_outcome_k == 0 and r.is_failure for r in records)

    def test_w_frequency_within_five_sigma(self):
        records = sample_runs(3, 0.5, RUNS, seed=1)
        w = sum(1 for r in records if r.folded_k == 1) / RUNS
        assert abs(z_score(w, 0.75, RUNS)) < 5

    def test_all_raw_frequencies_within_five_sigma(self):
        n, p00 = 8, 0.2
        law = distribution(n, p00).raw
        records = sample_runs(n, p00, RUNS, seed=7)
        counts = np.bincount([r.raw_outcome_k for r in records], minlength=n + 1)
        for k in range(n + 1):
            if law[k] * RUNS < 25:
                continue  # too rare for a gaussian z test at this size
            assert abs(z_score(counts[k] / RUNS, law[k], RUNS)) < 5, k

    def test_folded_frequencies_within_five_sigma(self):
        n, p00 = 50, 1 / 50
        records = sample_runs(n, p00, RUNS, seed=11)
        freq = sum(1 for r in records if r.folded_k == 1) / RUNS
        p = folded_prob(DickeSpec(n, 1), p00)
        assert abs(z_score(freq, p, RUNS)) < 5

    def test_chi_square_over_outcomes(self):
        n, p00 = 6, 0.37
        law = distribution(n, p00).raw
        records = sample_runs(n, p00, RUNS, seed=21)
        counts = np.bincount([r.raw_outcome_k for r in records], minlength=n + 1)
        _, pvalue = chisquare(counts, law * RUNS)
        assert pvalue > 1e-6

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            sample_runs(3, 0.5, 0, seed=1)
        with pytest.raises(ValueError):
            sample_runs(3, 1.5, 10, seed=1)
        with pytest.raises(ValueError):
            sample_runs(3, 0.5, 10, seed=2**64)


class TestYieldReport:
    def test_three_pair_epr_cost(self):
        records = sample_runs(3, 0.5, RUNS, seed=2)
        report = yield_report(records, 3)
        assert report.pairs_consumed == 3 * RUNS
        assert report.pairs_per_dicke == pytest.approx(4.0, rel=0.01)

    def test_counts_balance(self):
        records = sample_runs(6, 0.3, 5000, seed=5)
        report = yield_report(records, 6)
        assert sum(report.dicke_produced.values()) + report.failures == report.runs
        assert sum(report.empirical_probs.values()) == pytest.approx(1.0, abs=1e-12)

    def test_all_failure_sentinel(self):
        records = sample_runs(2, 1.0, 10, seed=0)
        report = yield_report(records, 2)
        assert report.failures == 10
        assert math.isinf(report.pairs_per_dicke)

    def test_optimal_source_class_rate_tends_to_limit(self):
        # class-1 frequency at the large-n optimal weight approaches e^-1
        from dickelift import asymptotic_prob

        n = 200
        records = sample_runs(n, 1 / n, RUNS, seed=13)
        freq = sum(1 for r in records if r.folded_k == 1) / RUNS
        assert freq == pytest.approx(asymptotic_prob(1), abs=0.01)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            yield_report([], 3)
