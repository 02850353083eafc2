import math

import numpy as np
import pytest

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.operators.tests.factories import (
    PotentialSpecFactory,
    TaskDistributionFactory,
)

from ..commutant import is_trivial_centralizer, stacked_centralizer_report
from ..estimation import (
    crossing_n,
    draw_sample_set,
    estimate_diversity_probability,
    isotonic_nondecreasing,
)
from ..models import DiversityEstimate


def fd2_bound(M, p, N):
    c_v = 1 - 2 * p**2 * (1 - p) ** 2
    return max(0.0, 1 - M * (M - 1) * c_v ** (N // 2))


class TestDrawSampleSet:
    def test_sets_are_nested(self):
        dist = TaskDistributionFactory()
        small = draw_sample_set(dist, 3, RngStream(4))
        large = draw_sample_set(dist, 5, RngStream(4))

        for a, b in zip(small, large[:3]):
            np.testing.assert_array_equal(a, b)


class TestEstimateDiversityProbability:
    def test_deterministic_potential_is_never_diverse(self):
        dist = TaskDistributionFactory(potential=PotentialSpecFactory(deterministic=True))
        for N in (1, 5, 20):
            estimate = estimate_diversity_probability(
                dist, N, trials=5, augment_with_k=False, rng=RngStream(1)
            )
            assert estimate.successes == 0
            assert estimate.p_hat == 0.0

    @pytest.mark.parametrize("N", [1, 2, 5])
    def test_deterministic_samples_keep_the_full_commutant(self, N):
        dist = TaskDistributionFactory(potential=PotentialSpecFactory(deterministic=True))
        samples = draw_sample_set(dist, N, RngStream(1).child(0))

        assert is_trivial_centralizer(samples).commutant_dim == dist.d

    @pytest.mark.parametrize(
        ("M", "p", "N"), [(3, 0.5, 10), (3, 0.2, 20), (5, 0.2, 30)]
    )
    def test_successes_match_the_stacked_oracle(self, M, p, N):
        dist = TaskDistributionFactory(M=M, potential=PotentialSpecFactory(p=p))
        rng = RngStream(29)
        estimate = estimate_diversity_probability(dist, N, 40, False, rng, threads=2)

        expected = sum(
            stacked_centralizer_report(
                draw_sample_set(dist, N, rng.child(trial))
            ).trivial
            for trial in range(40)
        )
        assert estimate.successes == expected

    def test_deterministic_potential_with_augmentation(self):
        dist = TaskDistributionFactory(potential=PotentialSpecFactory(deterministic=True))
        estimate = estimate_diversity_probability(
            dist, 10, trials=3, augment_with_k=True, rng=RngStream(1)
        )
        assert estimate.p_hat == 0.0

    def test_single_trial(self):
        estimate = estimate_diversity_probability(
            TaskDistributionFactory(), 4, trials=1, augment_with_k=False, rng=RngStream(2)
        )
        assert estimate.successes in (0, 1)
        assert estimate.trials == 1

    def test_reproducible_across_thread_counts(self):
        dist = TaskDistributionFactory()
        serial = estimate_diversity_probability(
            dist, 6, 40, False, RngStream(8), threads=1
        )
        parallel = estimate_diversity_probability(
            dist, 6, 40, False, RngStream(8), threads=4
        )
        assert serial == parallel

    def test_nondecreasing_in_n(self):
        dist = TaskDistributionFactory()
        estimates = [
            estimate_diversity_probability(dist, N, 30, False, RngStream(5))
            for N in (1, 2, 4, 8, 16)
        ]
        p_hats = [estimate.p_hat for estimate in estimates]

        assert p_hats[0] == 0.0
        assert p_hats == sorted(p_hats)

    def test_at_least_the_fd_bound(self):
        M, p = 5, 0.5
        dist = TaskDistributionFactory(M=M, potential=PotentialSpecFactory(p=p))
        for N in (2, 10, 50):
            estimate = estimate_diversity_probability(dist, N, 60, False, RngStream(13))
            assert estimate.p_hat >= fd2_bound(M, p, N) - 3 * estimate.stderr

    @pytest.mark.parametrize(("N", "trials"), [(0, 5), (3, 0)])
    def test_preconditions(self, N, trials):
        with pytest.raises(DomainError):
            estimate_diversity_probability(
                TaskDistributionFactory(), N, trials, False, RngStream(1)
            )


class TestDiversityEstimate:
    def test_standard_error(self):
        estimate = DiversityEstimate(N=2, trials=100, successes=25)

        assert estimate.p_hat == 0.25
        assert estimate.stderr == pytest.approx(math.sqrt(0.25 * 0.75 / 100))

    def test_successes_bounded_by_trials(self):
        with pytest.raises(ValueError):
            DiversityEstimate(N=2, trials=3, successes=4)


class TestIsotonicNondecreasing:
    def test_already_sorted(self):
        np.testing.assert_allclose(isotonic_nondecreasing([0.0, 0.5, 1.0]), [0.0, 0.5, 1.0])

    def test_pools_violators(self):
        np.testing.assert_allclose(
            isotonic_nondecreasing([0.4, 0.2, 0.9, 0.8]), [0.3, 0.3, 0.85, 0.85]
        )

    def test_result_is_nondecreasing(self):
        values = np.random.default_rng(3).random(25)
        smoothed = isotonic_nondecreasing(values)
        assert np.all(np.diff(smoothed) >= -1e-15)

    def test_empty(self):
        assert isotonic_nondecreasing([]).size == 0


class TestCrossingN:
    def estimates(self, successes):
        return [
            DiversityEstimate(N=N, trials=10, successes=s)
            for N, s in zip((1, 2, 4, 8), successes)
        ]

    def test_first_crossing(self):
        assert crossing_n(self.estimates([0, 5, 9, 10]), 0.9) == 4

    def test_order_of_input_does_not_matter(self):
        assert crossing_n(reversed(self.estimates([0, 5, 9, 10])), 0.9) == 4

    def test_smoothing_delays_an_isolated_spike(self):
        assert crossing_n(self.estimates([0, 10, 6, 10]), 0.9) == 8

    def test_never_crossed(self):
        assert crossing_n(self.estimates([0, 1, 2, 3]), 0.9) is None
