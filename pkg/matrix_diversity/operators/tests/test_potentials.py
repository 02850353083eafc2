import math

import numpy as np
import pytest
from scipy.integrate import quad

from matrix_diversity.core.exceptions import DomainError, UnsupportedCombinationError
from matrix_diversity.core.rng import RngStream

from ..potentials import (
    fem_potential_matrix,
    lognormal_field_eval,
    sample_fd_potential,
    sample_fem_values,
)
from .factories import PotentialSpecFactory, TaskDistributionFactory


def hat(i, M):
    h = 1.0 / (M - 1)
    return lambda x: max(0.0, 1.0 - abs(x - i * h) / h)


def potential_by_quadrature(values, M):
    h = 1.0 / (M - 1)
    hats = [hat(i, M) for i in range(M)]
    result = np.zeros((M, M))
    for i in range(M):
        for j in range(max(0, i - 1), min(M, i + 2)):
            for cell, v in enumerate(values):
                left, right = cell * h, (cell + 1) * h
                integrand = lambda x: hats[i](x) * hats[j](x) * v  # noqa: E731
                result[i, j] += quad(integrand, left, right, epsabs=1e-14)[0]
    return result


class TestLognormalFieldEval:
    def test_zero_draws(self):
        assert lognormal_field_eval(0.37, 1.5, 2.0, 4, np.zeros(4)) == 1.0

    @pytest.mark.parametrize("x", [0.0, 1.0])
    def test_boundary_values(self, x):
        draws = [1.3, -0.4, 2.2]
        assert lognormal_field_eval(x, 0.0, 1.0, 3, draws) == pytest.approx(
            1.0, abs=1e-12
        )

    def test_single_mode(self):
        result = lognormal_field_eval(0.5, 0.0, 2.0, 1, [1.0])
        assert result == pytest.approx(math.exp(1 / math.pi**2), rel=1e-14)

    def test_strictly_positive(self):
        draws = np.random.default_rng(5).normal(size=20) * 10
        for x in np.linspace(0, 1, 11):
            assert lognormal_field_eval(x, 0.0, 0.5, 20, draws) > 0

    def test_too_few_draws(self):
        with pytest.raises(DomainError):
            lognormal_field_eval(0.5, 0.0, 1.0, 3, [1.0])

    def test_point_outside_domain(self):
        with pytest.raises(DomainError):
            lognormal_field_eval(1.5, 0.0, 1.0, 1, [1.0])


class TestSampleFdPotential:
    def test_same_stream_same_matrix(self):
        dist = TaskDistributionFactory()
        np.testing.assert_array_equal(
            sample_fd_potential(dist, RngStream(9)),
            sample_fd_potential(dist, RngStream(9)),
        )

    def test_different_streams_differ(self):
        dist = TaskDistributionFactory(M=20)
        first = sample_fd_potential(dist, RngStream(9, stream=0))
        second = sample_fd_potential(dist, RngStream(9, stream=1))
        assert not np.array_equal(first, second)

    def test_one_dimensional_values(self):
        result = sample_fd_potential(TaskDistributionFactory(M=8), RngStream(3))

        assert set(np.diag(result)) <= {1.0, 2.0}
        np.testing.assert_array_equal(result - np.diag(np.diag(result)), 0.0)

    def test_two_dimensional_products(self):
        dist = TaskDistributionFactory(M=2, D=2)
        for trial in range(10):
            result = sample_fd_potential(dist, RngStream(3).child(trial))
            assert result.shape == (4, 4)
            assert set(np.diag(result)) <= {1.0, 2.0, 4.0}
            np.testing.assert_array_equal(result - np.diag(np.diag(result)), 0.0)

    def test_two_dimensional_products_are_rank_one(self):
        diagonal = np.diag(
            sample_fd_potential(TaskDistributionFactory(M=3, D=2), RngStream(4))
        )
        assert np.linalg.matrix_rank(diagonal.reshape(3, 3)) == 1

    def test_separable_sum_values(self):
        dist = TaskDistributionFactory(
            M=2, D=2, potential=PotentialSpecFactory(separable=True)
        )
        result = sample_fd_potential(dist, RngStream(11))
        # two products of values in {1, 2}
        assert set(np.diag(result)) <= {2.0, 3.0, 4.0, 5.0, 6.0, 8.0}

    def test_bernoulli_frequency(self):
        p = 0.3
        dist = TaskDistributionFactory(M=5, potential=PotentialSpecFactory(p=p))
        stream = RngStream(20240611)
        entries = np.concatenate(
            [np.diag(sample_fd_potential(dist, stream.child(i))) for i in range(2000)]
        )

        assert entries.size == 10_000
        frequency = np.mean(entries == 1.0)
        stderr = math.sqrt(p * (1 - p) / entries.size)
        assert abs(frequency - p) <= 3 * stderr

    def test_lognormal_field(self):
        dist = TaskDistributionFactory(M=6, potential=PotentialSpecFactory(lognormal=True))
        result = sample_fd_potential(dist, RngStream(2))

        assert np.all(np.diag(result) > 0)
        assert np.diag(result)[-1] == pytest.approx(1.0, abs=1e-12)

    def test_lognormal_field_needs_one_dimension(self):
        dist = TaskDistributionFactory(
            M=3, D=2, potential=PotentialSpecFactory(lognormal=True)
        )
        with pytest.raises(UnsupportedCombinationError):
            sample_fd_potential(dist, RngStream(2))

    def test_rejects_fem(self):
        with pytest.raises(DomainError):
            sample_fd_potential(TaskDistributionFactory(fem=True), RngStream(1))


class TestSampleFemValues:
    def test_one_value_per_cell(self):
        values = sample_fem_values(TaskDistributionFactory(fem=True, M=7), RngStream(1))

        assert values.shape == (6,)
        assert set(values) <= {1.0, 2.0}

    def test_lognormal_midpoints(self):
        dist = TaskDistributionFactory(
            fem=True, M=4, potential=PotentialSpecFactory(lognormal=True)
        )
        values = sample_fem_values(dist, RngStream(5))

        assert values.shape == (3,)
        assert np.all(values > 0)


class TestFemPotentialMatrix:
    def test_printed_all_ones(self):
        expected = np.array(
            [
                [2.0, 1.0, 0.0, 0.0],
                [1.0, 8.0, 1.0, 0.0],
                [0.0, 1.0, 8.0, 1.0],
                [0.0, 0.0, 1.0, 2.0],
            ]
        )
        np.testing.assert_allclose(
            fem_potential_matrix([1.0, 1.0, 1.0], 4, convention="printed"),
            expected / 18,
            rtol=1e-15,
        )

    def test_printed_first_cell_only(self):
        result = fem_potential_matrix([1.0, 0.0, 0.0], 4, convention="printed")

        np.testing.assert_allclose(
            result[:2, :2], np.array([[2.0, 1.0], [1.0, 4.0]]) / 18, rtol=1e-15
        )
        np.testing.assert_array_equal(result[2:, :], 0.0)
        np.testing.assert_array_equal(result[:, 2:], 0.0)

    @pytest.mark.parametrize("convention", ["galerkin", "printed"])
    def test_zero_potential(self, convention):
        np.testing.assert_array_equal(
            fem_potential_matrix(np.zeros(4), 5, convention), np.zeros((5, 5))
        )

    def test_galerkin_interior_diagonal(self):
        result = fem_potential_matrix([1.0, 1.0, 1.0], 4)
        np.testing.assert_allclose(np.diag(result), np.array([2, 4, 4, 2]) / 18)

    @pytest.mark.parametrize("M", range(3, 13))
    def test_galerkin_matches_quadrature(self, M):
        values = np.random.default_rng(M).choice([1.0, 2.0], size=M - 1)
        np.testing.assert_allclose(
            fem_potential_matrix(values, M),
            potential_by_quadrature(values, M),
            rtol=0,
            atol=1e-10,
        )

    def test_wrong_length(self):
        with pytest.raises(DomainError):
            fem_potential_matrix([1.0, 1.0], 4)

    def test_unknown_convention(self):
        with pytest.raises(DomainError):
            fem_potential_matrix([1.0, 1.0, 1.0], 4, convention="lumped")
