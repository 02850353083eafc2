import numpy as np
import pytest

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.operators.tests.factories import TaskDistributionFactory

from ..evaluation import evaluate, fitted_log_log_slope, ood_suite
from ..models import ErrorKind, TransformerParams
from .factories import TrainingHyperFactory


def zero_params(d):
    return TransformerParams(P=np.zeros((d, d)), Q=np.eye(d))


class TestFittedLogLogSlope:
    def test_exact_power_law(self):
        m = np.array([10, 20, 40, 80])
        assert fitted_log_log_slope(m, 3.0 * m**-2.0) == pytest.approx(-2.0)

    def test_single_point(self):
        assert fitted_log_log_slope([10], [0.5]) is None

    def test_floor(self):
        assert fitted_log_log_slope([10, 20, 40], [1.0, 0.0, 0.5]) is None


class TestEvaluate:
    def test_zero_predictor_error_is_constant_in_m(self):
        dist = TaskDistributionFactory(M=4)
        report = evaluate(
            zero_params(4), dist, [5, 10, 20], 6, 3, ErrorKind.MSE, RngStream(2)
        )

        assert len(set(report.errors)) == 1
        assert report.errors[0] > 0
        assert report.fitted_slope == pytest.approx(0.0, abs=1e-12)

    def test_zero_predictor_relative_error_is_one(self):
        dist = TaskDistributionFactory(M=4)
        report = evaluate(
            zero_params(4), dist, [5, 10], 4, 3, "shifted-relative", RngStream(2)
        )
        assert report.errors == (1.0, 1.0)
        assert report.error_kind == ErrorKind.SHIFTED_RELATIVE

    def test_identity_weights_scale_like_one_over_m(self):
        dist = TaskDistributionFactory(M=5)
        report = evaluate(
            TransformerParams.identity(5),
            dist,
            [10, 40, 160, 640],
            50,
            10,
            ErrorKind.MSE,
            RngStream(4),
        )
        assert -1.4 <= report.fitted_slope <= -0.6

    def test_reproducible_across_thread_counts(self):
        dist = TaskDistributionFactory(M=4)
        params = TransformerParams.identity(4)
        args = (params, dist, [4, 8, 16], 9, 2, ErrorKind.MSE, RngStream(13))

        single = evaluate(*args, threads=1)
        several = evaluate(*args, threads=3)

        assert single.errors == several.errors
        assert single == evaluate(*args, threads=1)

    def test_report_fields(self):
        report = evaluate(
            TransformerParams.identity(4),
            TaskDistributionFactory(M=4),
            [3],
            2,
            2,
            ErrorKind.MSE,
            RngStream(1),
            label="in-domain",
        )
        assert report.prompt_lengths == (3,)
        assert report.task_count == 2
        assert report.label == "in-domain"
        assert report.fitted_slope is None

    @pytest.mark.parametrize(
        "m_values, tasks",
        [([], 2), ([10, 5], 2), ([0, 5], 2), ([5, 10], 0)],
    )
    def test_rejects(self, m_values, tasks):
        with pytest.raises(DomainError):
            evaluate(
                TransformerParams.identity(4),
                TaskDistributionFactory(M=4),
                m_values,
                tasks,
                2,
                ErrorKind.MSE,
                RngStream(1),
            )

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(DomainError):
            evaluate(
                TransformerParams.identity(3),
                TaskDistributionFactory(M=4),
                [5],
                2,
                2,
                ErrorKind.MSE,
                RngStream(1),
            )


class TestOodSuite:
    def test_rejects_dimension_mismatch(self):
        with pytest.raises(DomainError):
            ood_suite(
                TaskDistributionFactory(M=4),
                [("wider", TaskDistributionFactory(M=5))],
                tasks=8,
                n=5,
                hyper=TrainingHyperFactory(),
                m_values=[5, 10],
                test_tasks=2,
                queries_per_task=2,
                error_kind=ErrorKind.MSE,
                rng=RngStream(1),
            )

    def test_fd_to_fem_transfer(self):
        train_dist = TaskDistributionFactory(M=5)
        reports = ood_suite(
            train_dist,
            [("FD", train_dist), ("FEM", TaskDistributionFactory(fem=True, M=5))],
            tasks=16,
            n=10,
            hyper=TrainingHyperFactory(steps=40),
            m_values=[5, 10, 20],
            test_tasks=4,
            queries_per_task=2,
            error_kind=ErrorKind.SHIFTED_RELATIVE,
            rng=RngStream(6),
        )

        assert [report.label for report in reports] == ["FD", "FEM"]
        assert all(np.all(np.isfinite(report.errors)) for report in reports)
