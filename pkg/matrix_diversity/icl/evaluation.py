from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from logging import getLogger

import numpy as np
from scipy.stats import linregress

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.operators.models import TaskDistribution
from matrix_diversity.operators.sampling import sample_task_matrix

from .models import ErrorKind, EvalReport, TrainingHyper, TransformerParams
from .training import train
from .transformer import batch_forward

logger = getLogger(__name__)

SLOPE_FLOOR = 1e-12


def fitted_log_log_slope(m_values, errors) -> float | None:
    """
    Least-squares slope of log(error) against log(m); None when there are
    fewer than two points or any error is below the floor.

    >>> round(fitted_log_log_slope([10, 20, 40], [1.0, 0.5, 0.25]), 12)
    -1.0
    >>> fitted_log_log_slope([10, 20], [1e-14, 1e-15]) is None
    True
    """
    errors = np.asarray(errors, dtype=np.float64)
    if errors.size < 2 or np.any(errors < SLOPE_FLOOR):
        return None
    return float(linregress(np.log(m_values), np.log(errors)).slope)


def _task_errors(
    params: TransformerParams,
    dist: TaskDistribution,
    m_values: Sequence[int],
    queries_per_task: int,
    rng: RngStream,
) -> np.ndarray:
    """
    Squared prediction error and squared target norm, summed over queries,
    for one task at every prompt length. Shape (len(m_values), 2).

    The task and its queries are shared by every m; only the prompt changes.
    """
    task = sample_task_matrix(dist, rng.child(0))
    queries = rng.child(1).generator().standard_normal((queries_per_task, dist.d))
    targets = queries @ task.T
    result = np.empty((len(m_values), 2))
    for index, m in enumerate(m_values):
        xs = rng.child(index + 2).generator().standard_normal((m, dist.d))
        moment = (xs @ task.T).T @ xs / m
        moments = np.broadcast_to(moment, (queries_per_task, *moment.shape))
        predictions = batch_forward(params.P, params.Q, moments, queries)
        result[index] = (np.sum((predictions - targets) ** 2), np.sum(targets**2))
    return result


def evaluate(
    params: TransformerParams,
    test_dist: TaskDistribution,
    m_values: Sequence[int],
    tasks: int,
    queries_per_task: int,
    error_kind: ErrorKind | str,
    rng: RngStream,
    label: str = "",
    threads: int | None = None,
) -> EvalReport:
    """
    Mean error at each inference prompt length m over fresh tasks and
    Gaussian queries. Every m reuses the same tasks and queries; prompts are
    drawn afresh per m.

    "shifted-relative" is E|y_hat - y|^2 / E|y|^2 over the same draws.
    """
    error_kind = ErrorKind(error_kind)
    m_values = [int(m) for m in m_values]
    if not m_values:
        raise DomainError("At least one prompt length is needed")
    if any(b <= a for a, b in zip(m_values, m_values[1:])) or m_values[0] < 1:
        raise DomainError(f"Prompt lengths must be positive and ascending: {m_values}")
    if tasks < 1 or queries_per_task < 1:
        raise DomainError("tasks and queries_per_task must be positive")
    if test_dist.d != params.d:
        raise DomainError(
            f"The model has d={params.d} but the test distribution has d={test_dist.d}"
        )

    def run_task(index: int) -> np.ndarray:
        return _task_errors(params, test_dist, m_values, queries_per_task, rng.child(index))

    with ThreadPoolExecutor(max_workers=threads) as executor:
        totals = np.zeros((len(m_values), 2))
        for task_totals in executor.map(run_task, range(tasks)):
            totals += task_totals

    if error_kind == ErrorKind.MSE:
        errors = totals[:, 0] / (tasks * queries_per_task)
    else:
        errors = totals[:, 0] / totals[:, 1]

    slope = fitted_log_log_slope(m_values, errors)
    logger.info(
        "Evaluated %s on %d tasks: %s slope %s",
        label or "test distribution",
        tasks,
        error_kind.value,
        "n/a" if slope is None else f"{slope:.4f}",
    )
    return EvalReport(
        prompt_lengths=tuple(m_values),
        errors=tuple(float(e) for e in errors),
        error_kind=error_kind,
        fitted_slope=slope,
        task_count=tasks,
        label=label,
    )


def ood_suite(
    train_dist: TaskDistribution,
    test_dists: Sequence[tuple[str, TaskDistribution]],
    tasks: int,
    n: int,
    hyper: TrainingHyper,
    m_values: Sequence[int],
    test_tasks: int,
    queries_per_task: int,
    error_kind: ErrorKind | str,
    rng: RngStream,
    threads: int | None = None,
) -> list[EvalReport]:
    """
    Train once on `train_dist` and evaluate on every labelled test
    distribution.
    """
    for label, dist in test_dists:
        if dist.d != train_dist.d:
            raise DomainError(
                f"Test distribution {label!r} has d={dist.d}, "
                f"training uses d={train_dist.d}"
            )

    params = train(train_dist, tasks, n, hyper, rng.child(0))
    return [
        evaluate(
            params,
            dist,
            m_values,
            test_tasks,
            queries_per_task,
            error_kind,
            rng.child(index),
            label=label,
            threads=threads,
        )
        for index, (label, dist) in enumerate(test_dists, start=1)
    ]
