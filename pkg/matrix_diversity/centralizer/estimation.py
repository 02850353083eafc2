from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from logging import getLogger

import numpy as np
from scipy.optimize import isotonic_regression

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.linalg.dense import DEFAULT_TOLERANCE, Tolerance
from matrix_diversity.operators.models import TaskDistribution
from matrix_diversity.operators.sampling import deterministic_part, sample_task_matrix

from .commutant import is_trivial_centralizer
from .models import DiversityEstimate

logger = getLogger(__name__)


def draw_sample_set(dist: TaskDistribution, N: int, rng: RngStream) -> list:
    """
    N iid task matrices. Sample i always comes from substream i, so the
    set for N is a prefix of the set for any larger N.
    """
    return [sample_task_matrix(dist, rng.child(i)) for i in range(N)]


def estimate_diversity_probability(
    dist: TaskDistribution,
    N: int,
    trials: int,
    augment_with_k: bool,
    rng: RngStream,
    tol: Tolerance = DEFAULT_TOLERANCE,
    threads: int | None = None,
) -> DiversityEstimate:
    if N < 1:
        raise DomainError(f"The sample set size must be positive: N={N}")
    if trials < 1:
        raise DomainError(f"At least one trial is needed: trials={trials}")

    extra = [deterministic_part(dist)] if augment_with_k else []

    def run_trial(trial: int) -> bool:
        samples = draw_sample_set(dist, N, rng.child(trial))
        report = is_trivial_centralizer(samples + extra, tol, augmented=augment_with_k)
        logger.debug(
            "Trial %d N=%d commutant dimension %d", trial, N, report.commutant_dim
        )
        return report.trivial

    with ThreadPoolExecutor(max_workers=threads) as executor:
        successes = sum(executor.map(run_trial, range(trials)))

    return DiversityEstimate(N=N, trials=trials, successes=successes)


def isotonic_nondecreasing(values: Iterable[float], weights=None) -> np.ndarray:
    """
    Least-squares nondecreasing fit (pool adjacent violators).

    >>> isotonic_nondecreasing([0.1, 0.3, 0.2, 0.6]).tolist()
    [0.1, 0.25, 0.25, 0.6]
    """
    y = np.asarray(list(values), dtype=np.float64)
    if y.size == 0:
        return y
    return isotonic_regression(y, weights=weights, increasing=True).x


def crossing_n(estimates: Iterable[DiversityEstimate], threshold: float) -> int | None:
    """
    Smallest N whose smoothed estimate reaches `threshold`, or None.
    """
    ordered = sorted(estimates, key=lambda estimate: estimate.N)
    if not ordered:
        return None
    smoothed = isotonic_nondecreasing(
        [estimate.p_hat for estimate in ordered],
        weights=[estimate.trials for estimate in ordered],
    )
    for estimate, value in zip(ordered, smoothed):
        if value >= threshold:
            return estimate.N
    return None
