import pandas

from matrix_diversity.bounds.evaluators import bound_fd, bound_fd2
from matrix_diversity.centralizer.estimation import crossing_n
from matrix_diversity.centralizer.models import DiversityEstimate
from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.operators.models import (
    MethodChoices,
    PotentialKindChoices,
    TaskDistribution,
)

COLUMNS = [
    "method",
    "M",
    "D",
    "p",
    "N",
    "trials",
    "successes",
    "p_hat",
    "stderr",
    "bound_thm_fd2",
    "bound_thm_fd_augmented",
]
SUMMARY_COLUMNS = ["p", "crossing_n_0.9", "crossing_n_0.95"]
CROSSING_THRESHOLDS = (0.9, 0.95)

BOUNDED_KINDS = (
    PotentialKindChoices.BERNOULLI_POINT,
    PotentialKindChoices.PIECEWISE_CONSTANT_BERNOULLI,
)


class DiversityPresenter:
    """
    One CSV row per (p, N) with the matching FD bounds alongside the
    estimate. Bound columns are empty where the theorem does not apply.
    """

    def __init__(self, dist: TaskDistribution, sweep: dict[float, list[DiversityEstimate]]):
        self.dist = dist
        self.sweep = sweep

    @property
    def bounds_apply(self) -> bool:
        potential = self.dist.potential
        return (
            self.dist.method == MethodChoices.FD
            and potential.kind in BOUNDED_KINDS
            and potential.a != potential.b
        )

    def present(self) -> pandas.DataFrame:
        rows = [
            self.present_estimate(p, estimate)
            for p, estimates in self.sweep.items()
            for estimate in estimates
        ]
        return pandas.DataFrame(rows, columns=COLUMNS, dtype=object)

    def present_estimate(self, p: float, estimate: DiversityEstimate) -> dict:
        return {
            "method": self.dist.method.value,
            "M": self.dist.M,
            "D": self.dist.D,
            "p": p,
            "N": estimate.N,
            "trials": estimate.trials,
            "successes": estimate.successes,
            "p_hat": estimate.p_hat,
            "stderr": estimate.stderr,
            "bound_thm_fd2": self.fd2_bound(p, estimate.N),
            "bound_thm_fd_augmented": self.fd_bound(p, estimate.N),
        }

    def fd2_bound(self, p: float, N: int) -> float | None:
        if not self.bounds_apply or self.dist.D != 1 or N < 2:
            return None
        return bound_fd2(self.dist.M, p, N).clamped

    def fd_bound(self, p: float, N: int) -> float | None:
        if not self.bounds_apply:
            return None
        try:
            return bound_fd(self.dist.M, self.dist.D, p, N).clamped
        except DomainError:
            return None

    def present_summary(self) -> pandas.DataFrame:
        rows = [
            [p, *(crossing_n(estimates, threshold) for threshold in CROSSING_THRESHOLDS)]
            for p, estimates in self.sweep.items()
        ]
        return pandas.DataFrame(rows, columns=SUMMARY_COLUMNS, dtype=object)
