import math
from dataclasses import dataclass

from matrix_diversity.linalg.dense import Tolerance


@dataclass(frozen=True)
class CentralizerReport:
    d: int
    n_matrices: int
    commutant_dim: int
    tolerance: Tolerance
    augmented: bool = False

    @property
    def trivial(self) -> bool:
        return self.commutant_dim == 1

    @property
    def stacked_rank(self) -> int:
        return self.d**2 - self.commutant_dim


@dataclass(frozen=True)
class DiversityEstimate:
    """
    Monte Carlo estimate of the probability that N samples have a trivial
    centralizer.

    >>> DiversityEstimate(N=3, trials=4, successes=1).stderr
    0.21650635094610965
    """

    N: int
    trials: int
    successes: int

    def __post_init__(self):
        if not 0 <= self.successes <= self.trials:
            raise ValueError(
                f"successes must lie in [0, trials]: {self.successes}/{self.trials}"
            )

    @property
    def p_hat(self) -> float:
        return self.successes / self.trials

    @property
    def stderr(self) -> float:
        return math.sqrt(self.p_hat * (1 - self.p_hat) / self.trials)
