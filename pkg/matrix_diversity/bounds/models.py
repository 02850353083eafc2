from dataclasses import dataclass, field

from django.db import models


class TheoremChoices(models.TextChoices):
    THM_MAIN = "ThmMain", "General diagonalizable K"
    THM2 = "Thm2", "Diagonal K with bounded potential pairs"
    THM_FD = "ThmFD", "Finite difference discretization"
    THM_FD2 = "ThmFD2", "One-dimensional finite difference, pairwise argument"
    THM_FEM = "ThmFEM", "Finite element discretization"


@dataclass(frozen=True)
class BoundResult:
    """
    A probability lower bound. `raw_value` may be negative when the bound is
    vacuous; `clamped` is what a probability can actually be.

    >>> BoundResult(TheoremChoices.THM_MAIN, raw_value=-2.5).clamped
    0.0
    """

    theorem: TheoremChoices
    raw_value: float
    constants: dict[str, float] = field(default_factory=dict)
    params: dict[str, float] = field(default_factory=dict)

    @property
    def clamped(self) -> float:
        return min(1.0, max(0.0, self.raw_value))


@dataclass(frozen=True)
class SparsityReport:
    M: int
    min_nonzeros: int
    required: int
    worst_k: int

    @property
    def passed(self) -> bool:
        return self.min_nonzeros >= self.required


@dataclass(frozen=True)
class AssumptionReport:
    trials: int
    zero_probabilities: tuple[float, ...]
    theoretical_c: float | None

    @property
    def max_probability(self) -> float:
        return max(self.zero_probabilities)

    @property
    def worst_pair(self) -> int:
        """1-based index k of the pair (u_k, u_k+1) most often orthogonal under V."""
        return self.zero_probabilities.index(self.max_probability) + 1

    @property
    def stderr(self) -> float:
        p = self.max_probability
        return (p * (1 - p) / self.trials) ** 0.5

    @property
    def satisfied(self) -> bool:
        return self.max_probability < 1.0

    @property
    def within_theoretical_c(self) -> bool | None:
        if self.theoretical_c is None:
            return None
        return self.max_probability <= self.theoretical_c + 3 * self.stderr


@dataclass(frozen=True)
class EigenvalueGapReport:
    min_gap: float
    spectral_radius: float

    @property
    def passed(self) -> bool:
        return self.min_gap > 1e-8 * self.spectral_radius
