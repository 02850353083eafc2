from dataclasses import dataclass, field, replace

from django.db import models

from matrix_diversity.core.exceptions import DomainError, SizingError
from matrix_diversity.linalg.dense import MAX_ENTRIES


class MethodChoices(models.TextChoices):
    FD = "FD"
    FEM = "FEM"


class PotentialKindChoices(models.TextChoices):
    BERNOULLI_POINT = "BernoulliPoint"
    PIECEWISE_CONSTANT_BERNOULLI = "PiecewiseConstantBernoulli"
    SEPARABLE_SUM = "SeparableSum"
    LOGNORMAL_FIELD = "LognormalField"


FEM_CONVENTIONS = ("galerkin", "printed")

BERNOULLI_KINDS = (
    PotentialKindChoices.BERNOULLI_POINT,
    PotentialKindChoices.PIECEWISE_CONSTANT_BERNOULLI,
    PotentialKindChoices.SEPARABLE_SUM,
)


@dataclass(frozen=True)
class PotentialSpec:
    """
    The law of the potential V.

    Bernoulli kinds take value `a` with probability `p` and `b` otherwise at
    every grid point or cell. `a == b` is accepted and gives a deterministic
    potential. `truncation=None` means one mode per grid point.
    """

    kind: PotentialKindChoices = PotentialKindChoices.BERNOULLI_POINT
    p: float = 0.5
    a: float = 1.0
    b: float = 2.0
    terms: int = 1
    alpha: float = 0.0
    beta: float = 1.0
    truncation: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKindChoices(self.kind))

        if self.is_bernoulli:
            if not 0 < self.p < 1:
                raise DomainError(f"Bernoulli probability must lie in (0, 1): {self.p}")
            if not 0 < self.a <= self.b:
                raise DomainError(
                    f"Bernoulli support must satisfy 0 < a <= b: a={self.a}, b={self.b}"
                )
        if self.terms < 1:
            raise DomainError(f"SeparableSum needs at least one term: {self.terms}")
        if self.kind == PotentialKindChoices.LOGNORMAL_FIELD:
            if self.alpha < 0 or self.beta <= 0:
                raise DomainError(
                    f"Lognormal field needs alpha >= 0 and beta > 0: "
                    f"alpha={self.alpha}, beta={self.beta}"
                )
            if self.truncation is not None and self.truncation < 1:
                raise DomainError(f"Truncation must be at least 1: {self.truncation}")

    @property
    def is_bernoulli(self) -> bool:
        return self.kind in BERNOULLI_KINDS

    @property
    def product_terms(self) -> int:
        """
        Number of separable products summed in the potential.

        >>> PotentialSpec(kind="SeparableSum", terms=3).product_terms
        3
        >>> PotentialSpec(terms=3).product_terms
        1
        """
        if self.kind == PotentialKindChoices.SEPARABLE_SUM:
            return self.terms
        return 1

    def modes(self, M: int) -> int:
        return M if self.truncation is None else self.truncation


@dataclass(frozen=True)
class TaskDistribution:
    method: MethodChoices = MethodChoices.FD
    M: int = 5
    D: int = 1
    potential: PotentialSpec = field(default_factory=PotentialSpec)
    spectral_scale: float | str | None = None
    fem_convention: str = "galerkin"

    def __post_init__(self):
        object.__setattr__(self, "method", MethodChoices(self.method))

        if self.fem_convention not in FEM_CONVENTIONS:
            raise DomainError(f"Unknown FEM convention: {self.fem_convention}")

        if self.D < 1:
            raise DomainError(f"Spatial dimension must be positive: D={self.D}")
        if self.method == MethodChoices.FEM:
            if self.D != 1:
                raise DomainError("FEM is only defined for D = 1")
            if self.M < 3:
                raise DomainError(f"FEM needs at least three mesh points: M={self.M}")
        elif self.M < 2:
            raise DomainError(f"FD needs at least two grid points: M={self.M}")

        if self.M**self.D > MAX_ENTRIES or (self.M**self.D) ** 2 > MAX_ENTRIES:
            raise SizingError(f"M^D = {self.M}^{self.D} exceeds the addressable size")

        scale = self.spectral_scale
        if scale is not None and scale != "auto":
            if isinstance(scale, str) or not scale > 0:
                raise DomainError(
                    f"spectral_scale must be null, 'auto' or positive: {scale!r}"
                )

    @property
    def d(self) -> int:
        """
        >>> TaskDistribution(M=3, D=2).d
        9
        >>> TaskDistribution(method="FEM", M=4).d
        4
        """
        return self.M**self.D

    def with_potential(self, **changes) -> "TaskDistribution":
        return replace(self, potential=replace(self.potential, **changes))
