import math
from dataclasses import dataclass, field

import numpy as np
from django.db import models

from matrix_diversity.core.exceptions import DomainError, SizingError
from matrix_diversity.linalg.dense import DenseMatrix, as_dense


class ErrorKind(models.TextChoices):
    MSE = "MSE"
    SHIFTED_RELATIVE = "shifted-relative"


@dataclass(frozen=True)
class TrainingHyper:
    """
    SGD settings. The learning rate follows a cosine schedule from
    `learning_rate` down to `final_learning_rate`; P and Q start with iid
    N(0, init_scale^2 / d) entries.
    """

    learning_rate: float = 1e-2
    final_learning_rate: float = 1e-4
    batch_size: int = 64
    steps: int = 20_000
    init_scale: float = 1.0

    def __post_init__(self):
        if self.steps < 1:
            raise DomainError(f"steps must be positive: {self.steps}")
        if self.batch_size < 1:
            raise DomainError(f"batch_size must be positive: {self.batch_size}")
        if not 0 < self.final_learning_rate <= self.learning_rate:
            raise DomainError(
                "Learning rates must satisfy 0 < final_learning_rate <= learning_rate"
            )
        if self.init_scale <= 0:
            raise DomainError(f"init_scale must be positive: {self.init_scale}")

    def learning_rate_at(self, step: int) -> float:
        """
        >>> round(TrainingHyper(steps=10).learning_rate_at(0), 12)
        0.01
        >>> TrainingHyper(steps=10).learning_rate_at(10)
        0.0001
        """
        progress = step / self.steps
        spread = self.learning_rate - self.final_learning_rate
        return self.final_learning_rate + 0.5 * spread * (1 + math.cos(math.pi * progress))


@dataclass(frozen=True)
class TrainMeta:
    seed: int
    steps: int
    learning_rate: float
    final_learning_rate: float
    batch_size: int
    init_scale: float
    final_train_loss: float
    loss_scale: float = 1.0
    tasks: int | None = None
    prompt_length: int | None = None
    loss_history: tuple[tuple[int, float], ...] = field(default=())


@dataclass(frozen=True)
class TransformerParams:
    P: DenseMatrix
    Q: DenseMatrix
    train_meta: TrainMeta | None = None

    def __post_init__(self):
        P = as_dense(self.P, "P")
        Q = as_dense(self.Q, "Q")
        d = P.shape[0]
        if P.shape != (d, d) or Q.shape != (d, d):
            raise SizingError(
                f"P and Q must be square of equal size, got {P.shape} and {Q.shape}"
            )
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)

    @property
    def d(self) -> int:
        return self.P.shape[0]

    @classmethod
    def identity(cls, d: int) -> "TransformerParams":
        return cls(P=np.eye(d), Q=np.eye(d))


@dataclass(frozen=True)
class Prompt:
    """
    n demonstration pairs (rows of `xs` and `ys`) plus a query.
    """

    xs: np.ndarray
    ys: np.ndarray
    query: np.ndarray
    target: np.ndarray
    task: DenseMatrix

    @property
    def n(self) -> int:
        return self.xs.shape[0]

    @property
    def d(self) -> int:
        return self.xs.shape[1]


@dataclass(frozen=True)
class EvalReport:
    prompt_lengths: tuple[int, ...]
    errors: tuple[float, ...]
    error_kind: ErrorKind
    fitted_slope: float | None
    task_count: int
    label: str = ""

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.prompt_lengths, self.prompt_lengths[1:])):
            raise DomainError("Prompt lengths must be strictly increasing")
        if any(error < 0 for error in self.errors):
            raise DomainError("Errors must be nonnegative")
