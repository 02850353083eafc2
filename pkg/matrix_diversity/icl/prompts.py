from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.operators.models import TaskDistribution
from matrix_diversity.operators.sampling import sample_task_matrix

from .models import Prompt
from .transformer import prompt_moment

TASK_STREAM = 0
VECTOR_STREAM = 1


def sample_prompt(dist: TaskDistribution, n: int, rng: RngStream) -> Prompt:
    """
    Draw a task A ~ dist and n + 1 standard Gaussian inputs; outputs are
    y = A x without noise. The last input is the query.
    """
    if n < 1:
        raise DomainError(f"A prompt needs at least one pair: n={n}")

    task = sample_task_matrix(dist, rng.child(TASK_STREAM))
    vectors = rng.child(VECTOR_STREAM).generator().standard_normal((n + 1, dist.d))
    outputs = vectors @ task.T
    return Prompt(
        xs=vectors[:n],
        ys=outputs[:n],
        query=vectors[n],
        target=outputs[n],
        task=task,
    )


@dataclass(frozen=True)
class TrainingSet:
    """
    Training prompts reduced to what the loss needs: one moment matrix,
    query and target per prompt.
    """

    moments: np.ndarray
    queries: np.ndarray
    targets: np.ndarray

    @classmethod
    def from_prompts(cls, prompts: Sequence[Prompt]) -> "TrainingSet":
        if not prompts:
            raise DomainError("A training set needs at least one prompt")
        return cls(
            moments=np.stack([prompt_moment(p.xs, p.ys) for p in prompts]),
            queries=np.stack([p.query for p in prompts]),
            targets=np.stack([p.target for p in prompts]),
        )

    @property
    def size(self) -> int:
        return self.queries.shape[0]

    @property
    def d(self) -> int:
        return self.queries.shape[1]

    def loss_scale(self) -> float:
        """
        Root of the mean squared output-to-input norm ratio, i.e. the typical
        size of the task matrices.
        """
        ratios = np.sum(self.targets**2, axis=1) / np.sum(self.queries**2, axis=1)
        return float(np.sqrt(np.mean(ratios)))

    def batch(self, indices) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.moments[indices], self.queries[indices], self.targets[indices]


def build_training_set(
    dist: TaskDistribution, tasks: int, n: int, rng: RngStream
) -> TrainingSet:
    if tasks < 1:
        raise DomainError(f"At least one training task is needed: tasks={tasks}")
    return TrainingSet.from_prompts(
        [sample_prompt(dist, n, rng.child(i)) for i in range(tasks)]
    )
