from dataclasses import replace
from logging import getLogger

import numpy as np

from matrix_diversity.core.exceptions import DivergenceError, DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.operators.models import TaskDistribution

from .models import TrainingHyper, TrainMeta, TransformerParams
from .prompts import TrainingSet, build_training_set
from .transformer import risk_and_gradients

logger = getLogger(__name__)

HISTORY_EVERY = 100
INFO_EVERY = 1000

PROMPT_STREAM = 0
INIT_STREAM = 1
BATCH_STREAM = 2


def initial_params(d: int, hyper: TrainingHyper, rng: RngStream) -> TransformerParams:
    generator = rng.generator()
    std = hyper.init_scale / np.sqrt(d)
    return TransformerParams(
        P=generator.normal(0.0, std, size=(d, d)),
        Q=generator.normal(0.0, std, size=(d, d)),
    )


def fit(
    training_set: TrainingSet, hyper: TrainingHyper, rng: RngStream
) -> TransformerParams:
    """
    Minibatch SGD on the empirical risk divided by loss_scale^2.

    TF is equivariant under scaling every task by the same constant, so the
    division leaves the minimizer unchanged while keeping step sizes
    meaningful for operators with large norms. Minibatches are drawn
    without replacement, reshuffling once every pass over the data.
    """
    if training_set.size < hyper.batch_size:
        raise DomainError(
            f"Need at least batch_size={hyper.batch_size} tasks, "
            f"got {training_set.size}"
        )

    params = initial_params(training_set.d, hyper, rng.child(INIT_STREAM))
    P, Q = params.P.copy(), params.Q.copy()
    scale = training_set.loss_scale()
    normalization = scale**2

    generator = rng.child(BATCH_STREAM).generator()
    order = generator.permutation(training_set.size)
    cursor = 0
    history = []

    def full_loss():
        loss, _, _ = risk_and_gradients(
            P, Q, training_set.moments, training_set.queries, training_set.targets
        )
        return loss

    for step in range(hyper.steps):
        if cursor + hyper.batch_size > training_set.size:
            order = generator.permutation(training_set.size)
            cursor = 0
        indices = order[cursor : cursor + hyper.batch_size]
        cursor += hyper.batch_size

        loss, grad_P, grad_Q = risk_and_gradients(P, Q, *training_set.batch(indices))
        if not np.isfinite(loss):
            raise DivergenceError(f"Training loss is not finite at step {step}", step=step)

        if step % HISTORY_EVERY == 0:
            history.append((step, full_loss()))
            log = logger.info if step % INFO_EVERY == 0 else logger.debug
            log("Step %d training loss %.6g", step, history[-1][1])

        learning_rate = hyper.learning_rate_at(step)
        P -= learning_rate * grad_P / normalization
        Q -= learning_rate * grad_Q / normalization

    final_loss = full_loss()
    if not np.isfinite(final_loss):
        raise DivergenceError(
            f"Training loss is not finite at step {hyper.steps}", step=hyper.steps
        )
    history.append((hyper.steps, final_loss))
    logger.info("Finished %d steps with training loss %.6g", hyper.steps, final_loss)

    return TransformerParams(
        P=P,
        Q=Q,
        train_meta=TrainMeta(
            seed=rng.seed,
            steps=hyper.steps,
            learning_rate=hyper.learning_rate,
            final_learning_rate=hyper.final_learning_rate,
            batch_size=hyper.batch_size,
            init_scale=hyper.init_scale,
            final_train_loss=final_loss,
            loss_scale=scale,
            tasks=training_set.size,
            loss_history=tuple(history),
        ),
    )


def train(
    dist: TaskDistribution,
    tasks: int,
    n: int,
    hyper: TrainingHyper,
    rng: RngStream,
) -> TransformerParams:
    training_set = build_training_set(dist, tasks, n, rng.child(PROMPT_STREAM))
    logger.info(
        "Training on %d prompts of length %d with d=%d", tasks, n, training_set.d
    )
    params = fit(training_set, hyper, rng)
    return replace(
        params, train_meta=replace(params.train_meta, prompt_length=n)
    )
