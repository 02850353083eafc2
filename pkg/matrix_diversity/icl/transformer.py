"""
The one-layer linear attention model

    TF(prompt, x) = P G Q x,    G = (1/n) sum_i y_i x_i^T

and its squared-error risk. Batched helpers take a stack of moments G of
shape (B, d, d) with queries and targets of shape (B, d).
"""

import numpy as np

from matrix_diversity.core.exceptions import DomainError, SizingError

from .models import Prompt, TransformerParams


def prompt_moment(xs, ys) -> np.ndarray:
    """
    >>> prompt_moment([[1.0, 0.0], [0.0, 1.0]], [[2.0, 0.0], [0.0, 3.0]]).tolist()
    [[1.0, 0.0], [0.0, 1.5]]
    """
    xs = np.atleast_2d(np.asarray(xs, dtype=np.float64))
    ys = np.atleast_2d(np.asarray(ys, dtype=np.float64))
    if xs.shape != ys.shape:
        raise SizingError(f"Prompt inputs {xs.shape} and outputs {ys.shape} differ")
    if xs.shape[0] == 0:
        raise DomainError("A prompt needs at least one (x, y) pair")
    return ys.T @ xs / xs.shape[0]


def tf_forward(params: TransformerParams, xs, ys, query) -> np.ndarray:
    g = prompt_moment(xs, ys)
    query = np.asarray(query, dtype=np.float64)
    if g.shape[0] != params.d or query.shape != (params.d,):
        raise SizingError(
            f"Prompt vectors must have length {params.d}, got {g.shape[0]} "
            f"and query {query.shape}"
        )
    return params.P @ (g @ (params.Q @ query))


def batch_forward(P, Q, moments, queries) -> np.ndarray:
    z = queries @ Q.T
    g = np.einsum("bij,bj->bi", moments, z)
    return g @ P.T


def risk_and_gradients(P, Q, moments, queries, targets):
    """
    Mean squared error over the batch with its exact gradients

        dP = 2 mean r (G Q x)^T,    dQ = 2 mean G^T P^T r x^T,

    where r = P G Q x - y.
    """
    batch = queries.shape[0]
    g = np.einsum("bij,bj->bi", moments, queries @ Q.T)
    residual = g @ P.T - targets
    loss = float(np.sum(residual**2) / batch)

    grad_P = 2.0 * residual.T @ g / batch
    back = np.einsum("bji,bj->bi", moments, residual @ P)
    grad_Q = 2.0 * back.T @ queries / batch
    return loss, grad_P, grad_Q


def empirical_risk(params: TransformerParams, prompts: list[Prompt]) -> float:
    if not prompts:
        raise DomainError("The batch of prompts must be nonempty")
    errors = [
        np.sum((tf_forward(params, p.xs, p.ys, p.query) - p.target) ** 2)
        for p in prompts
    ]
    return float(np.mean(errors))
