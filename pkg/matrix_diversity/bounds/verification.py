import math
from logging import getLogger

import numpy as np
import scipy.linalg

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.linalg.dense import as_dense, kron
from matrix_diversity.operators.models import MethodChoices, TaskDistribution
from matrix_diversity.operators.potentials import sample_fd_potential

from .evaluators import fd_constant
from .models import AssumptionReport, EigenvalueGapReport, SparsityReport

logger = getLogger(__name__)

SPARSITY_ZERO = 1e-12
BILINEAR_ZERO = 1e-10


def claim_vector(M: int, k: int) -> np.ndarray:
    """
    w_j = cos(2 pi k (j-1) / M) cos(2 pi (k+1) (j-1) / M) for j = 1..M.
    """
    j = np.arange(M)
    return np.cos(2 * np.pi * k * j / M) * np.cos(2 * np.pi * (k + 1) * j / M)


def verify_claim_sparsity(M: int) -> SparsityReport:
    """
    >>> verify_claim_sparsity(5).min_nonzeros
    5
    """
    if M < 2:
        raise DomainError(f"M must be at least 2: M={M}")

    counts = [
        int(np.count_nonzero(np.abs(claim_vector(M, k)) > SPARSITY_ZERO))
        for k in range(1, M)
    ]
    worst = int(np.argmin(counts))
    return SparsityReport(
        M=M, min_nonzeros=counts[worst], required=math.ceil(M / 3), worst_k=worst + 1
    )


def cosine_eigenvectors(M: int) -> list[np.ndarray]:
    """
    Unit vectors u_k proportional to (cos(2 pi k (j-1) / M))_j for k = 1..M.
    """
    j = np.arange(M)
    vectors = []
    for k in range(1, M + 1):
        u = np.cos(2 * np.pi * k * j / M)
        vectors.append(u / np.linalg.norm(u))
    return vectors


def tensor_eigenvectors(M: int, D: int) -> list[np.ndarray]:
    """
    Enumeration of product eigenvectors: the D-level list is
    u^(D-1)_1 (x) u_1, ..., u^(D-1)_last (x) u_1, u^(D-1)_1 (x) u_2, ...
    so the last factor varies slowest.
    """
    base = cosine_eigenvectors(M)
    vectors = base
    for _ in range(2, D + 1):
        vectors = [
            kron(previous, u).ravel() for u in base for previous in vectors
        ]
    return vectors


def verify_assumption_main(
    dist: TaskDistribution, trials: int, rng: RngStream
) -> AssumptionReport:
    """
    Monte Carlo frequency of u_k^T V u_k+1 = 0 for every consecutive pair of
    the enumerated eigenvectors, compared with the FD constant when the
    potential is Bernoulli.
    """
    if dist.method != MethodChoices.FD:
        raise DomainError("The eigenvector enumeration is only defined for FD")
    if trials < 1:
        raise DomainError(f"At least one trial is needed: trials={trials}")

    vectors = np.column_stack(tensor_eigenvectors(dist.M, dist.D))
    zeros = np.zeros(vectors.shape[1] - 1, dtype=int)

    for trial in range(trials):
        v = np.diag(sample_fd_potential(dist, rng.child(trial)))
        forms = np.einsum("jk,j,jk->k", vectors[:, :-1], v, vectors[:, 1:])
        scale = np.max(np.abs(v))
        zeros += np.abs(forms) <= BILINEAR_ZERO * scale

    spec = dist.potential
    theoretical_c = fd_constant(dist.M, dist.D, spec.p) if spec.is_bernoulli else None
    report = AssumptionReport(
        trials=trials,
        zero_probabilities=tuple(float(z) / trials for z in zeros),
        theoretical_c=theoretical_c,
    )
    logger.info(
        "Largest zero frequency %.4f at pair %d over %d trials",
        report.max_probability,
        report.worst_pair,
        trials,
    )
    return report


def verify_distinct_eigenvalues(k) -> EigenvalueGapReport:
    """
    Smallest gap between consecutive eigenvalues of a symmetric matrix.

    >>> verify_distinct_eigenvalues(np.diag([1.0, 1.0, 3.0])).passed
    False
    """
    m = as_dense(k)
    if m.shape[0] != m.shape[1]:
        raise DomainError(f"Eigenvalues need a square matrix, got {m.shape}")

    eigenvalues = scipy.linalg.eigvalsh(m)
    radius = float(np.max(np.abs(eigenvalues)))
    if eigenvalues.size < 2:
        return EigenvalueGapReport(min_gap=math.inf, spectral_radius=radius)
    return EigenvalueGapReport(
        min_gap=float(np.min(np.diff(eigenvalues))), spectral_radius=radius
    )
