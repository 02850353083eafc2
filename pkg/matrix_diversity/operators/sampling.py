from dataclasses import replace
from functools import lru_cache
from logging import getLogger

import numpy as np

from matrix_diversity.core.rng import RngStream
from matrix_diversity.linalg.dense import DenseMatrix

from .laplacians import fd_laplacian_nd, fem_laplacian_1d
from .models import MethodChoices, TaskDistribution
from .potentials import fem_potential_matrix, sample_fd_potential, sample_fem_values

logger = getLogger(__name__)

AUTO_SCALE_SAMPLES = 64
AUTO_SCALE_STREAM = RngStream(seed=0x5CA1E, stream=0)


def _unscaled_deterministic_part(dist: TaskDistribution) -> DenseMatrix:
    if dist.method == MethodChoices.FD:
        return -fd_laplacian_nd(dist.M, dist.D)
    return -fem_laplacian_1d(dist.M)


def _unscaled_sample(dist: TaskDistribution, rng: RngStream) -> DenseMatrix:
    k = _unscaled_deterministic_part(dist)
    if dist.method == MethodChoices.FD:
        return k + sample_fd_potential(dist, rng)
    values = sample_fem_values(dist, rng)
    return k + fem_potential_matrix(values, dist.M, dist.fem_convention)


@lru_cache(maxsize=64)
def resolve_spectral_scale(dist: TaskDistribution) -> float:
    """
    The divisor applied to every sample of `dist`: 1 when pre-scaling is off,
    the configured constant, or the largest spectral norm seen over a fixed
    batch of samples for "auto".
    """
    if dist.spectral_scale is None:
        return 1.0
    if dist.spectral_scale != "auto":
        return float(dist.spectral_scale)

    raw = replace(dist, spectral_scale=None)
    scale = max(
        np.linalg.norm(_unscaled_sample(raw, AUTO_SCALE_STREAM.child(i)), 2)
        for i in range(AUTO_SCALE_SAMPLES)
    )
    logger.debug("Resolved automatic spectral scale %.6g for %s", scale, dist)
    return float(scale)


def deterministic_part(dist: TaskDistribution) -> DenseMatrix:
    """
    K = -Delta_FD,D or -Delta_FEM,1, divided by the spectral scale if one
    is configured, so that sample_task_matrix(...) - deterministic_part(...)
    is always the (scaled) potential matrix.
    """
    return _unscaled_deterministic_part(dist) / resolve_spectral_scale(dist)


def sample_task_matrix(dist: TaskDistribution, rng: RngStream) -> DenseMatrix:
    return _unscaled_sample(dist, rng) / resolve_spectral_scale(dist)
