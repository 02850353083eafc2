from functools import reduce

import numpy as np
import numpy.typing as npt

from matrix_diversity.core.exceptions import DomainError, UnsupportedCombinationError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.linalg.dense import DenseMatrix, kron

from .models import (
    FEM_CONVENTIONS,
    MethodChoices,
    PotentialKindChoices,
    PotentialSpec,
    TaskDistribution,
)

# Interior diagonal coefficient of the FEM potential matrix, before the
# 1/(6(M-1)) prefactor. "printed" keeps the coefficient as typeset in the
# source lemma; "galerkin" is the exact integral of the hat products.
FEM_INTERIOR_WEIGHT = {"galerkin": 2.0, "printed": 4.0}


def lognormal_field(
    xs, alpha: float, beta: float, truncation: int, draws
) -> npt.NDArray[np.float64]:
    """
    exp(sum_i xi_i (i^2 pi^2 + alpha)^(-beta/2) sin(i pi x)) at every x in xs.
    """
    if truncation < 1:
        raise DomainError(f"Truncation must be at least 1: {truncation}")
    draws = np.asarray(draws, dtype=np.float64)
    if draws.size < truncation:
        raise DomainError(
            f"Need {truncation} standard normal draws, got {draws.size}"
        )

    modes = np.arange(1, truncation + 1)
    weights = (modes**2 * np.pi**2 + alpha) ** (-beta / 2) * draws[:truncation]
    xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    g = np.sin(np.pi * np.outer(xs, modes)) @ weights
    return np.exp(g)


def lognormal_field_eval(
    x: float, alpha: float, beta: float, truncation: int, draws
) -> float:
    """
    >>> lognormal_field_eval(0.3, 1.0, 2.0, 3, [0.0, 0.0, 0.0])
    1.0
    >>> round(lognormal_field_eval(0.5, 0.0, 2.0, 1, [1.0]), 4)
    1.1066
    """
    if not 0 <= x <= 1:
        raise DomainError(f"Evaluation point must lie in [0, 1]: {x}")
    return float(lognormal_field([x], alpha, beta, truncation, draws)[0])


def bernoulli_values(
    generator: np.random.Generator, size: int, spec: PotentialSpec
) -> npt.NDArray[np.float64]:
    return np.where(generator.random(size) < spec.p, spec.a, spec.b)


def fd_grid(M: int) -> npt.NDArray[np.float64]:
    """
    >>> fd_grid(4).tolist()
    [0.25, 0.5, 0.75, 1.0]
    """
    return np.arange(1, M + 1) / M


def fem_midpoints(M: int) -> npt.NDArray[np.float64]:
    """
    >>> fem_midpoints(3).tolist()
    [0.25, 0.75]
    """
    return (np.arange(1, M) - 0.5) / (M - 1)


def sample_fd_potential(dist: TaskDistribution, rng: RngStream) -> DenseMatrix:
    """
    Diagonal FD potential: Bernoulli point values, a sum of separable
    Kronecker products of Bernoulli diagonals, or a lognormal field sampled
    at the grid points (D = 1 only).
    """
    if dist.method != MethodChoices.FD:
        raise DomainError("sample_fd_potential needs an FD task distribution")

    spec = dist.potential
    generator = rng.generator()

    if spec.kind == PotentialKindChoices.LOGNORMAL_FIELD:
        if dist.D > 1:
            raise UnsupportedCombinationError(
                "Lognormal field potentials are only defined for D = 1"
            )
        truncation = spec.modes(dist.M)
        draws = generator.standard_normal(truncation)
        return np.diag(
            lognormal_field(fd_grid(dist.M), spec.alpha, spec.beta, truncation, draws)
        )

    diagonal = np.zeros(dist.d)
    for _ in range(spec.product_terms):
        factors = [bernoulli_values(generator, dist.M, spec) for _ in range(dist.D)]
        diagonal += reduce(kron, factors).ravel()
    return np.diag(diagonal)


def sample_fem_values(dist: TaskDistribution, rng: RngStream) -> npt.NDArray[np.float64]:
    """Piecewise-constant potential values on the M - 1 mesh subintervals."""
    if dist.method != MethodChoices.FEM:
        raise DomainError("sample_fem_values needs an FEM task distribution")

    spec = dist.potential
    generator = rng.generator()
    cells = dist.M - 1

    if spec.kind == PotentialKindChoices.LOGNORMAL_FIELD:
        truncation = spec.modes(dist.M)
        draws = generator.standard_normal(truncation)
        return lognormal_field(
            fem_midpoints(dist.M), spec.alpha, spec.beta, truncation, draws
        )

    values = np.zeros(cells)
    for _ in range(spec.product_terms):
        values += bernoulli_values(generator, cells, spec)
    return values


def fem_potential_matrix(values, M: int, convention: str = "galerkin") -> DenseMatrix:
    """
    Tridiagonal matrix of the multiplication operator for a potential that
    is constant on each mesh subinterval.
    """
    if M < 3:
        raise DomainError(f"The FEM potential matrix needs M >= 3: M={M}")
    if convention not in FEM_CONVENTIONS:
        raise DomainError(f"Unknown FEM convention: {convention}")

    v = np.asarray(values, dtype=np.float64).ravel()
    if v.size != M - 1:
        raise DomainError(f"Expected {M - 1} subinterval values, got {v.size}")

    weight = FEM_INTERIOR_WEIGHT[convention]
    diagonal = np.empty(M)
    diagonal[0] = 2 * v[0]
    diagonal[-1] = 2 * v[-1]
    diagonal[1:-1] = weight * (v[:-1] + v[1:])

    matrix = np.diag(diagonal) + np.diag(v, 1) + np.diag(v, -1)
    return matrix / (6.0 * (M - 1))
