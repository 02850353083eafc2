"""
Dense real linear algebra primitives.

Matrices are float64 numpy arrays with two dimensions. `as_dense` is the
single gatekeeper for the shape and finiteness invariants; every public
function in this module passes its inputs through it.
"""

import sys
from dataclasses import dataclass
from logging import getLogger

import numpy as np
import numpy.typing as npt
import scipy.linalg

from matrix_diversity.core.exceptions import DomainError, NumericError, SizingError

logger = getLogger(__name__)

DenseMatrix = npt.NDArray[np.float64]

MAX_ENTRIES = sys.maxsize // 8


@dataclass(frozen=True)
class Tolerance:
    relative: float = 2.0**-40
    absolute: float = 0.0

    def __post_init__(self):
        if self.relative < 0 or self.absolute < 0:
            raise DomainError("Tolerance components must be nonnegative")
        if self.relative == 0 and self.absolute == 0:
            raise DomainError("Tolerance must have a nonzero component")

    def cutoff(self, sigma_max: float, shape: tuple[int, int]) -> float:
        """
        Singular values strictly above the cutoff count towards the rank.

        >>> Tolerance(relative=0.5, absolute=0.1).cutoff(2.0, (3, 4))
        4.0
        """
        return max(self.absolute, self.relative * sigma_max * max(shape))


DEFAULT_TOLERANCE = Tolerance()

SVD_DRIVERS = ("gesdd", "gesvd")


def as_dense(matrix, name: str = "matrix") -> DenseMatrix:
    array = np.asarray(matrix, dtype=np.float64)
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    if array.ndim != 2:
        raise SizingError(f"{name} must be 2-dimensional, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise DomainError(f"{name} has non-finite entries")
    return array


def check_size(rows: int, cols: int) -> None:
    if rows * cols > MAX_ENTRIES:
        raise SizingError(f"A {rows}x{cols} matrix exceeds the addressable size")


def kron(a, b) -> DenseMatrix:
    """
    Kronecker product, entry (i*b.rows + k, j*b.cols + l) = a[i, j] * b[k, l].

    >>> kron([[2.0]], [[1.0, 3.0]]).tolist()
    [[2.0, 6.0]]
    """
    a = as_dense(a, "a")
    b = as_dense(b, "b")
    check_size(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])
    return np.kron(a, b)


def singular_values(matrix: DenseMatrix) -> npt.NDArray[np.float64]:
    """
    Singular values in descending order. Falls back to the slower but more
    robust LAPACK driver when divide-and-conquer fails to converge.
    """
    for attempt, driver in enumerate(SVD_DRIVERS, start=1):
        try:
            return scipy.linalg.svd(
                matrix, compute_uv=False, check_finite=False, lapack_driver=driver
            )
        except np.linalg.LinAlgError:
            logger.debug("SVD driver %s failed on %s matrix", driver, matrix.shape)
    raise NumericError("Singular value iteration did not converge", attempts=attempt)


def full_svd(matrix: DenseMatrix):
    for attempt, driver in enumerate(SVD_DRIVERS, start=1):
        try:
            return scipy.linalg.svd(
                matrix, full_matrices=True, check_finite=False, lapack_driver=driver
            )
        except np.linalg.LinAlgError:
            logger.debug("SVD driver %s failed on %s matrix", driver, matrix.shape)
    raise NumericError("Singular value iteration did not converge", attempts=attempt)


def _rank_from_singular_values(
    sigma, shape, tol: Tolerance, reference_scale: float | None = None
) -> int:
    if sigma.size == 0:
        return 0
    sigma_max = float(sigma[0]) if reference_scale is None else reference_scale
    cutoff = tol.cutoff(sigma_max, shape)
    return int(np.count_nonzero(sigma > cutoff))


def numerical_rank(matrix, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    """
    >>> numerical_rank(np.eye(5))
    5
    >>> numerical_rank([[1.0, 2.0], [2.0, 4.0]])
    1
    """
    m = as_dense(matrix)
    if m.size == 0:
        raise SizingError("numerical_rank needs a nonempty matrix")
    return _rank_from_singular_values(singular_values(m), m.shape, tol)


def nullspace_basis(
    matrix, tol: Tolerance = DEFAULT_TOLERANCE, reference_scale: float | None = None
) -> DenseMatrix:
    """
    Orthonormal basis (as columns) of the numerical kernel.

    The rank cutoff is relative to the largest singular value unless
    `reference_scale` is given. Rank a restriction `C @ B` against the scale
    of `C`.

    >>> nullspace_basis(np.eye(3)).shape
    (3, 0)
    """
    m = as_dense(matrix)
    if m.size == 0:
        raise SizingError("nullspace_basis needs a nonempty matrix")

    _, sigma, vh = full_svd(m)
    rank = _rank_from_singular_values(sigma, m.shape, tol, reference_scale)
    return np.ascontiguousarray(vh[rank:].T)


def restrict_to_subspace(matrix, basis) -> DenseMatrix:
    """
    Express `matrix` on span(basis): kernel(result) mapped through `basis`
    is kernel(matrix) intersected with span(basis).
    """
    m = as_dense(matrix)
    b = as_dense(basis, "basis")
    if m.shape[1] != b.shape[0]:
        raise SizingError(
            f"Cannot restrict a {m.shape[0]}x{m.shape[1]} operator to a basis "
            f"with {b.shape[0]} rows"
        )
    return m @ b
