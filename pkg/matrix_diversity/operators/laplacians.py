"""
Deterministic discretized Laplacians.

The finite difference matrices follow the printed convention: a -2 diagonal
scaled by M^2, so the physical operator -Laplacian is the negation of what
`fd_laplacian_1d` returns. The finite element matrix is the stiffness matrix
of piecewise-linear hat functions on M uniformly spaced nodes of [0, 1],
including half hats at both ends.
"""

import numpy as np

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.linalg.dense import DenseMatrix, check_size, kron


def tridiagonal(n: int, lower: float, diagonal: float, upper: float) -> DenseMatrix:
    """
    >>> tridiagonal(3, 1, -2, 1).tolist()
    [[-2.0, 1.0, 0.0], [1.0, -2.0, 1.0], [0.0, 1.0, -2.0]]
    """
    return (
        np.diag(np.full(n, float(diagonal)))
        + np.diag(np.full(n - 1, float(lower)), -1)
        + np.diag(np.full(n - 1, float(upper)), 1)
    )


def fd_laplacian_1d(M: int) -> DenseMatrix:
    if M < 2:
        raise DomainError(f"The finite difference Laplacian needs M >= 2: M={M}")
    return float(M) ** 2 * tridiagonal(M, 1, -2, 1)


def fd_laplacian_nd(M: int, D: int) -> DenseMatrix:
    """
    Kronecker sum over axes: sum_i I_{M^(i-1)} (x) Delta_1 (x) I_{M^(D-i)}.
    """
    if D < 1:
        raise DomainError(f"Spatial dimension must be positive: D={D}")
    delta_1 = fd_laplacian_1d(M)
    if D == 1:
        return delta_1

    d = M**D
    check_size(d, d)
    result = np.zeros((d, d))
    for i in range(1, D + 1):
        left = np.eye(M ** (i - 1))
        right = np.eye(M ** (D - i))
        result += kron(kron(left, delta_1), right)
    return result


def fem_laplacian_1d(M: int) -> DenseMatrix:
    """
    Stiffness matrix entries are the integrals of products of hat function
    derivatives. Interior rows are (M-1)*(-1, 2, -1); each boundary half hat
    only covers one subinterval so the corners are (M-1).

    >>> fem_laplacian_1d(4).tolist()[1]
    [-3.0, 6.0, -3.0, 0.0]
    """
    if M < 3:
        raise DomainError(f"The finite element Laplacian needs M >= 3: M={M}")
    stiffness = tridiagonal(M, -1, 2, -1)
    stiffness[0, 0] = stiffness[-1, -1] = 1.0
    return float(M - 1) * stiffness
