"""
Centralizer triviality by rank computations.

X commutes with A exactly when Vec(X) lies in the kernel of
I (x) A - A^T (x) I (column-stacking Vec). The commutant of a set is the
common kernel of these operators, and the set has trivial centralizer when
that kernel is one dimensional (the multiples of the identity).
"""

from collections.abc import Sequence
from logging import getLogger

import numpy as np

from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.linalg.dense import (
    DEFAULT_TOLERANCE,
    DenseMatrix,
    Tolerance,
    as_dense,
    kron,
    nullspace_basis,
    numerical_rank,
    restrict_to_subspace,
    singular_values,
)

from .models import CentralizerReport

logger = getLogger(__name__)


def commutator_operator(a) -> DenseMatrix:
    """
    >>> commutator_operator(np.eye(2)).tolist()
    [[0.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0]]
    """
    a = as_dense(a, "a")
    rows, cols = a.shape
    if rows != cols:
        raise DomainError(f"Commutators need a square matrix, got {rows}x{cols}")
    identity = np.eye(rows)
    return kron(identity, a) - kron(a.T, identity)


def operator_scale(a: DenseMatrix) -> float:
    """
    Upper bound 2 sigma_max(A) on the spectral norm of the commutator operator.

    >>> operator_scale(np.diag([1.0, -3.0]))
    6.0
    """
    return 2.0 * float(singular_values(a)[0]) if a.size else 0.0


def _validated(matrices) -> list[DenseMatrix]:
    matrices = [as_dense(m) for m in matrices]
    if not matrices:
        raise DomainError("The matrix set must be nonempty")
    d = matrices[0].shape[0]
    for m in matrices:
        if m.shape != (d, d):
            raise DomainError(
                f"All matrices must be {d}x{d} and square, got {m.shape[0]}x{m.shape[1]}"
            )
    return matrices


def commutant_basis(
    matrices: Sequence, tol: Tolerance = DEFAULT_TOLERANCE
) -> DenseMatrix:
    """
    Orthonormal basis of {Vec(X) : XA = AX for every A in the set}.

    The kernel of the first commutator is intersected with the kernel of each
    later one by restricting that operator to the current basis, so memory
    stays at one d^2 x d^2 operator however many matrices there are.
    """
    matrices = _validated(matrices)

    scale = operator_scale(matrices[0])
    basis = nullspace_basis(commutator_operator(matrices[0]), tol, scale)
    for index, matrix in enumerate(matrices[1:], start=2):
        if basis.shape[1] <= 1:
            logger.debug("Commutant is one dimensional after %d matrices", index - 1)
            break
        scale = max(scale, operator_scale(matrix))
        restricted = restrict_to_subspace(commutator_operator(matrix), basis)
        basis = basis @ nullspace_basis(restricted, tol, scale)
    return basis


def is_trivial_centralizer(
    matrices: Sequence,
    tol: Tolerance = DEFAULT_TOLERANCE,
    augmented: bool = False,
) -> CentralizerReport:
    """
    >>> is_trivial_centralizer([np.diag([1.0, 2.0]), [[0.0, 1.0], [1.0, 0.0]]]).trivial
    True
    """
    matrices = _validated(matrices)
    basis = commutant_basis(matrices, tol)
    return CentralizerReport(
        d=matrices[0].shape[0],
        n_matrices=len(matrices),
        commutant_dim=basis.shape[1],
        tolerance=tol,
        augmented=augmented,
    )


def stacked_centralizer_report(
    matrices: Sequence,
    tol: Tolerance = DEFAULT_TOLERANCE,
    augmented: bool = False,
) -> CentralizerReport:
    """
    Rank the full N d^2 x d^2 stack of commutator operators in one go.
    """
    matrices = _validated(matrices)
    d = matrices[0].shape[0]
    stacked = np.vstack([commutator_operator(m) for m in matrices])
    return CentralizerReport(
        d=d,
        n_matrices=len(matrices),
        commutant_dim=d**2 - numerical_rank(stacked, tol),
        tolerance=tol,
        augmented=augmented,
    )
