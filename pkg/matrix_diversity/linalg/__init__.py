from .dense import (
    DEFAULT_TOLERANCE,
    DenseMatrix,
    Tolerance,
    as_dense,
    kron,
    nullspace_basis,
    numerical_rank,
    restrict_to_subspace,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "DenseMatrix",
    "Tolerance",
    "as_dense",
    "kron",
    "nullspace_basis",
    "numerical_rank",
    "restrict_to_subspace",
]
