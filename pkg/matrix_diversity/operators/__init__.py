from .laplacians import fd_laplacian_1d, fd_laplacian_nd, fem_laplacian_1d
from .models import (
    MethodChoices,
    PotentialKindChoices,
    PotentialSpec,
    TaskDistribution,
)
from .potentials import (
    fem_potential_matrix,
    lognormal_field_eval,
    sample_fd_potential,
    sample_fem_values,
)
from .sampling import deterministic_part, resolve_spectral_scale, sample_task_matrix

__all__ = [
    "MethodChoices",
    "PotentialKindChoices",
    "PotentialSpec",
    "TaskDistribution",
    "deterministic_part",
    "fd_laplacian_1d",
    "fd_laplacian_nd",
    "fem_laplacian_1d",
    "fem_potential_matrix",
    "lognormal_field_eval",
    "resolve_spectral_scale",
    "sample_fd_potential",
    "sample_fem_values",
    "sample_task_matrix",
]
