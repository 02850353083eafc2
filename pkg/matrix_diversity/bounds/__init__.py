from .evaluators import (
    bound_fd,
    bound_fd2,
    bound_fem,
    bound_main,
    bound_thm2,
    evaluate_bound,
    fd_constant,
    fd_recursive_constant,
    fd_threshold,
)
from .models import BoundResult, TheoremChoices
from .verification import (
    verify_assumption_main,
    verify_claim_sparsity,
    verify_distinct_eigenvalues,
)

__all__ = [
    "BoundResult",
    "TheoremChoices",
    "bound_fd",
    "bound_fd2",
    "bound_fem",
    "bound_main",
    "bound_thm2",
    "evaluate_bound",
    "fd_constant",
    "fd_recursive_constant",
    "fd_threshold",
    "verify_assumption_main",
    "verify_claim_sparsity",
    "verify_distinct_eigenvalues",
]
