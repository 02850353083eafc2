"""
Closed-form lower bounds on the probability that N sampled matrices have a
trivial centralizer.

Every evaluator checks its theorem's hypotheses and raises DomainError with
the hypothesis text when they fail. Vacuous bounds are not errors: the raw
value is reported as is and `BoundResult.clamped` maps it into [0, 1].
"""

import math

from matrix_diversity.core.exceptions import DomainError

from .models import BoundResult, TheoremChoices


def _require(condition: bool, message: str, hypothesis: str):
    if not condition:
        raise DomainError(message, hypothesis=hypothesis)


def _check_probability(p: float):
    _require(0 < p < 1, f"p must lie in (0, 1): p={p}", "0 < p < 1")


def _check_constant(name: str, value: float):
    _require(0 < value < 1, f"{name} must lie in (0, 1): {name}={value}", f"0 < {name} < 1")


def fd_threshold(p: float) -> float:
    """
    Smallest grid size for which the FD bound holds when D >= 2.

    >>> fd_threshold(0.5)
    18.0
    """
    return 9 / (2 * p * (1 - p))


def fd_constant(M: int, D: int, p: float) -> float:
    """
    Upper bound on the probability that consecutive eigenvectors of the FD
    Laplacian are orthogonal under a Bernoulli potential.
    """
    base = 1 / math.sqrt(1 + 2 * M * p * (1 - p) / 3)
    return base if D == 1 else 2 * base


def fd_recursive_constant(M: int, D: int, p: float) -> float:
    """
    c_1 = (1 + (2/3) M p(1-p))^(-1/2) and
    c_D = max(c_{D-1}, (1 + 2(M-2) p(1-p))^(-(D-1)/2) + c_1).
    """
    c_1 = fd_constant(M, 1, p)
    c = c_1
    for level in range(2, D + 1):
        tail = (1 + 2 * (M - 2) * p * (1 - p)) ** (-(level - 1) / 2)
        c = max(c, tail + c_1)
    return c


def bound_main(d: int, c: float, N: int) -> BoundResult:
    """
    >>> bound_main(5, 0.5, 10).raw_value
    0.99609375
    """
    _require(d >= 2, f"d must be at least 2: d={d}", "d >= 2")
    _check_constant("c", c)
    _require(N >= 1, f"N must be positive: N={N}", "N >= 1")

    return BoundResult(
        theorem=TheoremChoices.THM_MAIN,
        raw_value=1 - (d - 1) * c**N,
        constants={"c": c, "base": c, "exponent": N},
        params={"d": d, "c": c, "N": N},
    )


def bound_thm2(d: int, c_V: float, N: int) -> BoundResult:
    """
    Odd N discards the last sample, so N and N + 1 give the same bound when
    N is even.
    """
    _require(d >= 2, f"d must be at least 2: d={d}", "d >= 2")
    _check_constant("c_V", c_V)
    _require(N >= 2, f"N must be at least 2: N={N}", "N >= 2")

    exponent = N // 2
    return BoundResult(
        theorem=TheoremChoices.THM2,
        raw_value=1 - d * (d - 1) * c_V**exponent,
        constants={"c_V": c_V, "base": c_V, "exponent": exponent},
        params={"d": d, "c_V": c_V, "N": N},
    )


def bound_fd(M: int, D: int, p: float, N: int) -> BoundResult:
    _check_probability(p)
    _require(D >= 1, f"D must be positive: D={D}", "D >= 1")
    _require(N >= 1, f"N must be positive: N={N}", "N >= 1")
    if D == 1:
        _require(M >= 2, f"M must be at least 2: M={M}", "M >= 2")
    else:
        threshold = fd_threshold(p)
        _require(
            M >= threshold,
            f"M={M} is below the threshold 9/(2p(1-p)) = {threshold:g} for D={D}",
            f"M >= 9/(2p(1-p)) = {threshold:g}",
        )

    c = fd_constant(M, D, p)
    return BoundResult(
        theorem=TheoremChoices.THM_FD,
        raw_value=1 - (M**D - 1) * c**N,
        constants={
            "c": c,
            "base": c,
            "exponent": N,
            "c_recursive": fd_recursive_constant(M, D, p),
        },
        params={"M": M, "D": D, "p": p, "N": N},
    )


def bound_fd2(M: int, p: float, N: int) -> BoundResult:
    """
    >>> bound_fd2(5, 0.5, 10).constants["c_V"]
    0.875
    """
    _require(M >= 2, f"M must be at least 2: M={M}", "M >= 2")
    _check_probability(p)
    _require(N >= 2, f"N must be at least 2: N={N}", "N >= 2")

    c_V = 1 - 2 * p**2 * (1 - p) ** 2
    exponent = N // 2
    return BoundResult(
        theorem=TheoremChoices.THM_FD2,
        raw_value=1 - M * (M - 1) * c_V**exponent,
        constants={"c_V": c_V, "base": c_V, "exponent": exponent},
        params={"M": M, "p": p, "N": N},
    )


def bound_fem(M: int, p: float, N: int) -> BoundResult:
    _require(M >= 5, f"M must be at least 5: M={M}", "M >= 5")
    _check_probability(p)
    _require(N >= 1, f"N must be positive: N={N}", "N >= 1")

    c = 1 / math.sqrt(1 + 2 * p * (1 - p))
    return BoundResult(
        theorem=TheoremChoices.THM_FEM,
        raw_value=1 - (M - 1) * c**N,
        constants={"c": c, "base": c, "exponent": N},
        params={"M": M, "p": p, "N": N},
    )


EVALUATORS = {
    TheoremChoices.THM_MAIN: (bound_main, ("d", "c", "N")),
    TheoremChoices.THM2: (bound_thm2, ("d", "c_V", "N")),
    TheoremChoices.THM_FD: (bound_fd, ("M", "D", "p", "N")),
    TheoremChoices.THM_FD2: (bound_fd2, ("M", "p", "N")),
    TheoremChoices.THM_FEM: (bound_fem, ("M", "p", "N")),
}


def evaluate_bound(theorem: TheoremChoices | str, **params) -> BoundResult:
    """
    Dispatch on the theorem name with keyword parameters.

    >>> evaluate_bound("Thm2", d=2, c_V=0.5, N=5).raw_value
    0.5
    """
    evaluator, names = EVALUATORS[TheoremChoices(theorem)]
    missing = [name for name in names if name not in params]
    if missing:
        raise DomainError(f"{theorem} needs parameters {', '.join(missing)}")
    return evaluator(**{name: params[name] for name in names})
