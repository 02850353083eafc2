import pandas

from matrix_diversity.bounds.evaluators import EVALUATORS
from matrix_diversity.bounds.models import BoundResult, TheoremChoices
from matrix_diversity.core.exceptions import DomainError

CONSTANT_NAMES = {
    TheoremChoices.THM_MAIN: ("c", "base", "exponent"),
    TheoremChoices.THM2: ("c_V", "base", "exponent"),
    TheoremChoices.THM_FD: ("c", "base", "exponent", "c_recursive"),
    TheoremChoices.THM_FD2: ("c_V", "base", "exponent"),
    TheoremChoices.THM_FEM: ("c", "base", "exponent"),
}


class BoundsPresenter:
    """
    Columns: theorem, the theorem's parameters, raw, clamped, its constants
    (prefixed `const_`) and `error`, which holds the failed hypothesis for
    rows whose parameters fall outside the theorem.
    """

    def __init__(
        self,
        theorem: TheoremChoices,
        outcomes: list[tuple[dict, BoundResult | DomainError]],
    ):
        self.theorem = theorem
        self.outcomes = outcomes

    @property
    def columns(self) -> list[str]:
        return [
            "theorem",
            *EVALUATORS[self.theorem][1],
            "raw",
            "clamped",
            *(f"const_{name}" for name in CONSTANT_NAMES[self.theorem]),
            "error",
        ]

    def present(self) -> pandas.DataFrame:
        rows = [self.present_outcome(params, outcome) for params, outcome in self.outcomes]
        return pandas.DataFrame(rows, columns=self.columns, dtype=object)

    def present_outcome(self, params: dict, outcome: BoundResult | DomainError) -> dict:
        row = {"theorem": self.theorem.value, **params}
        if isinstance(outcome, DomainError):
            row["error"] = (outcome.hypothesis or str(outcome)).replace(",", ";")
            return row

        row["raw"] = outcome.raw_value
        row["clamped"] = outcome.clamped
        for name in CONSTANT_NAMES[self.theorem]:
            row[f"const_{name}"] = outcome.constants[name]
        return row
