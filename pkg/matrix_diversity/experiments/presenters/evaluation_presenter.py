import pandas

from matrix_diversity.icl.models import EvalReport

COLUMNS = ["test_label", "m", "error", "error_kind"]
SLOPE_MARKER = "slope"


class EvaluationPresenter:
    """
    One row per (test, m), then a `slope` row per test holding the fitted
    log-log slope in the error column (empty when it could not be fitted).
    """

    def __init__(self, reports: list[EvalReport]):
        self.reports = reports

    def present(self) -> pandas.DataFrame:
        rows = []
        for report in self.reports:
            kind = report.error_kind.value
            rows.extend(
                [report.label, m, error, kind]
                for m, error in zip(report.prompt_lengths, report.errors)
            )
            rows.append([report.label, SLOPE_MARKER, report.fitted_slope, kind])
        return pandas.DataFrame(rows, columns=COLUMNS, dtype=object)
