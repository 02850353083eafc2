from itertools import product
from logging import getLogger

from django.core.management.base import BaseCommand, CommandError

from matrix_diversity.bounds.evaluators import evaluate_bound
from matrix_diversity.core.exceptions import DomainError
from matrix_diversity.core.services.telemetry import ExperimentTelemetry
from matrix_diversity.experiments.config import BoundsConfig, load_config
from matrix_diversity.experiments.outputs import write_csv
from matrix_diversity.experiments.presenters.bounds_presenter import BoundsPresenter

from .helpers.exception_handler import NUMERIC_ERROR_CODE, exception_handler
from .helpers.run_options import RunOptions, add_run_arguments

logger = getLogger(__name__)
INSIGHTS_ERROR_NAME = "BoundsCommandError"


class Command(BaseCommand):
    """
    Evaluate one closed-form probability bound over the Cartesian product of
    its parameter grid and write bounds.csv.

    Grid points outside the theorem's hypotheses become rows carrying the
    failed hypothesis; the file is still written and the command then exits
    with the numeric failure code.
    """

    help = "Evaluate a probability lower bound over a parameter grid"

    def add_arguments(self, parser):
        add_run_arguments(parser, svg=False)

    def handle(self, *args, **options):
        with exception_handler(INSIGHTS_ERROR_NAME):
            logger.info("Bounds command started")

            config = load_config(options["config"], BoundsConfig.command)
            run = RunOptions.resolve(options, config)
            out = run.prepare_output()

            outcomes = self.evaluate(config)
            write_csv(out / "bounds.csv", BoundsPresenter(config.theorem, outcomes).present())

            failures = sum(isinstance(outcome, DomainError) for _, outcome in outcomes)
            ExperimentTelemetry().run_completed(
                "bounds", run.seed, out, rows=len(outcomes), failures=failures
            )
            if failures:
                raise CommandError(
                    f"{failures} of {len(outcomes)} grid points violate the "
                    f"hypotheses of {config.theorem.value}",
                    returncode=NUMERIC_ERROR_CODE,
                )

            logger.info("Bounds command finished")

    def evaluate(self, config: BoundsConfig) -> list:
        names = config.parameter_names
        outcomes = []
        for values in product(*(config.grid[name] for name in names)):
            params = dict(zip(names, values))
            try:
                outcome = evaluate_bound(config.theorem, **params)
            except DomainError as e:
                logger.warning("%s at %s: %s", config.theorem.value, params, e)
                outcome = e
            outcomes.append((params, outcome))
        return outcomes
