from logging import getLogger

from django.core.management.base import BaseCommand

from matrix_diversity.core.exceptions import ConfigError
from matrix_diversity.core.services.telemetry import ExperimentTelemetry
from matrix_diversity.experiments.config import IclEvalConfig, load_config
from matrix_diversity.experiments.outputs import write_csv, write_svg
from matrix_diversity.experiments.plots import render_svg, scaling_plot, series_from_arrays
from matrix_diversity.experiments.presenters.evaluation_presenter import (
    EvaluationPresenter,
)
from matrix_diversity.icl.checkpoints import read_checkpoint
from matrix_diversity.icl.evaluation import evaluate, ood_suite

from .helpers.exception_handler import exception_handler
from .helpers.run_options import RunOptions, add_run_arguments

logger = getLogger(__name__)
INSIGHTS_ERROR_NAME = "IclEvalCommandError"


class Command(BaseCommand):
    """
    Evaluate the linear transformer against one or more test distributions
    over a grid of inference prompt lengths.

    The weights come from a checkpoint directory (--checkpoint or the
    config's `checkpoint` key), or are trained first from the config's
    `train` block. Writes evaluation.csv, plus evaluation.svg with --svg.
    """

    help = "Evaluate in-context learning error against prompt length"

    def add_arguments(self, parser):
        add_run_arguments(parser)
        parser.add_argument("--checkpoint", help="Directory holding P.txt and Q.txt")

    def handle(self, *args, **options):
        with exception_handler(INSIGHTS_ERROR_NAME):
            logger.info("IclEval command started")

            config = load_config(options["config"], IclEvalConfig.command)
            run = RunOptions.resolve(options, config)
            out = run.prepare_output()

            reports = self.reports(config, run, options.get("checkpoint"))
            write_csv(out / "evaluation.csv", EvaluationPresenter(reports).present())

            if run.svg:
                write_svg(out / "evaluation.svg", render_svg(self.plot(config, reports)))

            ExperimentTelemetry().run_completed(
                "icl-eval", run.seed, out, tests=len(reports)
            )
            logger.info("IclEval command finished")

    def reports(self, config: IclEvalConfig, run: RunOptions, checkpoint: str | None):
        rng = run.rng()
        checkpoint = checkpoint or config.checkpoint

        if checkpoint is not None:
            params = read_checkpoint(checkpoint)
            return [
                evaluate(
                    params,
                    dist,
                    config.m_values,
                    config.tasks,
                    config.queries_per_task,
                    config.error_kind,
                    rng.child(index),
                    label=label,
                    threads=run.threads,
                )
                for index, (label, dist) in enumerate(config.tests, start=1)
            ]

        if config.train is None:
            raise ConfigError(
                "No weights to evaluate: give a checkpoint or a train block",
                key="checkpoint",
            )
        return ood_suite(
            config.train.dist,
            config.tests,
            tasks=config.train.tasks,
            n=config.train.prompt_length,
            hyper=config.train.hyper,
            m_values=config.m_values,
            test_tasks=config.tasks,
            queries_per_task=config.queries_per_task,
            error_kind=config.error_kind,
            rng=rng,
            threads=run.threads,
        )

    def plot(self, config: IclEvalConfig, reports):
        return scaling_plot(
            "In-context learning error against prompt length",
            config.error_kind.value,
            [
                series_from_arrays(report.label, report.prompt_lengths, report.errors)
                for report in reports
            ],
        )
