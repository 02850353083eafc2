from logging import getLogger

from django.core.management.base import BaseCommand

from matrix_diversity.centralizer.estimation import estimate_diversity_probability
from matrix_diversity.core.services.telemetry import ExperimentTelemetry
from matrix_diversity.experiments.config import DiversityConfig, load_config
from matrix_diversity.experiments.outputs import write_csv, write_svg
from matrix_diversity.experiments.plots import probability_plot, render_svg, series_from_arrays
from matrix_diversity.experiments.presenters.diversity_presenter import DiversityPresenter

from .helpers.exception_handler import exception_handler
from .helpers.run_options import RunOptions, add_run_arguments

logger = getLogger(__name__)
INSIGHTS_ERROR_NAME = "DiversityCommandError"


class Command(BaseCommand):
    """
    Monte Carlo estimate of the probability that N sampled task matrices
    have a trivial centralizer, swept over the Bernoulli probability p and
    the sample size N.

    Writes diversity.csv and summary.csv to the output directory, plus
    diversity.svg with --svg. Every N for a given p reuses the same trials,
    so the estimates are monotone in N.
    """

    help = "Estimate the diversity probability over a (p, N) grid"

    def add_arguments(self, parser):
        add_run_arguments(parser)

    def handle(self, *args, **options):
        with exception_handler(INSIGHTS_ERROR_NAME):
            logger.info("Diversity command started")

            config = load_config(options["config"], DiversityConfig.command)
            run = RunOptions.resolve(options, config)
            out = run.prepare_output()

            sweep = self.sweep(config, run)
            presenter = DiversityPresenter(config.dist, sweep)
            table = presenter.present()
            write_csv(out / "diversity.csv", table)
            write_csv(out / "summary.csv", presenter.present_summary())

            if run.svg:
                write_svg(out / "diversity.svg", render_svg(self.plot(config, sweep)))

            ExperimentTelemetry().run_completed(
                "diversity", run.seed, out, rows=len(table), trials=config.trials
            )
            logger.info("Diversity command finished")

    def sweep(self, config: DiversityConfig, run: RunOptions) -> dict:
        sweep = {}
        for index, p in enumerate(config.p_values):
            dist = config.dist
            if dist.potential.is_bernoulli:
                dist = dist.with_potential(p=p)
            rng = run.rng().child(index)

            estimates = []
            for N in config.N_values:
                estimate = estimate_diversity_probability(
                    dist,
                    N,
                    config.trials,
                    config.augment_with_k,
                    rng,
                    tol=config.tolerance,
                    threads=run.threads,
                )
                logger.info(
                    "p=%g N=%d: %d of %d trials trivial",
                    p,
                    N,
                    estimate.successes,
                    estimate.trials,
                )
                estimates.append(estimate)
            sweep[p] = estimates
        return sweep

    def plot(self, config: DiversityConfig, sweep: dict):
        dist = config.dist
        return probability_plot(
            f"Trivial centralizer probability, {dist.method.value} M={dist.M} D={dist.D}",
            "number of samples N",
            [
                series_from_arrays(
                    f"p = {p:g}", [e.N for e in estimates], [e.p_hat for e in estimates]
                )
                for p, estimates in sweep.items()
            ],
        )
