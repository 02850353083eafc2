from logging import getLogger

from django.core.management.base import BaseCommand

from matrix_diversity.core.matrix_io import write_matrix
from matrix_diversity.core.services.telemetry import ExperimentTelemetry
from matrix_diversity.experiments.config import GenConfig, load_config
from matrix_diversity.experiments.outputs import write_json
from matrix_diversity.operators.sampling import (
    deterministic_part,
    resolve_spectral_scale,
    sample_task_matrix,
)

from .helpers.exception_handler import exception_handler
from .helpers.run_options import RunOptions, add_run_arguments

logger = getLogger(__name__)
INSIGHTS_ERROR_NAME = "GenCommandError"


class Command(BaseCommand):
    """
    Write sampled task matrices in the matrix text format, optionally the
    deterministic part, and a manifest.json describing the run.
    """

    help = "Sample task matrices to text files"

    def add_arguments(self, parser):
        add_run_arguments(parser, svg=False)

    def handle(self, *args, **options):
        with exception_handler(INSIGHTS_ERROR_NAME):
            logger.info("Gen command started")

            config = load_config(options["config"], GenConfig.command)
            run = RunOptions.resolve(options, config)
            out = run.prepare_output()
            rng = run.rng()

            width = max(3, len(str(config.count - 1)))
            files = []
            for index in range(config.count):
                name = f"sample_{index:0{width}d}.txt"
                write_matrix(out / name, sample_task_matrix(config.dist, rng.child(index)))
                files.append(name)

            if config.include_deterministic:
                write_matrix(out / "deterministic.txt", deterministic_part(config.dist))
                files.append("deterministic.txt")

            write_json(
                out / "manifest.json",
                {
                    "config": config.to_document(),
                    "seed": run.seed,
                    "d": config.dist.d,
                    "spectral_scale": resolve_spectral_scale(config.dist),
                    "files": files,
                },
            )
            logger.info("Gen command wrote %d matrices to %s", len(files), out)
            ExperimentTelemetry().run_completed("gen", run.seed, out, files=len(files))
            logger.info("Gen command finished")
