from logging import getLogger

from django.core.management.base import BaseCommand

from matrix_diversity.core.services.telemetry import ExperimentTelemetry
from matrix_diversity.experiments.config import IclTrainConfig, load_config
from matrix_diversity.icl.checkpoints import write_checkpoint
from matrix_diversity.icl.training import train

from .helpers.exception_handler import exception_handler
from .helpers.run_options import RunOptions, add_run_arguments

logger = getLogger(__name__)
INSIGHTS_ERROR_NAME = "IclTrainCommandError"


class Command(BaseCommand):
    """
    Train the linear transformer on prompts from one task distribution and
    write P.txt, Q.txt and metadata.json to the output directory.
    """

    help = "Train the in-context learning model"

    def add_arguments(self, parser):
        add_run_arguments(parser, svg=False)

    def handle(self, *args, **options):
        with exception_handler(INSIGHTS_ERROR_NAME):
            logger.info("IclTrain command started")

            config = load_config(options["config"], IclTrainConfig.command)
            run = RunOptions.resolve(options, config)
            out = run.prepare_output()

            training = config.run
            params = train(
                training.dist,
                training.tasks,
                training.prompt_length,
                training.hyper,
                run.rng(),
            )
            write_checkpoint(out, params)

            self.stdout.write(f"final_train_loss {params.train_meta.final_train_loss!r}")
            ExperimentTelemetry().run_completed(
                "icl-train",
                run.seed,
                out,
                final_train_loss=params.train_meta.final_train_loss,
            )
            logger.info("IclTrain command finished")
