"""
Run telemetry, exported to Azure Monitor when MATDIV_TELEMETRY_ENABLED is set
and a connection string is present. Otherwise the events are ordinary log
records on the `matdiv` logger.
"""

import logging
import os
from pathlib import Path

from azure.monitor.opentelemetry import configure_azure_monitor

from matrix_diversity.config.settings import boolean_env

CUSTOM_EVENT_KEY = "microsoft.custom_event.name"
RUN_COMPLETED_EVENT = "matdiv.run-completed"
TRAINING_DIVERGED_EVENT = "matdiv.training-diverged"
ATTRIBUTE_PREFIX = "matdiv."


def event_attributes(event_name: str, attributes: dict) -> dict:
    """
    Log record `extra` for a custom event. Attribute keys are namespaced so
    they cannot clash with LogRecord fields.

    >>> event_attributes("matdiv.run-completed", {"rows": 3})
    {'microsoft.custom_event.name': 'matdiv.run-completed', 'matdiv.rows': 3}
    """
    return {
        CUSTOM_EVENT_KEY: event_name,
        **{f"{ATTRIBUTE_PREFIX}{key}": value for key, value in attributes.items()},
    }


class ExperimentTelemetry:
    def __init__(self) -> None:
        self.logger_name = os.getenv("MATDIV_TELEMETRY_LOGGER_NAME", "matdiv")
        self.logger = logging.getLogger(self.logger_name)

    def export_enabled(self) -> bool:
        return boolean_env("MATDIV_TELEMETRY_ENABLED", False) and bool(
            os.getenv("APPLICATIONINSIGHTS_CONNECTION_STRING", "")
        )

    def configure_azure_monitor(self):
        if self.export_enabled():
            # Only export our own logger, not the SDK's internal logging.
            configure_azure_monitor(logger_name=self.logger_name)
        else:
            logging.getLogger(__name__).debug("Telemetry export not enabled")

    def exception(self, exception_name: str):
        self.logger.exception(exception_name, stack_info=True)

    def run_completed(
        self, command: str, seed: int, output: Path | str, **measurements
    ):
        # Seeds span the full unsigned 64-bit range; exporters take int64.
        attributes = {"command": command, "seed": str(seed), "output": str(output)}
        self.logger.info(
            "%s run finished",
            command,
            extra=event_attributes(RUN_COMPLETED_EVENT, attributes | measurements),
        )

    def training_diverged(self, source: str, step: int):
        self.logger.warning(
            "%s: training diverged at step %d",
            source,
            step,
            extra=event_attributes(
                TRAINING_DIVERGED_EVENT, {"source": source, "step": step}
            ),
        )
