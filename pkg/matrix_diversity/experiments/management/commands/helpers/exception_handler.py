from contextlib import contextmanager

from django.core.management.base import CommandError

from matrix_diversity.core.exceptions import (
    ConfigError,
    DivergenceError,
    DomainError,
    NumericError,
)
from matrix_diversity.core.services.telemetry import ExperimentTelemetry

CONFIG_ERROR_CODE = 2
NUMERIC_ERROR_CODE = 3
IO_ERROR_CODE = 4


def returncode_for(error: Exception) -> int:
    if isinstance(error, ConfigError):
        return CONFIG_ERROR_CODE
    if isinstance(error, NumericError | DomainError):
        return NUMERIC_ERROR_CODE
    if isinstance(error, OSError):
        return IO_ERROR_CODE
    return 1


@contextmanager
def exception_handler(exception_name):
    try:
        yield
    except CommandError:
        raise
    except Exception as e:
        telemetry = ExperimentTelemetry()
        telemetry.exception(f"{exception_name}: {e}")
        if isinstance(e, DivergenceError):
            telemetry.training_diverged(exception_name, e.step)
        raise CommandError(e, returncode=returncode_for(e)) from e
