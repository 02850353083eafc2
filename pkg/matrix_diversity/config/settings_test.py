# ruff: noqa: F403, F405
from os import environ

# Never export telemetry from test runs
environ["MATDIV_TELEMETRY_ENABLED"] = "0"

from .settings import *

SECRET_KEY = "testing"

MATDIV_THREADS = 2
MATDIV_DEFAULT_SEED = 0

LOGGING["loggers"]["matrix_diversity"]["level"] = "DEBUG"
