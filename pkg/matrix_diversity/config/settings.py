"""
Django settings for the matrix_diversity project.

The project has no database and serves no requests: Django provides the
management command runner behind the `matdiv` CLI, configuration loading and
logging setup.
"""

import os
import sys
from os import environ
from pathlib import Path

from dotenv import load_dotenv


def boolean_env(key, default=None):
    value = environ.get(key)
    return default if value is None else value in ("True", "true", "1")


def int_env(key, default=None):
    value = environ.get(key)
    return default if value in (None, "") else int(value)


BASE_DIR = Path(__file__).resolve().parent.parent

# loads the configs from .env in local development
load_dotenv(BASE_DIR / "config" / ".env")

SECRET_KEY = environ.get("SECRET_KEY", "matdiv-has-no-web-surface")

DEBUG = boolean_env("DEBUG", default=False)

INSTALLED_APPS = [
    "matrix_diversity.core",
    "matrix_diversity.experiments",
]

DATABASES = {}

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.jinja2.Jinja2",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "environment": "matrix_diversity.config.jinja2_env.environment",
        },
    },
]

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# Experiment defaults; CLI flags and config keys take precedence.
MATDIV_THREADS = int_env("MATDIV_THREADS", default=os.cpu_count() or 1)
MATDIV_OUTPUT_DIR = Path(environ.get("MATDIV_OUTPUT_DIR", "out"))
MATDIV_DEFAULT_SEED = int_env("MATDIV_DEFAULT_SEED", default=0)

LOG_LEVEL = environ.get("LOG_LEVEL", "INFO")
LOGGING = {
    "version": 1,  # the dictConfig format version
    "disable_existing_loggers": False,  # retain the default loggers
    "formatters": {
        "verbose": {
            "format": "%(asctime)s [%(process)d] [%(levelname)s] [%(module)s] %(message)s",
            "datefmt": "[%Y-%m-%d %H:%M:%S %z]",
            "class": "logging.Formatter",
        }
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
            "stream": sys.stdout,
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "WARNING",
    },
    "loggers": {
        "matrix_diversity": {
            "level": LOG_LEVEL,
            "handlers": ["console"],
            "propagate": False,
        },
        "matdiv": {
            "level": LOG_LEVEL,
            "handlers": ["console"],
            "propagate": False,
        },
        "django": {
            "level": "INFO",
            "handlers": ["console"],
            "propagate": False,
        },
    },
}
