"""
The `matdiv` console script: Django's command runner with the project
settings, accepting hyphenated command names (`icl-train`).
"""

import os
import sys

from django.core.management import execute_from_command_line

SETTINGS_MODULE = "matrix_diversity.config.settings"


def command_argv(argv: list[str]) -> list[str]:
    """
    >>> command_argv(["matdiv", "icl-train", "--config", "a-b.json"])
    ['matdiv', 'icl_train', '--config', 'a-b.json']
    """
    if len(argv) > 1 and not argv[1].startswith("-"):
        return [argv[0], argv[1].replace("-", "_"), *argv[2:]]
    return list(argv)


def main(argv: list[str] | None = None) -> None:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", SETTINGS_MODULE)
    execute_from_command_line(command_argv(sys.argv if argv is None else argv))
