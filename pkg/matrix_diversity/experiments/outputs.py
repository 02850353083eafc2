"""
Deterministic writers for command outputs: CSV with '\n' line endings and
no quoting, SVG and JSON sidecars.
"""

import csv
import json
from logging import getLogger
from pathlib import Path

import pandas

logger = getLogger(__name__)


def csv_text(dataframe: pandas.DataFrame) -> str:
    return dataframe.to_csv(index=False, lineterminator="\n", quoting=csv.QUOTE_NONE)


def write_csv(path: Path, dataframe: pandas.DataFrame) -> Path:
    path.write_text(csv_text(dataframe), encoding="utf-8", newline="\n")
    logger.info("Wrote %d rows to %s", len(dataframe), path)
    return path


def write_svg(path: Path, svg: str) -> Path:
    path.write_text(svg, encoding="utf-8", newline="\n")
    logger.info("Wrote plot to %s", path)
    return path


def write_json(path: Path, document: dict) -> Path:
    path.write_text(
        json.dumps(document, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n"
    )
    return path
