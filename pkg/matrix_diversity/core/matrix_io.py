"""
Plain-text matrix format shared by the `gen` command and ICL checkpoints.

A header line ``rows cols`` followed by one line per row of whitespace
separated decimal entries written with 17 significant digits, which is
enough to round-trip any float64 exactly.
"""

from pathlib import Path
from typing import TextIO

import numpy as np

from .exceptions import DomainError, SizingError

ENCODING = "ASCII"


def format_entry(value: float) -> str:
    """
    >>> format_entry(0.1)
    '0.10000000000000001'
    >>> format_entry(-2.0)
    '-2'
    """
    return f"{float(value):.17g}"


def dumps_matrix(matrix: np.ndarray) -> str:
    """
    >>> print(dumps_matrix(np.array([[1.0, 2.5], [0.0, -4.0]])), end="")
    2 2
    1 2.5
    0 -4
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2:
        raise SizingError(f"Expected a 2-d matrix, got {matrix.ndim} dimensions")
    if not np.all(np.isfinite(matrix)):
        raise DomainError("Refusing to write a matrix with non-finite entries")

    rows, cols = matrix.shape
    lines = [f"{rows} {cols}"]
    lines.extend(" ".join(format_entry(v) for v in row) for row in matrix)
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> np.ndarray:
    tokens = text.split()
    if len(tokens) < 2:
        raise SizingError("Missing 'rows cols' header")

    try:
        rows, cols = int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise SizingError(f"Invalid header: {tokens[0]} {tokens[1]}") from e

    entries = tokens[2:]
    if rows < 0 or cols < 0 or len(entries) != rows * cols:
        raise SizingError(
            f"Header declares {rows}x{cols} but {len(entries)} entries were found"
        )

    data = np.array([float(e) for e in entries], dtype=np.float64).reshape(rows, cols)
    if not np.all(np.isfinite(data)):
        raise DomainError("Matrix file contains non-finite entries")
    return data


def write_matrix(target: Path | str | TextIO, matrix: np.ndarray) -> None:
    content = dumps_matrix(matrix)
    if hasattr(target, "write"):
        target.write(content)
        return
    Path(target).write_text(content, encoding=ENCODING, newline="\n")


def read_matrix(source: Path | str | TextIO) -> np.ndarray:
    if hasattr(source, "read"):
        return loads_matrix(source.read())
    return loads_matrix(Path(source).read_text(encoding=ENCODING))
