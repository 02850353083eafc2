"""
On-disk checkpoints: `P.txt` and `Q.txt` in the matrix text format plus a
`metadata.json` sidecar describing how the weights were trained.
"""

import json
from dataclasses import asdict
from logging import getLogger
from pathlib import Path

from matrix_diversity.core.exceptions import ConfigError, SizingError
from matrix_diversity.core.matrix_io import read_matrix, write_matrix

from .models import TrainMeta, TransformerParams

logger = getLogger(__name__)

P_FILENAME = "P.txt"
Q_FILENAME = "Q.txt"
METADATA_FILENAME = "metadata.json"


def metadata_document(params: TransformerParams) -> dict:
    document = {"d": params.d}
    if params.train_meta is not None:
        meta = asdict(params.train_meta)
        meta["loss_history"] = [list(entry) for entry in params.train_meta.loss_history]
        document.update(meta)
    return document


def write_checkpoint(directory: Path | str, params: TransformerParams) -> Path:
    directory = Path(directory)
    directory.mkdir(exist_ok=True)
    write_matrix(directory / P_FILENAME, params.P)
    write_matrix(directory / Q_FILENAME, params.Q)
    (directory / METADATA_FILENAME).write_text(
        json.dumps(metadata_document(params), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
        newline="\n",
    )
    logger.info("Wrote checkpoint to %s", directory)
    return directory


def read_checkpoint(directory: Path | str) -> TransformerParams:
    directory = Path(directory)
    P = read_matrix(directory / P_FILENAME)
    Q = read_matrix(directory / Q_FILENAME)

    metadata_path = directory / METADATA_FILENAME
    train_meta = None
    if metadata_path.exists():
        try:
            document = json.loads(metadata_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ConfigError(f"Unreadable checkpoint metadata: {e}", key="metadata") from e

        d = document.pop("d", None)
        if d is not None and d != P.shape[0]:
            raise SizingError(f"Metadata declares d={d} but P is {P.shape[0]}x{P.shape[1]}")
        if document:
            history = document.pop("loss_history", [])
            try:
                train_meta = TrainMeta(
                    **document,
                    loss_history=tuple((int(step), float(loss)) for step, loss in history),
                )
            except TypeError as e:
                raise ConfigError(f"Unexpected checkpoint metadata: {e}", key="metadata") from e

    return TransformerParams(P=P, Q=Q, train_meta=train_meta)
