from .checkpoints import read_checkpoint, write_checkpoint
from .evaluation import evaluate, fitted_log_log_slope, ood_suite
from .models import (
    ErrorKind,
    EvalReport,
    Prompt,
    TrainingHyper,
    TrainMeta,
    TransformerParams,
)
from .prompts import TrainingSet, build_training_set, sample_prompt
from .training import fit, train
from .transformer import empirical_risk, prompt_moment, tf_forward

__all__ = [
    "ErrorKind",
    "EvalReport",
    "Prompt",
    "TrainMeta",
    "TrainingHyper",
    "TrainingSet",
    "TransformerParams",
    "build_training_set",
    "empirical_risk",
    "evaluate",
    "fit",
    "fitted_log_log_slope",
    "ood_suite",
    "prompt_moment",
    "read_checkpoint",
    "sample_prompt",
    "tf_forward",
    "train",
    "write_checkpoint",
]
