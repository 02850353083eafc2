"""
Experiment configs: strict JSON documents validated against
`schemas.SCHEMAS`, then turned into frozen dataclasses.

`to_document()` writes every field, defaults included, so a config parsed
back from `to_json(config)` compares equal to the original.
"""

import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from matrix_diversity.bounds.evaluators import EVALUATORS
from matrix_diversity.bounds.models import TheoremChoices
from matrix_diversity.core.exceptions import ConfigError, DomainError, SizingError
from matrix_diversity.icl.models import ErrorKind, TrainingHyper
from matrix_diversity.linalg.dense import DEFAULT_TOLERANCE, Tolerance
from matrix_diversity.operators.models import PotentialSpec, TaskDistribution

from .schemas import SCHEMAS

VALIDATORS = {command: Draft202012Validator(schema) for command, schema in SCHEMAS.items()}


@contextmanager
def config_key(key: str):
    """
    Re-raise model validation failures as ConfigError naming `key`.
    """
    try:
        yield
    except (DomainError, SizingError) as e:
        raise ConfigError(f"{key}: {e}", key=key) from e


def _strictly_ascending(key: str, values) -> tuple:
    values = tuple(values)
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ConfigError(f"{key} must be strictly ascending: {list(values)}", key=key)
    return values


def dist_from_document(document: dict, key: str = "dist") -> TaskDistribution:
    with config_key(f"{key}/potential"):
        potential = PotentialSpec(**document["potential"])
    with config_key(key):
        return TaskDistribution(
            method=document["method"],
            M=document["M"],
            D=document.get("D", 1),
            potential=potential,
            spectral_scale=document.get("spectral_scale"),
            fem_convention=document.get("fem_convention", "galerkin"),
        )


def dist_to_document(dist: TaskDistribution) -> dict:
    potential = dist.potential
    return {
        "method": dist.method.value,
        "M": dist.M,
        "D": dist.D,
        "potential": {
            "kind": potential.kind.value,
            "p": potential.p,
            "a": potential.a,
            "b": potential.b,
            "terms": potential.terms,
            "alpha": potential.alpha,
            "beta": potential.beta,
            "truncation": potential.truncation,
        },
        "spectral_scale": dist.spectral_scale,
        "fem_convention": dist.fem_convention,
    }


def hyper_from_document(document: dict | None, key: str = "hyper") -> TrainingHyper:
    with config_key(key):
        return TrainingHyper(**(document or {}))


def hyper_to_document(hyper: TrainingHyper) -> dict:
    return {
        "learning_rate": hyper.learning_rate,
        "final_learning_rate": hyper.final_learning_rate,
        "batch_size": hyper.batch_size,
        "steps": hyper.steps,
        "init_scale": hyper.init_scale,
    }


def _with_run_fields(document: dict, config) -> dict:
    if config.seed is not None:
        document["seed"] = config.seed
    if config.output is not None:
        document["output"] = config.output
    return document


@dataclass(frozen=True)
class DiversityConfig:
    command: ClassVar[str] = "diversity"

    dist: TaskDistribution
    p_values: tuple[float, ...]
    N_values: tuple[int, ...]
    trials: int
    augment_with_k: bool
    tolerance: Tolerance = DEFAULT_TOLERANCE
    seed: int | None = None
    output: str | None = None

    @classmethod
    def from_document(cls, document: dict) -> "DiversityConfig":
        with config_key("tolerance"):
            tolerance = Tolerance(**document.get("tolerance", {}))
        return cls(
            dist=dist_from_document(document["dist"]),
            p_values=tuple(document["p_values"]),
            N_values=_strictly_ascending("N_values", document["N_values"]),
            trials=document["trials"],
            augment_with_k=document["augment_with_k"],
            tolerance=tolerance,
            seed=document.get("seed"),
            output=document.get("output"),
        )

    def to_document(self) -> dict:
        return _with_run_fields(
            {
                "command": self.command,
                "dist": dist_to_document(self.dist),
                "p_values": list(self.p_values),
                "N_values": list(self.N_values),
                "trials": self.trials,
                "augment_with_k": self.augment_with_k,
                "tolerance": {
                    "relative": self.tolerance.relative,
                    "absolute": self.tolerance.absolute,
                },
            },
            self,
        )


@dataclass(frozen=True)
class BoundsConfig:
    """
    `grid` maps parameter names to the values swept; rows are the Cartesian
    product in the evaluator's parameter order.
    """

    command: ClassVar[str] = "bounds"

    theorem: TheoremChoices
    grid: dict[str, tuple] = field(default_factory=dict)
    output: str | None = None

    @property
    def parameter_names(self) -> tuple[str, ...]:
        return EVALUATORS[self.theorem][1]

    @classmethod
    def from_document(cls, document: dict) -> "BoundsConfig":
        theorem = TheoremChoices(document["theorem"])
        grid = {name: tuple(values) for name, values in document["grid"].items()}
        names = EVALUATORS[theorem][1]

        missing = [name for name in names if name not in grid]
        if missing:
            raise ConfigError(
                f"grid: {theorem.value} needs values for {', '.join(missing)}",
                key=f"grid/{missing[0]}",
            )
        unused = sorted(set(grid) - set(names))
        if unused:
            raise ConfigError(
                f"grid: {theorem.value} does not take {', '.join(unused)}",
                key=f"grid/{unused[0]}",
            )
        return cls(theorem=theorem, grid=grid, output=document.get("output"))

    def to_document(self) -> dict:
        document = {
            "command": self.command,
            "theorem": self.theorem.value,
            "grid": {name: list(values) for name, values in self.grid.items()},
        }
        if self.output is not None:
            document["output"] = self.output
        return document


@dataclass(frozen=True)
class TrainingRun:
    dist: TaskDistribution
    tasks: int
    prompt_length: int
    hyper: TrainingHyper = field(default_factory=TrainingHyper)

    @classmethod
    def from_document(cls, document: dict, key: str = "") -> "TrainingRun":
        prefix = f"{key}/" if key else ""
        return cls(
            dist=dist_from_document(document["dist"], f"{prefix}dist"),
            tasks=document["tasks"],
            prompt_length=document["prompt_length"],
            hyper=hyper_from_document(document.get("hyper"), f"{prefix}hyper"),
        )

    def to_document(self) -> dict:
        return {
            "dist": dist_to_document(self.dist),
            "tasks": self.tasks,
            "prompt_length": self.prompt_length,
            "hyper": hyper_to_document(self.hyper),
        }


@dataclass(frozen=True)
class IclTrainConfig:
    command: ClassVar[str] = "icl-train"

    run: TrainingRun
    seed: int | None = None
    output: str | None = None

    @classmethod
    def from_document(cls, document: dict) -> "IclTrainConfig":
        return cls(
            run=TrainingRun.from_document(document),
            seed=document.get("seed"),
            output=document.get("output"),
        )

    def to_document(self) -> dict:
        return _with_run_fields({"command": self.command, **self.run.to_document()}, self)


@dataclass(frozen=True)
class IclEvalConfig:
    """
    Weights come from `checkpoint` (or the --checkpoint flag), or are trained
    in the same run from `train`.
    """

    command: ClassVar[str] = "icl-eval"

    tests: tuple[tuple[str, TaskDistribution], ...]
    m_values: tuple[int, ...]
    tasks: int
    error_kind: ErrorKind
    queries_per_task: int = 10
    checkpoint: str | None = None
    train: TrainingRun | None = None
    seed: int | None = None
    output: str | None = None

    @classmethod
    def from_document(cls, document: dict) -> "IclEvalConfig":
        tests = tuple(
            (test["label"], dist_from_document(test["dist"], f"tests/{index}/dist"))
            for index, test in enumerate(document["tests"])
        )
        labels = [label for label, _ in tests]
        if len(set(labels)) != len(labels):
            raise ConfigError(f"tests: labels must be unique: {labels}", key="tests")

        train = document.get("train")
        if train is not None and "checkpoint" in document:
            raise ConfigError("Give either checkpoint or train, not both", key="train")
        return cls(
            tests=tests,
            m_values=_strictly_ascending("m_values", document["m_values"]),
            tasks=document["tasks"],
            error_kind=ErrorKind(document["error_kind"]),
            queries_per_task=document.get("queries_per_task", 10),
            checkpoint=document.get("checkpoint"),
            train=None if train is None else TrainingRun.from_document(train, "train"),
            seed=document.get("seed"),
            output=document.get("output"),
        )

    def to_document(self) -> dict:
        document = {
            "command": self.command,
            "tests": [
                {"label": label, "dist": dist_to_document(dist)} for label, dist in self.tests
            ],
            "m_values": list(self.m_values),
            "tasks": self.tasks,
            "queries_per_task": self.queries_per_task,
            "error_kind": self.error_kind.value,
        }
        if self.checkpoint is not None:
            document["checkpoint"] = self.checkpoint
        if self.train is not None:
            document["train"] = self.train.to_document()
        return _with_run_fields(document, self)


@dataclass(frozen=True)
class GenConfig:
    command: ClassVar[str] = "gen"

    dist: TaskDistribution
    count: int
    include_deterministic: bool = False
    seed: int | None = None
    output: str | None = None

    @classmethod
    def from_document(cls, document: dict) -> "GenConfig":
        return cls(
            dist=dist_from_document(document["dist"]),
            count=document["count"],
            include_deterministic=document.get("include_deterministic", False),
            seed=document.get("seed"),
            output=document.get("output"),
        )

    def to_document(self) -> dict:
        return _with_run_fields(
            {
                "command": self.command,
                "dist": dist_to_document(self.dist),
                "count": self.count,
                "include_deterministic": self.include_deterministic,
            },
            self,
        )


CONFIG_CLASSES = {
    config_class.command: config_class
    for config_class in (DiversityConfig, BoundsConfig, IclTrainConfig, IclEvalConfig, GenConfig)
}


def _error_key(error) -> str:
    path = [str(part) for part in error.absolute_path]
    if error.validator == "additionalProperties":
        allowed = error.schema.get("properties", {})
        path.extend(sorted(set(error.instance) - set(allowed))[:1])
    elif error.validator == "required":
        missing = [name for name in error.validator_value if name not in error.instance]
        path.extend(missing[:1])
    return "/".join(path)


def parse_config(document, command: str | None = None):
    if not isinstance(document, dict):
        raise ConfigError("A config must be a JSON object")
    declared = document.get("command")
    if declared not in CONFIG_CLASSES:
        raise ConfigError(f"Unknown command: {declared!r}", key="command")
    if command is not None and declared != command:
        raise ConfigError(
            f"This config is for {declared!r}, not {command!r}", key="command"
        )

    error = best_match(VALIDATORS[declared].iter_errors(document))
    if error is not None:
        key = _error_key(error)
        raise ConfigError(f"{key or 'config'}: {error.message}", key=key or None)

    return CONFIG_CLASSES[declared].from_document(document)


def load_config(path: Path | str, command: str | None = None):
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path} is not valid JSON: {e}") from e
    return parse_config(document, command)


def to_json(config) -> str:
    return json.dumps(config.to_document(), indent=2, sort_keys=True) + "\n"
