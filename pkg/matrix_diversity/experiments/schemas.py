"""
JSON Schemas (Draft 2020-12) for experiment config documents, one per
command. Every object is closed with `additionalProperties: false`.
"""

U64_MAX = 2**64 - 1

DRAFT = "https://json-schema.org/draft/2020-12/schema"

POSITIVE_INT = {"type": "integer", "minimum": 1}
SEED = {"type": "integer", "minimum": 0, "maximum": U64_MAX}
OUTPUT = {"type": "string", "minLength": 1}

DEFS = {
    "potential": {
        "type": "object",
        "properties": {
            "kind": {
                "enum": [
                    "BernoulliPoint",
                    "PiecewiseConstantBernoulli",
                    "SeparableSum",
                    "LognormalField",
                ]
            },
            "p": {"type": "number"},
            "a": {"type": "number"},
            "b": {"type": "number"},
            "terms": POSITIVE_INT,
            "alpha": {"type": "number"},
            "beta": {"type": "number"},
            "truncation": {"oneOf": [{"type": "null"}, POSITIVE_INT]},
        },
        "required": ["kind"],
        "additionalProperties": False,
    },
    "dist": {
        "type": "object",
        "properties": {
            "method": {"enum": ["FD", "FEM"]},
            "M": {"type": "integer", "minimum": 2},
            "D": POSITIVE_INT,
            "potential": {"$ref": "#/$defs/potential"},
            "spectral_scale": {
                "oneOf": [
                    {"type": "null"},
                    {"const": "auto"},
                    {"type": "number", "exclusiveMinimum": 0},
                ]
            },
            "fem_convention": {"enum": ["galerkin", "printed"]},
        },
        "required": ["method", "M", "potential"],
        "additionalProperties": False,
    },
    "hyper": {
        "type": "object",
        "properties": {
            "learning_rate": {"type": "number", "exclusiveMinimum": 0},
            "final_learning_rate": {"type": "number", "exclusiveMinimum": 0},
            "batch_size": POSITIVE_INT,
            "steps": POSITIVE_INT,
            "init_scale": {"type": "number", "exclusiveMinimum": 0},
        },
        "additionalProperties": False,
    },
    "tolerance": {
        "type": "object",
        "properties": {
            "relative": {"type": "number", "minimum": 0},
            "absolute": {"type": "number", "minimum": 0},
        },
        "additionalProperties": False,
    },
    "training": {
        "type": "object",
        "properties": {
            "dist": {"$ref": "#/$defs/dist"},
            "tasks": POSITIVE_INT,
            "prompt_length": POSITIVE_INT,
            "hyper": {"$ref": "#/$defs/hyper"},
        },
        "required": ["dist", "tasks", "prompt_length"],
        "additionalProperties": False,
    },
}


def _nonempty_list(items: dict) -> dict:
    return {"type": "array", "items": items, "minItems": 1}


def _command_schema(command: str, properties: dict, required: list[str]) -> dict:
    return {
        "$schema": DRAFT,
        "$defs": DEFS,
        "type": "object",
        "properties": {"command": {"const": command}, **properties},
        "required": ["command", *required],
        "additionalProperties": False,
    }


DIVERSITY = _command_schema(
    "diversity",
    {
        "dist": {"$ref": "#/$defs/dist"},
        "p_values": {
            **_nonempty_list({"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1}),
            "uniqueItems": True,
        },
        "N_values": _nonempty_list(POSITIVE_INT),
        "trials": POSITIVE_INT,
        "augment_with_k": {"type": "boolean"},
        "tolerance": {"$ref": "#/$defs/tolerance"},
        "seed": SEED,
        "output": OUTPUT,
    },
    ["dist", "p_values", "N_values", "trials", "augment_with_k"],
)

BOUNDS = _command_schema(
    "bounds",
    {
        "theorem": {"enum": ["ThmMain", "Thm2", "ThmFD", "ThmFD2", "ThmFEM"]},
        "grid": {
            "type": "object",
            "properties": {
                "d": _nonempty_list({"type": "integer"}),
                "M": _nonempty_list({"type": "integer"}),
                "D": _nonempty_list({"type": "integer"}),
                "p": _nonempty_list({"type": "number"}),
                "c": _nonempty_list({"type": "number"}),
                "c_V": _nonempty_list({"type": "number"}),
                "N": _nonempty_list({"type": "integer"}),
            },
            "required": ["N"],
            "additionalProperties": False,
        },
        "output": OUTPUT,
    },
    ["theorem", "grid"],
)

ICL_TRAIN = _command_schema(
    "icl-train",
    {
        "dist": {"$ref": "#/$defs/dist"},
        "tasks": POSITIVE_INT,
        "prompt_length": POSITIVE_INT,
        "hyper": {"$ref": "#/$defs/hyper"},
        "seed": SEED,
        "output": OUTPUT,
    },
    ["dist", "tasks", "prompt_length"],
)

ICL_EVAL = _command_schema(
    "icl-eval",
    {
        "checkpoint": {"type": "string", "minLength": 1},
        "train": {"$ref": "#/$defs/training"},
        "tests": _nonempty_list(
            {
                "type": "object",
                "properties": {
                    "label": {"type": "string", "pattern": "^[^,\\n\"]+$"},
                    "dist": {"$ref": "#/$defs/dist"},
                },
                "required": ["label", "dist"],
                "additionalProperties": False,
            }
        ),
        "m_values": _nonempty_list(POSITIVE_INT),
        "tasks": POSITIVE_INT,
        "queries_per_task": POSITIVE_INT,
        "error_kind": {"enum": ["MSE", "shifted-relative"]},
        "seed": SEED,
        "output": OUTPUT,
    },
    ["tests", "m_values", "tasks", "error_kind"],
)

GEN = _command_schema(
    "gen",
    {
        "dist": {"$ref": "#/$defs/dist"},
        "count": POSITIVE_INT,
        "include_deterministic": {"type": "boolean"},
        "seed": SEED,
        "output": OUTPUT,
    },
    ["dist", "count"],
)

SCHEMAS = {
    "diversity": DIVERSITY,
    "bounds": BOUNDS,
    "icl-train": ICL_TRAIN,
    "icl-eval": ICL_EVAL,
    "gen": GEN,
}
