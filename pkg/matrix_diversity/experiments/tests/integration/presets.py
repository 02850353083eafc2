import json
from pathlib import Path

from django.core.management import call_command

CONFIGS = Path(__file__).resolve().parents[4] / "configs"


def preset(name: str, **changes) -> dict:
    document = json.loads((CONFIGS / f"{name}.json").read_text(encoding="utf-8"))
    document.update(changes)
    return document


def run_preset(command: str, document: dict, directory: Path, **options) -> Path:
    directory.mkdir(exist_ok=True)
    config = directory / "config.json"
    config.write_text(json.dumps(document), encoding="utf-8")
    out = directory / "out"
    call_command(command, config=str(config), out=str(out), **options)
    return out
