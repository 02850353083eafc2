from dataclasses import dataclass
from pathlib import Path

from django.conf import settings

from matrix_diversity.core.exceptions import ConfigError
from matrix_diversity.core.rng import U64_MAX, RngStream


def add_run_arguments(parser, svg: bool = True):
    parser.add_argument("--config", required=True, help="Path to a JSON experiment config")
    parser.add_argument("--out", help="Output directory (its parent must exist)")
    parser.add_argument("--seed", type=int, help="Unsigned 64-bit seed")
    parser.add_argument("--threads", type=int, help="Worker cap for parallel estimators")
    if svg:
        parser.add_argument("--svg", action="store_true", help="Also render an SVG plot")


@dataclass(frozen=True)
class RunOptions:
    out: Path
    seed: int
    threads: int
    svg: bool = False

    @classmethod
    def resolve(cls, options: dict, config) -> "RunOptions":
        """
        CLI flags win over config keys, which win over settings.
        """
        seed = options.get("seed")
        if seed is None:
            seed = getattr(config, "seed", None)
        if seed is None:
            seed = settings.MATDIV_DEFAULT_SEED
        if not 0 <= seed <= U64_MAX:
            raise ConfigError(f"seed must be an unsigned 64-bit integer: {seed}", key="seed")

        threads = options.get("threads")
        if threads is None:
            threads = settings.MATDIV_THREADS
        if threads < 1:
            raise ConfigError(f"threads must be positive: {threads}", key="threads")

        out = options.get("out") or getattr(config, "output", None) or settings.MATDIV_OUTPUT_DIR
        return cls(out=Path(out), seed=seed, threads=threads, svg=bool(options.get("svg")))

    def rng(self) -> RngStream:
        return RngStream(self.seed)

    def prepare_output(self) -> Path:
        self.out.mkdir(exist_ok=True)
        return self.out
