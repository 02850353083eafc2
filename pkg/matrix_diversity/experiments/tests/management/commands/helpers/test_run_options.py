from argparse import ArgumentParser
from pathlib import Path

import pytest

from matrix_diversity.core.exceptions import ConfigError
from matrix_diversity.core.rng import RngStream
from matrix_diversity.experiments.config import parse_config
from matrix_diversity.experiments.management.commands.helpers.run_options import (
    RunOptions,
    add_run_arguments,
)
from matrix_diversity.experiments.tests.documents import BOUNDS, GEN, document


class TestAddRunArguments:
    def test_parses_flags(self):
        parser = ArgumentParser()
        add_run_arguments(parser)
        options = parser.parse_args(
            ["--config", "c.json", "--out", "o", "--seed", "5", "--threads", "3", "--svg"]
        )
        assert (options.config, options.out, options.seed) == ("c.json", "o", 5)
        assert options.threads == 3
        assert options.svg

    def test_without_svg(self):
        parser = ArgumentParser()
        add_run_arguments(parser, svg=False)
        with pytest.raises(SystemExit):
            parser.parse_args(["--config", "c.json", "--svg"])


class TestRunOptions:
    @pytest.fixture
    def config(self):
        return parse_config(document(GEN, seed=11, output="from-config"))

    def test_flags_win(self, config):
        run = RunOptions.resolve({"seed": 3, "out": "from-flag", "threads": 1}, config)
        assert run == RunOptions(out=Path("from-flag"), seed=3, threads=1)

    def test_config_wins_over_settings(self, config):
        run = RunOptions.resolve({}, config)
        assert run.seed == 11
        assert run.out == Path("from-config")

    def test_settings_fallback(self, settings):
        settings.MATDIV_DEFAULT_SEED = 99
        settings.MATDIV_OUTPUT_DIR = Path("default-out")
        run = RunOptions.resolve({}, parse_config(GEN))
        assert run == RunOptions(out=Path("default-out"), seed=99, threads=2)

    def test_config_without_seed(self, settings):
        settings.MATDIV_DEFAULT_SEED = 4
        assert RunOptions.resolve({}, parse_config(BOUNDS)).seed == 4

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_seed_out_of_range(self, seed, config):
        with pytest.raises(ConfigError) as excinfo:
            RunOptions.resolve({"seed": seed}, config)
        assert excinfo.value.key == "seed"

    def test_threads_must_be_positive(self, config):
        with pytest.raises(ConfigError) as excinfo:
            RunOptions.resolve({"threads": 0}, config)
        assert excinfo.value.key == "threads"

    def test_rng(self, config):
        assert RunOptions.resolve({}, config).rng() == RngStream(11)

    def test_prepare_output(self, tmp_path):
        run = RunOptions(out=tmp_path / "out", seed=0, threads=1)
        assert run.prepare_output().is_dir()
        assert run.prepare_output().is_dir()

    def test_prepare_output_needs_parent(self, tmp_path):
        run = RunOptions(out=tmp_path / "missing" / "out", seed=0, threads=1)
        with pytest.raises(FileNotFoundError):
            run.prepare_output()
