import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from matrix_diversity.experiments.presenters.diversity_presenter import COLUMNS
from matrix_diversity.experiments.tests.documents import DIVERSITY, write_document


def run(tmp_path, name="out", **options):
    out = tmp_path / name
    call_command("diversity", out=str(out), **options)
    return out


class TestDiversityCommand:
    @pytest.fixture
    def config(self, tmp_path):
        return str(write_document(tmp_path / "diversity.json", DIVERSITY, seed=5))

    def test_writes_estimates_and_summary(self, tmp_path, config):
        out = run(tmp_path, config=config)

        lines = (out / "diversity.csv").read_text().splitlines()
        assert lines[0] == ",".join(COLUMNS)
        assert len(lines) == 1 + 2 * 3
        assert all(line.startswith("FD,4,1,") for line in lines[1:])

        summary = (out / "summary.csv").read_text().splitlines()
        assert summary[0] == "p,crossing_n_0.9,crossing_n_0.95"
        assert [line.split(",")[0] for line in summary[1:]] == ["0.3", "0.5"]
        assert not (out / "diversity.svg").exists()

    def test_reports_completion_to_telemetry(self, tmp_path, config, mock_telemetry):
        out = run(tmp_path, config=config)
        mock_telemetry.assert_called_once_with("diversity", 5, out, rows=6, trials=4)

    def test_estimates_nondecreasing_in_n(self, tmp_path, config):
        out = run(tmp_path, config=config)
        rows = [line.split(",") for line in (out / "diversity.csv").read_text().splitlines()[1:]]
        for p in ("0.3", "0.5"):
            successes = [int(row[6]) for row in rows if row[3] == p]
            assert successes == sorted(successes)

    def test_deterministic(self, tmp_path, config):
        first = run(tmp_path, "first", config=config)
        second = run(tmp_path, "second", config=config, threads=1)
        for name in ("diversity.csv", "summary.csv"):
            assert (first / name).read_bytes() == (second / name).read_bytes()

    def test_seed_flag_overrides_config(self, tmp_path, config):
        first = run(tmp_path, "first", config=config, seed=5)
        second = run(tmp_path, "second", config=config)
        assert (first / "diversity.csv").read_bytes() == (second / "diversity.csv").read_bytes()

    def test_single_trial_gives_zero_or_one(self, tmp_path):
        config = write_document(tmp_path / "one.json", DIVERSITY, trials=1)
        out = run(tmp_path, config=str(config))
        rows = [line.split(",") for line in (out / "diversity.csv").read_text().splitlines()[1:]]
        assert {row[7] for row in rows} <= {"0.0", "1.0"}

    def test_svg(self, tmp_path, config):
        out = run(tmp_path, config=config, svg=True)
        svg = (out / "diversity.svg").read_text()
        assert svg.startswith("<svg")
        assert "p = 0.3" in svg

    def test_invalid_config(self, tmp_path):
        config = write_document(tmp_path / "bad.json", DIVERSITY, trials=0)
        with pytest.raises(CommandError) as excinfo:
            run(tmp_path, config=str(config))
        assert excinfo.value.returncode == 2
        assert not (tmp_path / "out").exists()

    def test_config_for_another_command(self, tmp_path):
        config = write_document(tmp_path / "gen.json", DIVERSITY, command="gen")
        with pytest.raises(CommandError) as excinfo:
            run(tmp_path, config=str(config))
        assert excinfo.value.returncode == 2

    def test_output_parent_missing(self, tmp_path, config):
        with pytest.raises(CommandError) as excinfo:
            call_command("diversity", config=config, out=str(tmp_path / "a" / "b"))
        assert excinfo.value.returncode == 4

    def test_reports_to_telemetry(self, tmp_path, mock_telemetry):
        config = write_document(tmp_path / "bad.json", DIVERSITY, trials=0)
        with pytest.raises(CommandError):
            run(tmp_path, config=str(config))
        mock_telemetry.assert_called_once()
        assert mock_telemetry.call_args.args[0].startswith("DiversityCommandError: ")
