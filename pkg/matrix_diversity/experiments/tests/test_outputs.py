import json

import pandas

from matrix_diversity.experiments.outputs import csv_text, write_csv, write_json, write_svg


class TestCsv:
    def test_empty_fields_for_missing_values(self):
        dataframe = pandas.DataFrame([[1, None, 0.5]], columns=["a", "b", "c"], dtype=object)
        assert csv_text(dataframe) == "a,b,c\n1,,0.5\n"

    def test_write_csv(self, tmp_path):
        dataframe = pandas.DataFrame([["FD", 3]], columns=["method", "M"], dtype=object)
        path = write_csv(tmp_path / "rows.csv", dataframe)
        assert path.read_bytes() == b"method,M\nFD,3\n"


class TestSidecars:
    def test_write_json_sorts_keys(self, tmp_path):
        path = write_json(tmp_path / "manifest.json", {"seed": 1, "d": 4})
        text = path.read_text()
        assert text.index('"d"') < text.index('"seed"')
        assert json.loads(text) == {"seed": 1, "d": 4}
        assert text.endswith("}\n")

    def test_write_svg(self, tmp_path):
        path = write_svg(tmp_path / "plot.svg", "<svg/>")
        assert path.read_text() == "<svg/>"
