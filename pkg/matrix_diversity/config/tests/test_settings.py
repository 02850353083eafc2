import pytest

from ..settings import boolean_env, int_env


class TestBooleanEnv:
    @pytest.mark.parametrize("value", ["True", "true", "1"])
    def test_truthy(self, value, monkeypatch):
        monkeypatch.setenv("MATDIV_FLAG", value)
        assert boolean_env("MATDIV_FLAG") is True

    def test_anything_else_is_false(self, monkeypatch):
        monkeypatch.setenv("MATDIV_FLAG", "yes")
        assert boolean_env("MATDIV_FLAG", default=True) is False

    def test_default_when_unset(self, monkeypatch):
        monkeypatch.delenv("MATDIV_FLAG", raising=False)
        assert boolean_env("MATDIV_FLAG", default=True) is True


class TestIntEnv:
    def test_parses(self, monkeypatch):
        monkeypatch.setenv("MATDIV_THREADS", "6")
        assert int_env("MATDIV_THREADS") == 6

    @pytest.mark.parametrize("value", [None, ""])
    def test_default_when_unset_or_empty(self, value, monkeypatch):
        if value is None:
            monkeypatch.delenv("MATDIV_THREADS", raising=False)
        else:
            monkeypatch.setenv("MATDIV_THREADS", value)
        assert int_env("MATDIV_THREADS", default=3) == 3
