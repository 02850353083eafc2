import pytest
from jinja2 import TemplateSyntaxError, UndefinedError

from ..jinja2_env import environment


class TestEnvironment:
    def test_filters(self):
        template = environment().from_string("{{ 1000.0 | tick }} {{ 2.5 | coord }}")
        assert template.render() == "1000 2.50"

    def test_undefined_values_raise(self):
        with pytest.raises(UndefinedError):
            environment().from_string("{{ missing }}").render()

    def test_has_no_statement_extensions(self):
        assert environment().extensions == {}
        with pytest.raises(TemplateSyntaxError):
            environment().from_string("{% do [].append(1) %}")
