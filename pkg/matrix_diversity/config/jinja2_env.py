from jinja2 import Environment, StrictUndefined

from matrix_diversity.experiments.plots import format_tick


def environment(**options):
    options.setdefault("undefined", StrictUndefined)
    env = Environment(**options)

    env.filters["tick"] = format_tick
    env.filters["coord"] = lambda value: f"{value:.2f}"

    return env
