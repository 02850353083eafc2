"""
Line plots rendered to SVG through the project's Jinja2 environment.

Scaling plots use log-log axes and can carry a reference line of fixed
slope; probability plots use linear axes on [0, 1].
"""

import math
from dataclasses import dataclass

import numpy as np
from django.template import engines

WIDTH = 800
HEIGHT = 600
LEFT, RIGHT, TOP, BOTTOM = 90, 620, 50, 530

PALETTE = (
    "#005eb8",
    "#d5281b",
    "#007f3b",
    "#7c2855",
    "#ed8b00",
    "#330072",
    "#00a499",
    "#768692",
)

TEMPLATE = "plots/line_plot.svg.jinja"


def format_tick(value: float) -> str:
    """
    >>> format_tick(1000.0)
    '1000'
    >>> format_tick(0.25)
    '0.25'
    >>> format_tick(1e-06)
    '1e-06'
    """
    return f"{value:g}"


def nice_ticks(low: float, high: float, count: int = 6) -> list[float]:
    """
    Evenly spaced ticks with a step of 1, 2 or 5 times a power of ten.

    >>> nice_ticks(0.0, 1.0)
    [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
    >>> nice_ticks(1, 30)
    [0.0, 10.0, 20.0, 30.0]
    """
    if high <= low:
        return [float(low)]
    raw = (high - low) / (count - 1)
    magnitude = 10.0 ** math.floor(math.log10(raw))
    step = next(m * magnitude for m in (1, 2, 5, 10) if m * magnitude >= raw)
    first = math.floor(low / step + 1e-9)
    last = math.ceil(high / step - 1e-9)
    return [round(k * step, 12) for k in range(first, last + 1)]


@dataclass(frozen=True)
class Series:
    label: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]


@dataclass(frozen=True)
class LinePlot:
    title: str
    x_label: str
    y_label: str
    series: tuple[Series, ...]
    log_scale: bool = False
    reference_slope: float | None = None
    y_range: tuple[float, float] | None = None
    reference_label: str = ""

    def visible_points(self, series: Series) -> list[tuple[float, float]]:
        points = zip(series.xs, series.ys)
        if self.log_scale:
            return [(x, y) for x, y in points if x > 0 and y > 0]
        return [(x, y) for x, y in points if math.isfinite(y)]

    def reference_segment(self) -> tuple[tuple[float, float], tuple[float, float]] | None:
        """
        Data-space endpoints of the reference line y = c x^slope, anchored at
        the first visible point of the first series and spanning the x range.
        """
        if self.reference_slope is None or not self.series:
            return None
        anchor = self.visible_points(self.series[0])
        if not anchor:
            return None
        x_anchor, y_anchor = anchor[0]
        xs = [x for s in self.series for x, _ in self.visible_points(s)]
        x_low, x_high = min(xs), max(xs)
        return (
            (x_low, y_anchor * (x_low / x_anchor) ** self.reference_slope),
            (x_high, y_anchor * (x_high / x_anchor) ** self.reference_slope),
        )


class _Scale:
    def __init__(self, low: float, high: float, log: bool, start: float, end: float):
        self.log = log
        self.low, self.high = (math.log10(low), math.log10(high)) if log else (low, high)
        if self.high == self.low:
            self.low, self.high = self.low - 0.5, self.high + 0.5
        self.start, self.end = start, end

    def __call__(self, value: float) -> float:
        t = math.log10(value) if self.log else value
        return self.start + (t - self.low) / (self.high - self.low) * (self.end - self.start)

    def ticks(self) -> list[float]:
        if self.log:
            candidates = [10.0**k for k in range(math.floor(self.low), math.ceil(self.high) + 1)]
        else:
            candidates = nice_ticks(self.low, self.high)
        return [t for t in candidates if self.start_value <= t <= self.end_value]

    @property
    def start_value(self) -> float:
        return 10.0**self.low * (1 - 1e-9) if self.log else self.low - 1e-9

    @property
    def end_value(self) -> float:
        return 10.0**self.high * (1 + 1e-9) if self.log else self.high + 1e-9


def _bounds(values: list[float], log: bool) -> tuple[float, float]:
    low, high = min(values), max(values)
    if log:
        return 10.0 ** math.floor(math.log10(low)), 10.0 ** math.ceil(math.log10(high))
    ticks = nice_ticks(low, high)
    return ticks[0], ticks[-1]


def layout(plot: LinePlot) -> dict:
    """
    Pixel geometry of the plot: everything the template draws.
    """
    visible = [plot.visible_points(s) for s in plot.series]
    xs = [x for points in visible for x, _ in points]
    ys = [y for points in visible for _, y in points]
    reference = plot.reference_segment()
    if reference is not None:
        ys.extend(y for _, y in reference)
    if not xs:
        xs, ys = [1.0], [1.0]

    x_scale = _Scale(*_bounds(xs, plot.log_scale), plot.log_scale, LEFT, RIGHT)
    y_low, y_high = plot.y_range or _bounds(ys, plot.log_scale)
    y_scale = _Scale(y_low, y_high, plot.log_scale, BOTTOM, TOP)

    lines = [
        {
            "label": series.label,
            "color": PALETTE[index % len(PALETTE)],
            "points": [(x_scale(x), y_scale(y)) for x, y in points],
        }
        for index, (series, points) in enumerate(zip(plot.series, visible))
    ]
    return {
        "width": WIDTH,
        "height": HEIGHT,
        "frame": {"left": LEFT, "right": RIGHT, "top": TOP, "bottom": BOTTOM},
        "title": plot.title,
        "x_label": plot.x_label,
        "y_label": plot.y_label,
        "x_ticks": [(x_scale(t), t) for t in x_scale.ticks()],
        "y_ticks": [(y_scale(t), t) for t in y_scale.ticks()],
        "lines": lines,
        "reference": None
        if reference is None
        else {
            "label": plot.reference_label,
            "start": (x_scale(reference[0][0]), y_scale(reference[0][1])),
            "end": (x_scale(reference[1][0]), y_scale(reference[1][1])),
        },
    }


def render_svg(plot: LinePlot) -> str:
    return engines["jinja2"].get_template(TEMPLATE).render(layout(plot))


def probability_plot(title: str, x_label: str, series: list[Series]) -> LinePlot:
    return LinePlot(
        title=title,
        x_label=x_label,
        y_label="probability",
        series=tuple(series),
        y_range=(0.0, 1.0),
    )


def scaling_plot(title: str, y_label: str, series: list[Series]) -> LinePlot:
    return LinePlot(
        title=title,
        x_label="prompt length m",
        y_label=y_label,
        series=tuple(series),
        log_scale=True,
        reference_slope=-1.0,
        reference_label="O(1/m)",
    )


def series_from_arrays(label: str, xs, ys) -> Series:
    return Series(
        label=label,
        xs=tuple(float(x) for x in np.asarray(xs)),
        ys=tuple(float(y) for y in np.asarray(ys)),
    )
