"""Deterministic SVG rendering of Lorenz curves.

Element order, coordinate formatting, and colors are all fixed functions
of the input, so identical calls produce byte-identical documents.
"""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .core import LorenzCurve
from .errors import DimensionMismatchError, EmptyInputError

WIDTH = 800
HEIGHT = 600

_LEFT = 70.0
_RIGHT = 170.0
_TOP = 30.0
_BOTTOM = 50.0
_PLOT_W = WIDTH - _LEFT - _RIGHT
_PLOT_H = HEIGHT - _TOP - _BOTTOM

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
_Y_TICKS = (0.0, 0.25, 0.5, 0.75, 1.0)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def emit_lorenz_svg(curves: Sequence[tuple[str, LorenzCurve]]) -> str:
    """Render labelled curves on the fixed 800x600 canvas."""
    items = list(curves)
    if not items:
        raise EmptyInputError("no curves to plot")
    d = items[0][1].d
    for _, curve in items:
        if curve.d != d:
            raise DimensionMismatchError(f"curve dimensions differ: {curve.d} vs {d}")

    def px(omega: float) -> float:
        return _LEFT + (omega / d) * _PLOT_W

    def py(value: float) -> float:
        return _TOP + (1.0 - value) * _PLOT_H

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]

    x_step = max(1, -(-d // 16))  # at most ~16 labelled ticks
    for k in range(0, d + 1, x_step):
        x = _fmt(px(k))
        parts.append(
            f'<line x1="{x}" y1="{_fmt(py(0.0))}" x2="{x}" y2="{_fmt(py(1.0))}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x}" y="{_fmt(py(0.0) + 20)}" font-family="monospace" '
            f'font-size="12" text-anchor="middle">{k}</text>'
        )
    for tick in _Y_TICKS:
        y = _fmt(py(tick))
        parts.append(
            f'<line x1="{_fmt(px(0))}" y1="{y}" x2="{_fmt(px(d))}" y2="{y}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(px(0) - 8)}" y="{y}" font-family="monospace" '
            f'font-size="12" text-anchor="end" dominant-baseline="middle">{tick:g}</text>'
        )
    parts.append(
        f'<rect x="{_fmt(_LEFT)}" y="{_fmt(_TOP)}" width="{_fmt(_PLOT_W)}" '
        f'height="{_fmt(_PLOT_H)}" fill="none" stroke="#000000" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_fmt(_LEFT + _PLOT_W / 2)}" y="{_fmt(HEIGHT - 12)}" font-family="monospace" '
        f'font-size="13" text-anchor="middle">index</text>'
    )
    parts.append(
        f'<text x="16" y="{_fmt(_TOP + _PLOT_H / 2)}" font-family="monospace" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {_fmt(_TOP + _PLOT_H / 2)})">'
        f'cumulative probability</text>'
    )

    for idx, (label, curve) in enumerate(items):
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(
            f"{_fmt(px(k))},{_fmt(py(float(v)))}" for k, v in enumerate(curve.values)
        )
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        ly = _TOP + 14 + 18 * idx
        parts.append(
            f'<rect x="{_fmt(WIDTH - _RIGHT + 14)}" y="{_fmt(ly - 9)}" width="14" height="10" '
            f'fill="{color}"/>'
        )
        parts.append(
            f'<text x="{_fmt(WIDTH - _RIGHT + 34)}" y="{_fmt(ly)}" font-family="monospace" '
            f'font-size="12">{escape(str(label))}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
