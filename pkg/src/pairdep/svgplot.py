"""Dependency-free SVG scatter plots for raw data and fitted transforms."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

PANEL = 360
MARGIN = 46
POINT_RADIUS = 2.5


def _axis_range(v: np.ndarray) -> tuple[float, float]:
    lo, hi = float(v.min()), float(v.max())
    if hi == lo:
        lo, hi = lo - 1.0, hi + 1.0
    pad = 0.05 * (hi - lo)
    return lo - pad, hi + pad


def _panel_svg(title: str, x: np.ndarray, y: np.ndarray, offset_x: int) -> list[str]:
    x0, x1 = _axis_range(x)
    y0, y1 = _axis_range(y)
    left = offset_x + MARGIN
    top = MARGIN
    side = PANEL - 2 * MARGIN

    def sx(v: float) -> float:
        return left + (v - x0) / (x1 - x0) * side

    def sy(v: float) -> float:
        return top + side - (v - y0) / (y1 - y0) * side

    parts = [
        f'<rect x="{left}" y="{top}" width="{side}" height="{side}" '
        'fill="none" stroke="black" stroke-width="1"/>',
        f'<text x="{offset_x + PANEL / 2:.1f}" y="{MARGIN - 14}" text-anchor="middle" '
        f'font-size="13">{escape(title)}</text>',
        f'<text x="{left}" y="{top + side + 16}" font-size="10">{x0:.3g}</text>',
        f'<text x="{left + side}" y="{top + side + 16}" text-anchor="end" '
        f'font-size="10">{x1:.3g}</text>',
        f'<text x="{left - 4}" y="{top + side}" text-anchor="end" font-size="10">{y0:.3g}</text>',
        f'<text x="{left - 4}" y="{top + 10}" text-anchor="end" font-size="10">{y1:.3g}</text>',
    ]
    for xv, yv in zip(x, y):
        parts.append(f'<circle cx="{sx(xv):.2f}" cy="{sy(yv):.2f}" r="{POINT_RADIUS}" '
                     'fill="steelblue" fill-opacity="0.6"/>')
    return parts


def scatter_svg(panels: list[tuple[str, np.ndarray, np.ndarray]]) -> str:
    """Render one scatter panel per (title, x, y) triple, side by side."""
    width = PANEL * len(panels)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL}" '
        f'viewBox="0 0 {width} {PANEL}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for i, (title, x, y) in enumerate(panels):
        parts.extend(_panel_svg(title, np.asarray(x, dtype=float).reshape(-1),
                                np.asarray(y, dtype=float).reshape(-1), i * PANEL))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
