"""SVG rendering of planar curves."""
from typing import List

import numpy as np

from ..errors import InvalidInputError
from ..geometry.curves import PlanarCurve

CANVAS = 1000.0
PADDING = 20.0


def render_svg(curve: PlanarCurve, stroke: str = "black", stroke_width: float = 2.0) -> str:
    """
    One-path SVG document of a planar curve.

    Coordinates are scaled so the longer side of the bounding box spans the
    canvas, flipped so y points up, and written with 2 decimals.
    """
    pts = np.asarray(curve.points, dtype=float)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    extent = float(np.max(hi - lo))
    if extent <= 0:
        raise InvalidInputError("render_svg: curve has zero extent")
    scale = CANVAS / extent
    width = (hi[0] - lo[0]) * scale + 2 * PADDING
    height = (hi[1] - lo[1]) * scale + 2 * PADDING
    x = (pts[:, 0] - lo[0]) * scale + PADDING
    y = height - ((pts[:, 1] - lo[1]) * scale + PADDING)

    coords = [f"{xi:.2f},{yi:.2f}" for xi, yi in zip(x, y)]
    d = "M " + " L ".join(coords)

    svg_lines: List[str] = []
    svg_lines.append('<?xml version="1.0" encoding="UTF-8"?>')
    svg_lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'version="1.1" viewBox="0 0 {width:.2f} {height:.2f}">'
    )
    svg_lines.append(
        f'  <path d="{d}" fill="none" stroke="{stroke}" stroke-width="{stroke_width:.2f}" '
        f'stroke-linecap="round" stroke-linejoin="round"/>'
    )
    svg_lines.append("</svg>")
    return "\n".join(svg_lines) + "\n"
