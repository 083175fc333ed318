"""CSV and SVG serialization of traced locus curves."""

import io
import logging
from typing import List, Tuple

from .core import placement, to_cartesian
from .locus import known_center
from .models import TracedCurve

logger = logging.getLogger(__name__)

CSV_HEADERS = ("polyline_id", "x", "y")

MARKERS: Tuple[Tuple[str, str, str], ...] = (
    ("H", "orthocenter", "#d62728"),
    ("I", "incenter", "#2ca02c"),
    ("O", "circumcenter", "#9467bd"),
    ("G", "centroid", "#ff7f0e"),
)


def _num(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def curve_to_csv(curve: TracedCurve) -> str:
    """One row per polyline vertex; LF line endings."""
    output = io.StringIO()
    output.write(','.join(CSV_HEADERS) + '\n')
    for polyline_id, polyline in enumerate(curve.polylines):
        for x, y in polyline:
            output.write(f"{polyline_id},{format(x, '.12g')},{format(y, '.12g')}\n")
    content = output.getvalue()
    output.close()
    logger.info(f"Generated curve CSV with {curve.vertex_count} vertices")
    return content


def curve_to_svg(curve: TracedCurve) -> str:
    """SVG 1.1 document; viewBox is the tracing bbox with +y pointing up."""
    x0, y0, x1, y1 = curve.bbox
    width, height = x1 - x0, y1 - y0
    stroke = max(width, height) / 400.0
    radius = stroke * 2.5
    font_size = max(width, height) / 40.0

    frame = placement(curve.triangle)
    A, B, C = frame.vertices

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(x0)} {_num(-y1)} {_num(width)} {_num(height)}">',
        '<g transform="scale(1,-1)" fill="none">',
        f'<polygon points="{_num(A[0])},{_num(A[1])} {_num(B[0])},{_num(B[1])} {_num(C[0])},{_num(C[1])}" '
        f'stroke="#000000" stroke-width="{_num(stroke)}"/>',
    ]
    for polyline in curve.polylines:
        head, *rest = polyline
        d = f"M {_num(head[0])} {_num(head[1])}" + "".join(f" L {_num(x)} {_num(y)}" for x, y in rest)
        lines.append(f'<path d="{d}" stroke="#1f77b4" stroke-width="{_num(stroke)}"/>')

    labels: List[str] = []
    for label, name, color in MARKERS:
        x, y = to_cartesian(frame, known_center(curve.triangle, name))
        lines.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(radius)}" fill="{color}"/>')
        labels.append(
            f'<text x="{_num(x + radius)}" y="{_num(-y - radius)}" font-size="{_num(font_size)}" '
            f'fill="{color}">{label}</text>'
        )
    lines.append('</g>')
    lines.extend(labels)
    lines.append('</svg>')
    logger.info(f"Generated curve SVG with {len(curve.polylines)} paths")
    return '\n'.join(lines) + '\n'
