"""Test curve tracing and concurrent grid evaluation."""

import logging
import math

import numpy as np
import pytest

from src.core import placement, to_cartesian
from src.locus import cartesian_field, default_bbox, known_center, marching_squares, trace, trace_async
from src.worker import evaluate_grid, evaluate_grid_concurrently

logger = logging.getLogger(__name__)


def _distance_to_line(pt, p, q):
    (x, y), (x1, y1), (x2, y2) = pt, p, q
    return abs((x2 - x1) * (y1 - y) - (x1 - x) * (y2 - y1)) / math.hypot(x2 - x1, y2 - y1)


def _nearest_vertex(curve, target):
    return min(math.hypot(x - target[0], y - target[1]) for x, y in curve.vertices())


@pytest.mark.asyncio
async def test_concurrent_grid_matches_sequential(scalene):
    """Band-parallel evaluation gives bit-identical values."""
    field = cartesian_field(scalene)
    xs = np.linspace(-1.0, 7.0, 57)
    ys = np.linspace(-2.0, 6.0, 45)

    sequential = evaluate_grid(field, xs, ys)
    for band_rows, max_concurrency in [(1, 8), (7, 3), (64, 1)]:
        concurrent = await evaluate_grid_concurrently(field, xs, ys, band_rows, max_concurrency)
        assert concurrent.shape == (45, 57)
        assert np.array_equal(concurrent, sequential)


@pytest.mark.asyncio
async def test_trace_independent_of_band_layout(scalene):
    first = await trace_async(scalene, resolution=64, band_rows=5, max_concurrency=4)
    second = await trace_async(scalene, resolution=64, band_rows=64, max_concurrency=1)
    assert first.polylines == second.polylines


@pytest.mark.asyncio
async def test_scalene_curve_passes_near_members(scalene):
    curve = await trace_async(scalene, resolution=128)
    frame = placement(scalene)
    diagonal = math.hypot(*curve.cell_size)
    for name in ("orthocenter", "incenter", "circumcenter"):
        target = to_cartesian(frame, known_center(scalene, name))
        assert _nearest_vertex(curve, target) <= 2 * diagonal, name


@pytest.mark.asyncio
async def test_equilateral_curve_is_the_medians(equilateral):
    curve = await trace_async(equilateral, resolution=256)
    A, B, C = placement(equilateral).vertices
    midpoints = [((B[0] + C[0]) / 2, (B[1] + C[1]) / 2),
                 ((C[0] + A[0]) / 2, (C[1] + A[1]) / 2),
                 ((A[0] + B[0]) / 2, (A[1] + B[1]) / 2)]
    medians = list(zip((A, B, C), midpoints))
    diagonal = math.hypot(*curve.cell_size)

    hits = [0, 0, 0]
    for pt in curve.vertices():
        distances = [_distance_to_line(pt, p, q) for p, q in medians]
        assert min(distances) <= diagonal
        hits[distances.index(min(distances))] += 1
    assert all(count > 0 for count in hits)


def test_polylines_are_chained():
    """Consecutive vertices of a polyline lie in a common cell."""
    xs = np.linspace(-1.0, 1.0, 21)
    ys = np.linspace(-1.0, 1.0, 21)

    def field(x, y):
        return x * x + y * y - 0.47

    grid_x, grid_y = np.meshgrid(xs, ys)
    polylines = marching_squares(xs, ys, field(grid_x, grid_y), field)
    assert len(polylines) == 1
    circle = polylines[0]
    assert circle[0] == circle[-1]
    step = 0.1
    for (x1, y1), (x2, y2) in zip(circle, circle[1:]):
        assert abs(x1 - x2) <= step + 1e-12 and abs(y1 - y2) <= step + 1e-12
    for x, y in circle:
        assert abs(math.hypot(x, y) - math.sqrt(0.47)) < step


def test_saddle_resolved_by_center():
    xs = np.array([0.0, 1.0])
    ys = np.array([0.0, 1.0])
    # Corners: c0 > 0, c1 < 0, c2 > 0, c3 < 0
    values = np.array([[1.0, -1.0], [-1.0, 1.0]])
    joined = marching_squares(xs, ys, values, lambda x, y: np.full(np.shape(x), 1.0))
    split = marching_squares(xs, ys, values, lambda x, y: np.full(np.shape(x), -1.0))
    assert len(joined) == 2 and len(split) == 2
    assert sorted(map(tuple, joined)) != sorted(map(tuple, split))
    # Positive center: segments cut off c1 (bottom-right) and c3 (top-left)
    assert sorted(joined) == sorted([[(0.5, 0.0), (1.0, 0.5)], [(0.5, 1.0), (0.0, 0.5)]])


def test_trace_sync_wrapper(equilateral):
    curve = trace(equilateral, resolution=16)
    assert curve.resolution == 16
    assert curve.bbox == pytest.approx(default_bbox(equilateral))
    assert curve.polylines


def test_trace_rejects_bad_input(scalene):
    with pytest.raises(ValueError, match="resolution out of range"):
        trace(scalene, resolution=1)
    with pytest.raises(ValueError, match="degenerate"):
        trace(scalene, bbox=(0.0, 0.0, 0.0, 1.0), resolution=8)


def test_trace_zero_resolution_and_empty_bbox_are_rejected(scalene):
    with pytest.raises(ValueError, match="resolution out of range"):
        trace(scalene, resolution=0)
    with pytest.raises(ValueError, match="bounding box needs four values"):
        trace(scalene, bbox=(), resolution=8)
    with pytest.raises(ValueError, match="resolution out of range"):
        trace(scalene, resolution=9000)


def test_default_bbox(scalene):
    x0, y0, x1, y1 = default_bbox(scalene)
    height = 5 * math.sqrt(7) / 4
    assert x0 == pytest.approx(-1.5)
    assert x1 == pytest.approx(7.5)
    assert y1 - y0 == pytest.approx(1.5 * height)
