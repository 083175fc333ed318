"""Cartesian floating-point referee for feet, cevian concurrency and distances.

Independent of the barycentric formulas: everything here is plain vector
geometry on the placed triangle.
"""

import logging
from typing import Optional

import numpy as np

from .config import config
from .core import signed_area, to_cartesian
from .models import (
    BaryPoint,
    CartesianLine,
    CartesianPlacement,
    CartesianPoint,
    DegenerateCevian,
    DegenerateSegment,
    OrientedDistances,
    TriangleShape,
)

logger = logging.getLogger(__name__)


def cart_line(p1: CartesianPoint, p2: CartesianPoint) -> CartesianLine:
    """Unit-normal line through two points."""
    dx, dy = p2[0] - p1[0], p2[1] - p1[1]
    length = float(np.hypot(dx, dy))
    if length == 0.0:
        raise DegenerateSegment(f"segment {p1} - {p2} has zero length")
    p, q = -dy / length, dx / length
    return CartesianLine(p, q, -(p * p1[0] + q * p1[1]))


def cart_foot(seg_a: CartesianPoint, seg_b: CartesianPoint, point: CartesianPoint) -> CartesianPoint:
    """Orthogonal projection of ``point`` onto the line through seg_a and seg_b."""
    a = np.asarray(seg_a, dtype=float)
    direction = np.asarray(seg_b, dtype=float) - a
    length_sq = float(direction @ direction)
    if length_sq == 0.0:
        raise DegenerateSegment(f"segment {seg_a} - {seg_b} has zero length")
    t = float((np.asarray(point, dtype=float) - a) @ direction) / length_sq
    foot = a + t * direction
    return float(foot[0]), float(foot[1])


def cart_oriented_distances(frame: CartesianPlacement, point: CartesianPoint) -> OrientedDistances:
    """Signed distances to BC, CA, AB, positive towards the interior."""
    A, B, C = frame.vertices
    orientation = 1.0 if signed_area(A, B, C) > 0 else -1.0
    values = []
    for start, end in ((B, C), (C, A), (A, B)):
        length = float(np.hypot(end[0] - start[0], end[1] - start[1]))
        values.append(orientation * 2.0 * signed_area(start, end, point) / length)
    return OrientedDistances(*values)


def cevian_matrix(frame: CartesianPlacement, point: BaryPoint) -> np.ndarray:
    """Rows (p, q, r) of the unit-normal lines A A_i, B B_i, C C_i."""
    if point.zero_count >= 2:
        raise DegenerateCevian(f"{point!r} is a vertex; its cevians are undefined")
    pt = to_cartesian(frame, point)
    A, B, C = frame.vertices
    rows = []
    for vertex, (start, end) in zip((A, B, C), ((B, C), (C, A), (A, B))):
        foot = cart_foot(start, end, pt)
        line = cart_line(vertex, foot)
        rows.append((line.p, line.q, line.r))
    return np.array(rows, dtype=float)


def cart_concurrency_residual(triangle: TriangleShape, frame: CartesianPlacement, point: BaryPoint) -> float:
    """|det| of the three normalized cevian lines; near zero iff they concur."""
    residual = abs(float(np.linalg.det(cevian_matrix(frame, point))))
    logger.debug(f"Concurrency residual of {point!r} on {triangle!r}: {residual:.3e}")
    return residual


def oracle_is_perspective(
    triangle: TriangleShape,
    frame: CartesianPlacement,
    point: BaryPoint,
    tol: Optional[float] = None,
) -> bool:
    tol = config.oracle_tolerance if tol is None else tol
    return cart_concurrency_residual(triangle, frame, point) <= tol
