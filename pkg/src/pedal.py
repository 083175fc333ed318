"""Perpendicular directions, perpendicular lines and pedal feet."""

import logging
from typing import Tuple

from .core import cross, line_intersection, normalize
from .models import (
    BaryLine,
    BaryPoint,
    DegenerateDeterminant,
    DirectionVector,
    Number,
    PedalTriangle,
    PointAtInfinity,
    Side,
    TriangleShape,
)

logger = logging.getLogger(__name__)


def side_line(side: Side) -> BaryLine:
    """x = 0 for BC, y = 0 for CA, z = 0 for AB."""
    coeffs = [0, 0, 0]
    coeffs[side.index] = 1
    return BaryLine(*coeffs)


def perp_direction(triangle: TriangleShape, side: Side) -> DirectionVector:
    """Infinite point of the direction perpendicular to ``side``.

    For BC this is (2a^2, -a^2 - b^2 + c^2, -a^2 + b^2 - c^2); the other
    sides follow by cyclic relabelling.
    """
    s = triangle.squares
    i, j, k = side.cyclic()
    coords = [0, 0, 0]
    coords[i] = 2 * s[i]
    coords[j] = -s[i] - s[j] + s[k]
    coords[k] = -s[i] + s[j] - s[k]
    return DirectionVector(*coords)


def perpendicular_line(triangle: TriangleShape, point: BaryPoint, side: Side) -> BaryLine:
    """Line through ``point`` perpendicular to ``side`` (3x3 determinant form)."""
    direction = perp_direction(triangle, side)
    coeffs = cross(point.coords, direction.coords)
    if all(v == 0 for v in coeffs):
        raise DegenerateDeterminant(f"{point!r} is the perpendicular direction of {side.value}")
    return BaryLine(*coeffs)


def foot_weights(triangle: TriangleShape, point: BaryPoint, side: Side) -> Tuple[Number, Number, Number]:
    """Cleared-denominator foot on ``side``; the weights sum to 2 * side^2 * sum(point).

    On BC: (0, alpha(a^2 + b^2 - c^2) + 2a^2 beta, alpha(a^2 - b^2 + c^2) + 2a^2 gamma).
    """
    s = triangle.squares
    p = point.coords
    i, j, k = side.cyclic()
    weights = [0, 0, 0]
    weights[j] = p[i] * (s[i] + s[j] - s[k]) + 2 * s[i] * p[j]
    weights[k] = p[i] * (s[i] - s[j] + s[k]) + 2 * s[i] * p[k]
    return tuple(weights)


def pedal_foot(triangle: TriangleShape, point: BaryPoint, side: Side) -> BaryPoint:
    """Normalized foot of the perpendicular from ``point`` to ``side``."""
    total = point.total
    if total == 0:
        raise PointAtInfinity(f"{point!r} has no pedal foot")
    scale = 2 * triangle.squares[side.index] * total
    return BaryPoint(*(w / scale for w in foot_weights(triangle, point, side)))


def foot_by_intersection(triangle: TriangleShape, point: BaryPoint, side: Side) -> BaryPoint:
    """Same foot via perpendicular line meet side line."""
    if point.total == 0:
        raise PointAtInfinity(f"{point!r} has no pedal foot")
    meet = line_intersection(perpendicular_line(triangle, point, side), side_line(side))
    return normalize(meet)


def pedal_triangle(triangle: TriangleShape, point: BaryPoint) -> PedalTriangle:
    feet = [pedal_foot(triangle, point, side) for side in Side]
    logger.debug(f"Pedal triangle of {point!r}: {feet}")
    return PedalTriangle(*feet)
