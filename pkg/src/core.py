"""Exact barycentric algebra and the cartesian embedding of a triangle.

All functions are pure. Rational inputs give rational outputs; anything
that needs a square root (cosines, distances, the cartesian placement)
is computed in floats.

Note on oriented distances: the source relation alpha/a = d_A/(2s) leaves
``s`` undefined. For normalized coordinates it only balances when ``s`` is
the triangle's area, so ``oriented_distances`` uses d_A = 2*Area*alpha/(a*sum).
"""

import logging
import math
from typing import Sequence, Tuple

from .models import (
    BaryLine,
    BaryPoint,
    CartesianPlacement,
    CartesianPoint,
    CoincidentLines,
    CoincidentPoints,
    Number,
    OrientedDistances,
    PointAtInfinity,
    TriangleShape,
    to_exact,
)

logger = logging.getLogger(__name__)


def cross(u: Sequence[Number], v: Sequence[Number]) -> Tuple[Number, Number, Number]:
    """Cross product of two homogeneous triples."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(r1: Sequence[Number], r2: Sequence[Number], r3: Sequence[Number]) -> Number:
    c = cross(r2, r3)
    return r1[0] * c[0] + r1[1] * c[1] + r1[2] * c[2]


def normalize(point: BaryPoint) -> BaryPoint:
    """Absolute barycentrics (coordinates sum to exactly 1)."""
    total = point.total
    if total == 0:
        raise PointAtInfinity(f"{point!r} has coordinate sum 0")
    return BaryPoint(point.alpha / total, point.beta / total, point.gamma / total)


def line_through(p: BaryPoint, q: BaryPoint) -> BaryLine:
    coeffs = cross(p.coords, q.coords)
    if all(v == 0 for v in coeffs):
        raise CoincidentPoints(f"{p!r} and {q!r} are the same point")
    return BaryLine(*coeffs)


def line_intersection(l1: BaryLine, l2: BaryLine) -> BaryPoint:
    coords = cross(l1.coeffs, l2.coeffs)
    if all(v == 0 for v in coords):
        raise CoincidentLines(f"{l1!r} and {l2!r} are the same line")
    return BaryPoint(*coords)


def concurrency_det(l1: BaryLine, l2: BaryLine, l3: BaryLine) -> Number:
    """Zero iff the three lines are concurrent (or two of them coincide)."""
    return det3(l1.coeffs, l2.coeffs, l3.coeffs)


def area_sq16(triangle: TriangleShape) -> Number:
    """16 * Area^2 from the squared sides (Heron)."""
    a2, b2, c2 = triangle.squares
    return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)


def area(triangle: TriangleShape) -> float:
    return math.sqrt(float(area_sq16(triangle))) / 4.0


def cosines(triangle: TriangleShape) -> Tuple[float, float, float]:
    """(cos A, cos B, cos C) by the law of cosines."""
    a2, b2, c2 = (float(s) for s in triangle.squares)
    a, b, c = (float(s) for s in triangle.sides)
    return (
        (b2 + c2 - a2) / (2 * b * c),
        (c2 + a2 - b2) / (2 * c * a),
        (a2 + b2 - c2) / (2 * a * b),
    )


def oriented_distances(triangle: TriangleShape, point: BaryPoint) -> OrientedDistances:
    """Signed distances to BC, CA, AB: d_X = 2*Area*x / (side_X * sum)."""
    total = point.total
    if total == 0:
        raise PointAtInfinity(f"{point!r} has no finite distances")
    twice_area = 2.0 * area(triangle)
    values = [
        twice_area * float(coord / total) / float(side)
        for coord, side in zip(point.coords, triangle.sides)
    ]
    return OrientedDistances(*values)


def placement(triangle: TriangleShape) -> CartesianPlacement:
    """B = (0, 0), C = (a, 0), A = ((a^2 + c^2 - b^2) / (2a), 2*Area/a)."""
    a = float(triangle.a)
    a2, b2, c2 = (float(s) for s in triangle.squares)
    height = 2.0 * area(triangle) / a
    return CartesianPlacement(
        A=((a2 + c2 - b2) / (2.0 * a), height),
        B=(0.0, 0.0),
        C=(a, 0.0),
    )


def to_cartesian(frame: CartesianPlacement, point: BaryPoint) -> CartesianPoint:
    """Affine combination of the placed vertices."""
    p = normalize(point.to_float())
    x = sum(w * v[0] for w, v in zip(p.coords, frame.vertices))
    y = sum(w * v[1] for w, v in zip(p.coords, frame.vertices))
    return x, y


def signed_area(p, q, r) -> Number:
    return ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])) / 2


def barycentric_from_vertices(A, B, C, pt) -> BaryPoint:
    """Normalized barycentrics of ``pt`` by signed sub-triangle areas.

    Exact when all coordinates are rational.
    """
    A, B, C, pt = ([to_exact(v) for v in p] for p in (A, B, C, pt))
    whole = signed_area(A, B, C)
    if whole == 0:
        raise CoincidentPoints("reference vertices are collinear")
    return BaryPoint(
        signed_area(pt, B, C) / whole,
        signed_area(A, pt, C) / whole,
        signed_area(A, B, pt) / whole,
    )


def from_cartesian(frame: CartesianPlacement, pt: CartesianPoint) -> BaryPoint:
    return barycentric_from_vertices(frame.A, frame.B, frame.C, (float(pt[0]), float(pt[1])))
