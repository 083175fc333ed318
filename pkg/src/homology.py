"""Cevian ratios, the Ceva test and the homology center of a pedal triangle.

Sign convention: ratios are directed as A_iB/A_iC, B_iC/B_iA, C_iA/C_iB, so
concurrent cevians give a product of -1 (the classical BA_i/A_iC form gives +1;
each directed ratio here is the negative of the classical one).
"""

import logging
from typing import List, Optional, Tuple

from .config import config
from .core import cosines, line_intersection, line_through
from .models import (
    BaryLine,
    BaryPoint,
    CevaRatio,
    DegenerateCevian,
    FootAtVertex,
    GeometryError,
    NotPerspective,
    Number,
    PointAtInfinity,
    Side,
    TriangleShape,
)
from .pedal import foot_weights

logger = logging.getLogger(__name__)

VERTICES = (BaryPoint(1, 0, 0), BaryPoint(0, 1, 0), BaryPoint(0, 0, 1))


def _ratio_terms(triangle: TriangleShape, point: BaryPoint, side: Side) -> Tuple[Number, Number]:
    """(numerator, denominator) of the cleared ratio, e.g. N_A / D_A for BC."""
    if point.total == 0:
        raise PointAtInfinity(f"{point!r} has no pedal triangle")
    weights = foot_weights(triangle, point, side)
    _, j, k = side.cyclic()
    numerator, denominator = weights[k], weights[j]
    if denominator == 0 or numerator == 0:
        raise FootAtVertex(f"foot of {point!r} on {side.value} is a vertex")
    return numerator, denominator


def cevian_ratio(triangle: TriangleShape, point: BaryPoint, side: Side) -> CevaRatio:
    """Directed ratio of the pedal foot on ``side``.

    BC: -(alpha(a^2 + c^2 - b^2) + 2a^2 gamma) / (alpha(a^2 + b^2 - c^2) + 2a^2 beta).
    """
    numerator, denominator = _ratio_terms(triangle, point, side)
    return CevaRatio(-numerator / denominator)


def cevian_ratio_cosine(triangle: TriangleShape, point: BaryPoint, side: Side) -> float:
    """Float view of the same ratio written with cosines, e.g. -(alpha c cosB + gamma a)/(alpha b cosC + beta a)."""
    cos = cosines(triangle)
    sides = [float(s) for s in triangle.sides]
    p = [float(v) for v in point.coords]
    i, j, k = side.cyclic()
    numerator = p[i] * sides[k] * cos[j] + p[k] * sides[i]
    denominator = p[i] * sides[j] * cos[k] + p[j] * sides[i]
    if denominator == 0:
        raise FootAtVertex(f"foot of {point!r} on {side.value} is a vertex")
    return -numerator / denominator


def ceva_factors(triangle: TriangleShape, point: BaryPoint) -> Tuple[Number, Number]:
    """(N_A N_B N_C, D_A D_B D_C); the product of ratios is -N/D.

    Their difference N - D equals twice the locus polynomial.
    """
    numerators, denominators = zip(*(_ratio_terms(triangle, point, side) for side in Side))
    return (numerators[0] * numerators[1] * numerators[2],
            denominators[0] * denominators[1] * denominators[2])


def ceva_product(triangle: TriangleShape, point: BaryPoint) -> Number:
    result = 1
    for side in Side:
        result = result * cevian_ratio(triangle, point, side).value
    return result


def cevian_lines(triangle: TriangleShape, point: BaryPoint) -> List[BaryLine]:
    """Lines A A_i, B B_i, C C_i."""
    if point.total == 0:
        raise PointAtInfinity(f"{point!r} has no pedal triangle")
    lines = []
    for vertex, side in zip(VERTICES, Side):
        foot = BaryPoint(*foot_weights(triangle, point, side))
        lines.append(line_through(vertex, foot))
    return lines


def _product_is_minus_one(product: Number, exact: bool, tol: float) -> bool:
    if exact:
        return product == -1
    return abs(product + 1) <= tol


def perspector(triangle: TriangleShape, point: BaryPoint, tol: Optional[float] = None) -> BaryPoint:
    """Common point of the three cevians (the homology center)."""
    tol = config.ceva_tolerance if tol is None else tol
    if point.zero_count >= 2:
        raise DegenerateCevian(f"{point!r} is a vertex")
    product = ceva_product(triangle, point)
    exact = point.is_exact
    if not _product_is_minus_one(product, exact, tol):
        raise NotPerspective(f"Ceva product of {point!r} is {product}, not -1")

    first, second, third = cevian_lines(triangle, point)
    center = line_intersection(first, second)
    if exact:
        if not third.contains(center):
            raise NotPerspective(f"third cevian misses {center!r}")
        center = center.primitive()
    logger.debug(f"Perspector of {point!r} is {center!r}")
    return center


def is_orthohomological(triangle: TriangleShape, point: BaryPoint, tol: Optional[float] = None) -> bool:
    """True iff the pedal triangle of ``point`` is perspective with the reference triangle."""
    tol = config.ceva_tolerance if tol is None else tol
    try:
        product = ceva_product(triangle, point)
    except GeometryError as e:
        logger.debug(f"Orthohomology undecided for {point!r}: {e.code} {e}")
        return False
    return _product_is_minus_one(product, point.is_exact, tol)
