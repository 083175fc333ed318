"""The locus cubic of points whose pedal triangle is perspective with ABC.

Canonical form (cleared denominators, exact on rationals):

    F(alpha, beta, gamma) = alpha (b^2 gamma^2 - c^2 beta^2) kA
                          + beta  (c^2 alpha^2 - a^2 gamma^2) kB
                          + gamma (a^2 beta^2 - b^2 alpha^2) kC

with kA = 2a^2(b^2 + c^2 - a^2) - (a^2 + c^2 - b^2)(a^2 + b^2 - c^2) and
cyclic analogues, i.e. kA = 4 a^2 b c (cos A - cos B cos C). The cosine
form and the oriented-distance form are float views proportional to F.
"""

import asyncio
import logging
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import config
from .core import area, cosines, placement, signed_area
from .models import (
    BaryPoint,
    CartesianPoint,
    ChordDegenerate,
    CoincidentPoints,
    InvalidPoint,
    NotOnLocus,
    Number,
    OrientedDistances,
    PivotCoefficients,
    RightAngleDegeneracy,
    TracedCurve,
    TriangleShape,
    UndefinedAtVertex,
    UnknownCenter,
)
from .worker import evaluate_grid_concurrently

logger = logging.getLogger(__name__)

CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def pivot_coefficients(triangle: TriangleShape) -> PivotCoefficients:
    s = triangle.squares
    values = [
        2 * s[i] * (s[j] + s[k] - s[i]) - (s[i] + s[k] - s[j]) * (s[i] + s[j] - s[k])
        for i, j, k in CYCLIC
    ]
    return PivotCoefficients(*values)


class LocusPolynomial:
    """Callable cubic F for one triangle."""

    def __init__(self, triangle: TriangleShape):
        self.triangle = triangle
        self.pivots = pivot_coefficients(triangle)
        self._float_squares = tuple(float(v) for v in triangle.squares)
        self._float_pivots = tuple(float(v) for v in self.pivots.as_tuple())

    def evaluate(self, alpha: Number, beta: Number, gamma: Number) -> Number:
        s = self.triangle.squares
        k = self.pivots.as_tuple()
        p = (alpha, beta, gamma)
        return sum(p[i] * (s[j] * p[k_] ** 2 - s[k_] * p[j] ** 2) * k[i] for i, j, k_ in CYCLIC)

    def evaluate_array(self, alpha: np.ndarray, beta: np.ndarray, gamma: np.ndarray) -> np.ndarray:
        """Float evaluation on numpy arrays."""
        s = self._float_squares
        k = self._float_pivots
        p = (alpha, beta, gamma)
        total = np.zeros(np.shape(alpha), dtype=float)
        for i, j, k_ in CYCLIC:
            total = total + p[i] * (s[j] * p[k_] ** 2 - s[k_] * p[j] ** 2) * k[i]
        return total

    def __call__(self, point: BaryPoint) -> Number:
        return self.evaluate(*point.coords)

    def coefficients(self) -> Dict[str, Number]:
        """Monomial coefficients; the pure cubes and alpha*beta*gamma vanish."""
        a2, b2, c2 = self.triangle.squares
        kA, kB, kC = self.pivots.as_tuple()
        zero = 0 * a2
        return {
            "alpha^3": zero,
            "beta^3": zero,
            "gamma^3": zero,
            "alpha^2*beta": c2 * kB,
            "alpha^2*gamma": -b2 * kC,
            "alpha*beta^2": -c2 * kA,
            "beta^2*gamma": a2 * kC,
            "alpha*gamma^2": b2 * kA,
            "beta*gamma^2": -a2 * kB,
            "alpha*beta*gamma": zero,
        }


def locus_value(triangle: TriangleShape, point: BaryPoint) -> Number:
    """F at the given representative; zero iff the point lies on the locus."""
    return LocusPolynomial(triangle)(point)


def locus_value_cosine(triangle: TriangleShape, point: BaryPoint) -> float:
    """Cosine form: sum of (alpha/a)(gamma^2/c^2 - beta^2/b^2)(cos A - cos B cos C)."""
    cos = cosines(triangle)
    sides = [float(v) for v in triangle.sides]
    squares = [float(v) for v in triangle.squares]
    p = [float(v) for v in point.coords]
    return sum(
        (p[i] / sides[i]) * (p[k] ** 2 / squares[k] - p[j] ** 2 / squares[j]) * (cos[i] - cos[j] * cos[k])
        for i, j, k in CYCLIC
    )


def locus_value_distances(triangle: TriangleShape, distances: OrientedDistances) -> float:
    """Oriented-distance form: sum of d_A (d_C^2 - d_B^2)(cos A - cos B cos C)."""
    cos = cosines(triangle)
    d = distances.as_tuple()
    return sum(d[i] * (d[k] ** 2 - d[j] ** 2) * (cos[i] - cos[j] * cos[k]) for i, j, k in CYCLIC)


def cosine_form_factor(triangle: TriangleShape) -> Number:
    """4 (abc)^3: locus_value = cosine_form_factor * locus_value_cosine."""
    a, b, c = triangle.sides
    return 4 * (a * b * c) ** 3


def distance_form_factor(triangle: TriangleShape) -> float:
    """(2 Area)^3 / (4 (abc)^3): distance form over F at the normalized point."""
    return (2.0 * area(triangle)) ** 3 / float(cosine_form_factor(triangle))


def isogonal_transfer_factor(triangle: TriangleShape) -> Number:
    """lambda with F(isogonal(P)) = lambda * alpha beta gamma * F(P)."""
    a2, b2, c2 = triangle.squares
    return -a2 * b2 * c2


def equilateral_scale(triangle: TriangleShape) -> Number:
    """k(a) = a^6 when a = b = c."""
    return triangle.a2 ** 3


def equilateral_locus_value(point: BaryPoint) -> Number:
    alpha, beta, gamma = point.coords
    return (beta - alpha) * (alpha - gamma) * (gamma - beta)


def isogonal(triangle: TriangleShape, point: BaryPoint, canonical: bool = True) -> BaryPoint:
    """(a^2 beta gamma : b^2 gamma alpha : c^2 alpha beta).

    With ``canonical=False`` the product representative is returned as is,
    which is the one the transfer identity is stated for.
    """
    if point.zero_count >= 2:
        raise UndefinedAtVertex(f"isogonal conjugate of vertex {point!r} is undefined")
    a2, b2, c2 = triangle.squares
    alpha, beta, gamma = point.coords
    conjugate = BaryPoint(a2 * beta * gamma, b2 * gamma * alpha, c2 * alpha * beta)
    return conjugate.primitive() if canonical else conjugate


def third_intersection(triangle: TriangleShape, p: BaryPoint, q: BaryPoint) -> BaryPoint:
    """Third meet of the line PQ with the locus (chord construction).

    Along X(t) = P + tQ the cubic restricts to c1 t + c2 t^2, so the third
    point is X(-c1/c2), returned as c2 P - c1 Q.
    """
    if not (p.is_exact and q.is_exact):
        raise InvalidPoint("chord construction needs exact points")
    if p.proportional_to(q):
        raise CoincidentPoints(f"{p!r} and {q!r} are the same point")
    poly = LocusPolynomial(triangle)
    if poly(p) != 0 or poly(q) != 0:
        raise NotOnLocus("both chord endpoints must lie on the locus")

    f_plus = poly.evaluate(*(x + y for x, y in zip(p, q)))
    f_minus = poly.evaluate(*(x - y for x, y in zip(p, q)))
    c2 = (f_plus + f_minus) / 2
    c1 = (f_plus - f_minus) / 2
    if c2 == 0:
        raise ChordDegenerate(f"line through {p!r} and {q!r} is tangent at Q or lies on the locus")
    return BaryPoint(*(c2 * x - c1 * y for x, y in zip(p, q))).primitive()


def _vertex(index: int) -> Callable[[TriangleShape], BaryPoint]:
    def build(triangle: TriangleShape) -> BaryPoint:
        coords = [0, 0, 0]
        coords[index] = 1
        return BaryPoint(*coords)
    return build


def _centroid(triangle: TriangleShape) -> BaryPoint:
    return BaryPoint(1, 1, 1)


def _incenter(triangle: TriangleShape) -> BaryPoint:
    return BaryPoint(*triangle.sides)


def _excenter(index: int) -> Callable[[TriangleShape], BaryPoint]:
    def build(triangle: TriangleShape) -> BaryPoint:
        coords = list(triangle.sides)
        coords[index] = -coords[index]
        return BaryPoint(*coords)
    return build


def _conway(triangle: TriangleShape) -> Tuple[Number, Number, Number]:
    """(b^2 + c^2 - a^2, c^2 + a^2 - b^2, a^2 + b^2 - c^2)."""
    s = triangle.squares
    return tuple(s[j] + s[k] - s[i] for i, j, k in CYCLIC)


def orthocenter_reciprocal(triangle: TriangleShape) -> BaryPoint:
    """(1/S_A : 1/S_B : 1/S_C); undefined when an angle is right."""
    conway = _conway(triangle)
    if any(v == 0 for v in conway):
        raise RightAngleDegeneracy("right angle: reciprocal orthocenter form is undefined")
    return BaryPoint(*(1 / v for v in conway)).primitive()


def _orthocenter(triangle: TriangleShape) -> BaryPoint:
    try:
        return orthocenter_reciprocal(triangle)
    except RightAngleDegeneracy as e:
        logger.info(f"Orthocenter falls back to product form: {e}")
        sa, sb, sc = _conway(triangle)
        return BaryPoint(sb * sc, sc * sa, sa * sb).primitive()


def _circumcenter(triangle: TriangleShape) -> BaryPoint:
    return BaryPoint(*(s * v for s, v in zip(triangle.squares, _conway(triangle)))).primitive()


def _pivot(triangle: TriangleShape) -> BaryPoint:
    return BaryPoint(*pivot_coefficients(triangle).as_tuple()).primitive()


CENTERS: Dict[str, Callable[[TriangleShape], BaryPoint]] = {
    "A": _vertex(0),
    "B": _vertex(1),
    "C": _vertex(2),
    "centroid": _centroid,
    "incenter": _incenter,
    "excenter_a": _excenter(0),
    "excenter_b": _excenter(1),
    "excenter_c": _excenter(2),
    "orthocenter": _orthocenter,
    "circumcenter": _circumcenter,
    "pivot": _pivot,
}

ALIASES = {
    "G": "centroid",
    "I": "incenter",
    "H": "orthocenter",
    "O": "circumcenter",
    "K": "pivot",
    "Ia": "excenter_a",
    "Ib": "excenter_b",
    "Ic": "excenter_c",
}


def catalog_names() -> List[str]:
    return list(CENTERS)


def known_center(triangle: TriangleShape, name: str) -> BaryPoint:
    key = ALIASES.get(name, name)
    if key not in CENTERS:
        raise UnknownCenter(f"unknown center {name!r}; known: {', '.join(CENTERS)}")
    point = CENTERS[key](triangle)
    return point.primitive() if point.is_exact else point


def locus_members(triangle: TriangleShape) -> List[str]:
    """Catalog names whose exact coordinates satisfy F = 0."""
    poly = LocusPolynomial(triangle)
    members = []
    for name in CENTERS:
        point = known_center(triangle, name)
        if point.is_exact and poly(point) == 0:
            members.append(name)
    return members


def generate_locus_points(
    triangle: TriangleShape,
    limit: int,
    seeds: Optional[Iterable[BaryPoint]] = None,
    include_isogonal: bool = False,
) -> List[BaryPoint]:
    """Distinct exact locus points by repeated chords, seeds first.

    Pairs (i, j) are taken in order of j, so new points are combined with
    the smallest-height points first.
    """
    poly = LocusPolynomial(triangle)
    if seeds is None:
        seeds = [known_center(triangle, name) for name in locus_members(triangle)]

    pool: List[BaryPoint] = []
    seen = set()

    def add(point: BaryPoint) -> None:
        point = point.primitive()
        key = point.key()
        if key in seen:
            return
        if poly(point) != 0:
            raise NotOnLocus(f"{point!r} is not on the locus")
        seen.add(key)
        pool.append(point)

    for seed in seeds:
        add(seed)

    skipped = 0
    j = 1
    while len(pool) < limit and j < len(pool):
        for i in range(j):
            try:
                add(third_intersection(triangle, pool[i], pool[j]))
            except (ChordDegenerate, CoincidentPoints):
                skipped += 1
                continue
            if include_isogonal and pool[-1].zero_count < 2:
                add(isogonal(triangle, pool[-1]))
            if len(pool) >= limit:
                break
        j += 1

    if len(pool) < limit:
        logger.warning(f"Chord closure exhausted at {len(pool)} points (requested {limit})")
    logger.debug(f"Generated {len(pool)} locus points, skipped {skipped} degenerate chords")
    return pool[:limit]


def default_bbox(triangle: TriangleShape, scale: Optional[float] = None) -> Tuple[float, float, float, float]:
    """Triangle bounding box scaled about its center."""
    scale = config.trace_bbox_scale if scale is None else scale
    x0, y0, x1, y1 = placement(triangle).bounding_box()
    cx, cy = (x0 + x1) / 2.0, (y0 + y1) / 2.0
    hw, hh = (x1 - x0) / 2.0 * scale, (y1 - y0) / 2.0 * scale
    return cx - hw, cy - hh, cx + hw, cy + hh


def cartesian_field(triangle: TriangleShape) -> Callable[[np.ndarray, np.ndarray], np.ndarray]:
    """p -> F(from_cartesian(p)) on numpy arrays."""
    frame = placement(triangle)
    poly = LocusPolynomial(triangle)
    whole = signed_area(frame.A, frame.B, frame.C)

    def field(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        pt = (x, y)
        alpha = signed_area(pt, frame.B, frame.C) / whole
        beta = signed_area(frame.A, pt, frame.C) / whole
        gamma = signed_area(frame.A, frame.B, pt) / whole
        return poly.evaluate_array(alpha, beta, gamma)

    return field


# Corner bits: c0=(r, c), c1=(r, c+1), c2=(r+1, c+1), c3=(r+1, c).
# Edges: e0 = c0-c1, e1 = c1-c2, e2 = c3-c2, e3 = c0-c3.
SEGMENT_TABLE: Dict[int, List[Tuple[int, int]]] = {
    1: [(0, 3)],
    2: [(0, 1)],
    3: [(1, 3)],
    4: [(1, 2)],
    6: [(0, 2)],
    7: [(2, 3)],
    8: [(2, 3)],
    9: [(0, 2)],
    11: [(1, 2)],
    12: [(1, 3)],
    13: [(0, 1)],
    14: [(0, 3)],
}

# Saddles: (center positive, center not positive)
SADDLE_TABLE: Dict[int, Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]] = {
    5: ([(0, 1), (2, 3)], [(0, 3), (1, 2)]),
    10: ([(0, 3), (1, 2)], [(0, 1), (2, 3)]),
}

Edge = Tuple[str, int, int]


def _cell_edges(r: int, c: int) -> Tuple[Edge, Edge, Edge, Edge]:
    return ("h", r, c), ("v", r, c + 1), ("h", r + 1, c), ("v", r, c)


def _crossing(edge: Edge, xs: np.ndarray, ys: np.ndarray, values: np.ndarray) -> CartesianPoint:
    kind, r, c = edge
    v0 = values[r, c]
    if kind == "h":
        v1 = values[r, c + 1]
        t = v0 / (v0 - v1)
        return float(xs[c] + t * (xs[c + 1] - xs[c])), float(ys[r])
    v1 = values[r + 1, c]
    t = v0 / (v0 - v1)
    return float(xs[c]), float(ys[r] + t * (ys[r + 1] - ys[r]))


def marching_squares(
    xs: np.ndarray,
    ys: np.ndarray,
    values: np.ndarray,
    center_values: Callable[[np.ndarray, np.ndarray], np.ndarray],
) -> List[List[CartesianPoint]]:
    """Zero-level polylines of a sampled field, ordered by first (row, col) cell."""
    positive = values > 0
    case = (positive[:-1, :-1].astype(int)
            | positive[:-1, 1:].astype(int) << 1
            | positive[1:, 1:].astype(int) << 2
            | positive[1:, :-1].astype(int) << 3)
    rows, cols = np.nonzero((case != 0) & (case != 15))

    saddle_mask = (case[rows, cols] == 5) | (case[rows, cols] == 10)
    saddle_centers: Dict[Tuple[int, int], bool] = {}
    if np.any(saddle_mask):
        sr, sc = rows[saddle_mask], cols[saddle_mask]
        cx = (xs[sc] + xs[sc + 1]) / 2.0
        cy = (ys[sr] + ys[sr + 1]) / 2.0
        for r, c, v in zip(sr.tolist(), sc.tolist(), np.asarray(center_values(cx, cy)).tolist()):
            saddle_centers[(r, c)] = v > 0

    segments: List[Tuple[Edge, Edge]] = []
    for r, c in zip(rows.tolist(), cols.tolist()):
        index = int(case[r, c])
        if index in SADDLE_TABLE:
            pairs = SADDLE_TABLE[index][0 if saddle_centers[(r, c)] else 1]
        else:
            pairs = SEGMENT_TABLE[index]
        edges = _cell_edges(r, c)
        for e_start, e_end in pairs:
            segments.append((edges[e_start], edges[e_end]))

    by_edge: Dict[Edge, List[int]] = {}
    for n, (e_start, e_end) in enumerate(segments):
        by_edge.setdefault(e_start, []).append(n)
        by_edge.setdefault(e_end, []).append(n)

    used = [False] * len(segments)

    def extend(chain: List[Edge], current: int) -> bool:
        """Walk from chain[-1]; True when the walk closes on chain[0]."""
        while True:
            edge = chain[-1]
            nxt = next((n for n in by_edge[edge] if n != current and not used[n]), None)
            if nxt is None:
                return False
            used[nxt] = True
            e_start, e_end = segments[nxt]
            other = e_end if e_start == edge else e_start
            chain.append(other)
            current = nxt
            if other == chain[0]:
                return True

    polylines: List[List[CartesianPoint]] = []
    for n, (e_start, e_end) in enumerate(segments):
        if used[n]:
            continue
        used[n] = True
        forward = [e_start, e_end]
        if not extend(forward, n):
            backward = [e_start]
            extend(backward, n)
            forward = backward[:0:-1] + forward
        polylines.append([_crossing(edge, xs, ys, values) for edge in forward])
    return polylines


def _validate_grid(bbox: Sequence[float], resolution: int) -> None:
    if not config.min_resolution <= resolution <= config.max_resolution:
        raise ValueError("resolution out of range")
    if len(bbox) != 4:
        raise ValueError("bounding box needs four values")
    x0, y0, x1, y1 = bbox
    if not (x1 > x0 and y1 > y0):
        raise ValueError("bounding box is degenerate")


async def trace_async(
    triangle: TriangleShape,
    bbox: Optional[Sequence[float]] = None,
    resolution: Optional[int] = None,
    band_rows: Optional[int] = None,
    max_concurrency: Optional[int] = None,
) -> TracedCurve:
    """Marching-squares contour of F over a cartesian grid (level 0)."""
    bbox = tuple(float(v) for v in (default_bbox(triangle) if bbox is None else bbox))
    resolution = config.trace_resolution if resolution is None else resolution
    _validate_grid(bbox, resolution)

    x0, y0, x1, y1 = bbox
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)
    field = cartesian_field(triangle)

    logger.info(f"Tracing locus on {resolution}x{resolution} grid over bbox {bbox}")
    values = await evaluate_grid_concurrently(field, xs, ys, band_rows, max_concurrency)
    polylines = marching_squares(xs, ys, values, field)

    curve = TracedCurve(polylines=polylines, triangle=triangle, bbox=bbox, resolution=resolution)
    logger.info(f"Traced {curve!r}")
    return curve


def trace(
    triangle: TriangleShape,
    bbox: Optional[Sequence[float]] = None,
    resolution: Optional[int] = None,
    band_rows: Optional[int] = None,
    max_concurrency: Optional[int] = None,
) -> TracedCurve:
    return asyncio.run(trace_async(triangle, bbox, resolution, band_rows, max_concurrency))
