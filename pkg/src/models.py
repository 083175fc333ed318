"""Value types, error hierarchy and rational codec for the orthohomology toolkit."""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]
CartesianPoint = Tuple[float, float]


class GeometryError(Exception):
    """Base class for every geometric precondition failure."""

    code = "GEOMETRY_ERROR"


class PointAtInfinity(GeometryError):
    code = "POINT_AT_INFINITY"


class CoincidentPoints(GeometryError):
    code = "COINCIDENT_POINTS"


class CoincidentLines(GeometryError):
    code = "COINCIDENT_LINES"


class DegenerateDeterminant(GeometryError):
    code = "DEGENERATE_DETERMINANT"


class FootAtVertex(GeometryError):
    code = "FOOT_AT_VERTEX"


class NotPerspective(GeometryError):
    code = "NOT_PERSPECTIVE"


class DegenerateCevian(GeometryError):
    code = "DEGENERATE_CEVIAN"


class UndefinedAtVertex(GeometryError):
    code = "UNDEFINED_AT_VERTEX"


class ChordDegenerate(GeometryError):
    code = "CHORD_DEGENERATE"


class NotOnLocus(GeometryError):
    code = "NOT_ON_LOCUS"


class UnknownCenter(GeometryError):
    code = "UNKNOWN_CENTER"


class RightAngleDegeneracy(GeometryError):
    code = "RIGHT_ANGLE"


class DegenerateSegment(GeometryError):
    code = "DEGENERATE_SEGMENT"


class InvalidTriangle(GeometryError):
    code = "INVALID_TRIANGLE"


class InvalidPoint(GeometryError):
    code = "INVALID_POINT"


class Side(str, Enum):
    """Triangle sides, labelled by the two vertices they join."""

    BC = "BC"
    CA = "CA"
    AB = "AB"

    @property
    def index(self) -> int:
        """Index of the opposite vertex (A=0, B=1, C=2)."""
        return {"BC": 0, "CA": 1, "AB": 2}[self.value]

    def cyclic(self) -> Tuple[int, int, int]:
        """(i, j, k): opposite vertex, then the side's two endpoints in cyclic order."""
        i = self.index
        return i, (i + 1) % 3, (i + 2) % 3


def to_exact(value: Any) -> Number:
    """Coerce ints, strings and Fractions to Fraction; floats stay floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    return float(value)


def is_exact(value: Any) -> bool:
    return isinstance(value, (Fraction, int)) and not isinstance(value, bool)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", "p" or a decimal literal into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def format_rational(value: Number) -> str:
    """Serialize as "p/q" (or "p" when q = 1); floats use repr."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def exact_sqrt(value: Fraction) -> Optional[Fraction]:
    """Rational square root when one exists."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _all_exact(values) -> bool:
    return all(isinstance(v, Fraction) for v in values)


@dataclass(frozen=True)
class TriangleShape:
    """A triangle held by its exact squared side lengths.

    Side lengths themselves are exact when every square is a rational square
    (always the case for ``from_sides``); otherwise they are floats and the
    triangle runs in float mode for side-dependent quantities only.
    """

    a2: Fraction
    b2: Fraction
    c2: Fraction

    def __post_init__(self):
        for name in ("a2", "b2", "c2"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))
        if min(self.a2, self.b2, self.c2) <= 0:
            raise InvalidTriangle("side lengths must be positive")
        s1, s2, s3 = self.a2, self.b2, self.c2
        if 2 * (s1 * s2 + s2 * s3 + s3 * s1) - (s1 * s1 + s2 * s2 + s3 * s3) <= 0:
            raise InvalidTriangle("triangle inequality violated")

    @classmethod
    def from_sides(cls, a: Any, b: Any, c: Any) -> "TriangleShape":
        sides = [to_exact(v) for v in (a, b, c)]
        if not _all_exact(sides):
            raise InvalidTriangle("side lengths must be exact rationals")
        if min(sides) <= 0:
            raise InvalidTriangle("side lengths must be positive")
        x, y, z = sides
        if not (x + y > z and y + z > x and z + x > y):
            raise InvalidTriangle("triangle inequality violated")
        return cls(x * x, y * y, z * z)

    @classmethod
    def from_vertices(cls, A: Tuple[Any, Any], B: Tuple[Any, Any], C: Tuple[Any, Any]) -> "TriangleShape":
        """Squared sides from rational vertex coordinates."""
        pa, pb, pc = ([to_exact(v) for v in p] for p in (A, B, C))
        if not _all_exact(pa + pb + pc):
            raise InvalidTriangle("vertex coordinates must be exact rationals")

        def dist2(p, q):
            return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2

        if (pb[0] - pa[0]) * (pc[1] - pa[1]) - (pc[0] - pa[0]) * (pb[1] - pa[1]) == 0:
            raise InvalidTriangle("triangle inequality violated (collinear vertices)")
        return cls(dist2(pb, pc), dist2(pc, pa), dist2(pa, pb))

    @property
    def squares(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.a2, self.b2, self.c2

    @cached_property
    def sides(self) -> Tuple[Number, Number, Number]:
        roots = [exact_sqrt(s) for s in self.squares]
        if all(r is not None for r in roots):
            return tuple(roots)
        return tuple(math.sqrt(float(s)) for s in self.squares)

    @property
    def a(self) -> Number:
        return self.sides[0]

    @property
    def b(self) -> Number:
        return self.sides[1]

    @property
    def c(self) -> Number:
        return self.sides[2]

    @property
    def exact_sides(self) -> bool:
        return _all_exact(self.sides)

    @property
    def is_equilateral(self) -> bool:
        return self.a2 == self.b2 == self.c2

    @property
    def diameter(self) -> float:
        return math.sqrt(float(max(self.squares)))

    def describe(self) -> List[str]:
        return [format_rational(s) for s in self.sides]

    def __repr__(self):
        return f"TriangleShape(a2={self.a2}, b2={self.b2}, c2={self.c2})"


def _coerce_triple(obj, names):
    values = [to_exact(getattr(obj, n)) for n in names]
    for n, v in zip(names, values):
        object.__setattr__(obj, n, v)
    return values


@dataclass(frozen=True)
class BaryPoint:
    """Homogeneous barycentric triple (alpha : beta : gamma), exact or float."""

    alpha: Number
    beta: Number
    gamma: Number

    def __post_init__(self):
        values = _coerce_triple(self, ("alpha", "beta", "gamma"))
        if all(v == 0 for v in values):
            raise InvalidPoint("barycentric triple is (0, 0, 0)")

    def __iter__(self) -> Iterator[Number]:
        return iter((self.alpha, self.beta, self.gamma))

    def __getitem__(self, index: int) -> Number:
        return (self.alpha, self.beta, self.gamma)[index]

    @property
    def coords(self) -> Tuple[Number, Number, Number]:
        return self.alpha, self.beta, self.gamma

    @property
    def total(self) -> Number:
        return self.alpha + self.beta + self.gamma

    @property
    def is_exact(self) -> bool:
        return _all_exact(self.coords)

    @property
    def is_finite(self) -> bool:
        return self.total != 0

    @property
    def zero_count(self) -> int:
        return sum(1 for v in self.coords if v == 0)

    def scaled(self, factor: Number) -> "BaryPoint":
        return BaryPoint(*(v * factor for v in self.coords))

    def to_float(self) -> "BaryPoint":
        return BaryPoint(*(float(v) for v in self.coords))

    def primitive(self) -> "BaryPoint":
        """Coprime integer representative with positive sum (or leading sign) when exact."""
        if not self.is_exact:
            return self
        lcm = 1
        for v in self.coords:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in self.coords]
        g = 0
        for n in ints:
            g = math.gcd(g, n)
        ints = [n // g for n in ints]
        total = sum(ints)
        lead = total if total != 0 else next(n for n in ints if n != 0)
        if lead < 0:
            ints = [-n for n in ints]
        return BaryPoint(*ints)

    def proportional_to(self, other: "BaryPoint") -> bool:
        """Projective equality (exact on rationals)."""
        p, q = self.coords, other.coords
        return (p[1] * q[2] - p[2] * q[1] == 0
                and p[2] * q[0] - p[0] * q[2] == 0
                and p[0] * q[1] - p[1] * q[0] == 0)

    def key(self) -> Tuple:
        return tuple(self.primitive().coords)

    def ratio_string(self) -> str:
        return ":".join(format_rational(v) for v in self.primitive().coords)

    def to_strings(self) -> List[str]:
        return [format_rational(v) for v in self.coords]

    def __repr__(self):
        return f"BaryPoint({', '.join(self.to_strings())})"


@dataclass(frozen=True)
class BaryLine:
    """Homogeneous line l*x + m*y + n*z = 0."""

    l: Number
    m: Number
    n: Number

    def __post_init__(self):
        values = _coerce_triple(self, ("l", "m", "n"))
        if all(v == 0 for v in values):
            raise GeometryError("line coefficients are (0, 0, 0)")

    def __iter__(self) -> Iterator[Number]:
        return iter((self.l, self.m, self.n))

    @property
    def coeffs(self) -> Tuple[Number, Number, Number]:
        return self.l, self.m, self.n

    def evaluate(self, point: BaryPoint) -> Number:
        return self.l * point.alpha + self.m * point.beta + self.n * point.gamma

    def contains(self, point: BaryPoint) -> bool:
        return self.evaluate(point) == 0

    def scaled(self, factor: Number) -> "BaryLine":
        return BaryLine(*(v * factor for v in self.coeffs))


@dataclass(frozen=True)
class DirectionVector:
    """Point at infinity (u : v : w) with u + v + w = 0."""

    u: Number
    v: Number
    w: Number

    def __post_init__(self):
        values = _coerce_triple(self, ("u", "v", "w"))
        if all(x == 0 for x in values):
            raise GeometryError("direction vector is (0, 0, 0)")
        total = sum(values)
        if _all_exact(values):
            if total != 0:
                raise GeometryError(f"direction coordinates sum to {total}, not 0")
        elif abs(total) > 1e-12 * max(abs(x) for x in values):
            raise GeometryError(f"direction coordinates sum to {total}, not 0")

    @property
    def coords(self) -> Tuple[Number, Number, Number]:
        return self.u, self.v, self.w

    def as_point(self) -> BaryPoint:
        return BaryPoint(*self.coords)


@dataclass(frozen=True)
class CartesianPlacement:
    """B at the origin, C on the positive x-axis, A above it."""

    A: CartesianPoint
    B: CartesianPoint
    C: CartesianPoint

    @property
    def vertices(self) -> Tuple[CartesianPoint, CartesianPoint, CartesianPoint]:
        return self.A, self.B, self.C

    def bounding_box(self) -> Tuple[float, float, float, float]:
        xs = [p[0] for p in self.vertices]
        ys = [p[1] for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class OrientedDistances:
    """Signed distances to BC, CA, AB; positive on the interior side."""

    dA: float
    dB: float
    dC: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return self.dA, self.dB, self.dC


@dataclass(frozen=True)
class PedalTriangle:
    footA: BaryPoint
    footB: BaryPoint
    footC: BaryPoint

    def feet(self) -> Tuple[BaryPoint, BaryPoint, BaryPoint]:
        return self.footA, self.footB, self.footC


@dataclass(frozen=True)
class CevaRatio:
    """Signed ratio in which a pedal foot divides its side."""

    value: Number

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class PivotCoefficients:
    kA: Number
    kB: Number
    kC: Number

    def as_tuple(self) -> Tuple[Number, Number, Number]:
        return self.kA, self.kB, self.kC


@dataclass(frozen=True)
class CartesianLine:
    """p*x + q*y + r = 0 with p^2 + q^2 = 1."""

    p: float
    q: float
    r: float

    def __post_init__(self):
        if abs(self.p * self.p + self.q * self.q - 1.0) > 1e-14:
            raise GeometryError("cartesian line normal is not unit length")

    def evaluate(self, pt: CartesianPoint) -> float:
        return self.p * pt[0] + self.q * pt[1] + self.r


@dataclass
class TracedCurve:
    """Zero set of the locus polynomial as cartesian polylines."""

    polylines: List[List[CartesianPoint]]
    triangle: TriangleShape
    bbox: Tuple[float, float, float, float]
    resolution: int

    @property
    def vertex_count(self) -> int:
        return sum(len(p) for p in self.polylines)

    def vertices(self) -> Iterator[CartesianPoint]:
        for polyline in self.polylines:
            yield from polyline

    @property
    def cell_size(self) -> Tuple[float, float]:
        x0, y0, x1, y1 = self.bbox
        return (x1 - x0) / (self.resolution - 1), (y1 - y0) / (self.resolution - 1)

    def __repr__(self):
        return f"TracedCurve(polylines={len(self.polylines)}, vertices={self.vertex_count}, resolution={self.resolution})"


@dataclass
class PointReport:
    """Aggregated per-point results for the report subcommand."""

    triangle: List[str]
    precision: str
    point: List[str]
    normalized: Optional[List[str]]
    locus_value: str
    on_locus: bool
    ceva_product: Optional[str]
    perspector: Optional[str]
    isogonal: Optional[str]
    oriented_distances: Optional[List[float]]
    oracle_residual: Optional[float]
    reasons: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "triangle": self.triangle,
            "precision": self.precision,
            "point": self.point,
            "normalized": self.normalized,
            "locus_value": self.locus_value,
            "on_locus": self.on_locus,
            "ceva_product": self.ceva_product,
            "perspector": self.perspector,
            "isogonal": self.isogonal,
            "oriented_distances": self.oriented_distances,
            "oracle_residual": self.oracle_residual,
            "reasons": dict(sorted(self.reasons.items())),
        }


class CheckFailure:
    """A verification counterexample, kept for the summary."""

    def __init__(self, check: str, message: str, point: Optional[BaryPoint] = None):
        self.check = check
        self.message = message
        self.point = point

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "message": self.message,
            "point": self.point.to_strings() if self.point is not None else None,
        }

    def __repr__(self):
        return f"CheckFailure(check={self.check}, message={self.message})"
