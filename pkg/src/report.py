"""Per-point reports and center tables for the command-line surface."""

import logging
from typing import Any, Dict, List, Optional

from .config import config
from .core import normalize, oriented_distances, placement
from .homology import ceva_product, is_orthohomological, perspector
from .locus import CENTERS, LocusPolynomial, isogonal, known_center, pivot_coefficients
from .models import (
    BaryPoint,
    GeometryError,
    NotPerspective,
    PointReport,
    TriangleShape,
    format_rational,
)
from .oracle import cart_concurrency_residual

logger = logging.getLogger(__name__)


class ReportBuilder:
    """Collects each report field, recording a reason code when it is undefined."""

    def __init__(self, triangle: TriangleShape, point: BaryPoint):
        self.triangle = triangle
        self.point = point
        self.reasons: Dict[str, str] = {}

    def _attempt(self, field_name: str, compute) -> Optional[Any]:
        try:
            return compute()
        except GeometryError as e:
            self.reasons[field_name] = e.code
            logger.debug(f"Report field {field_name} undefined for {self.point!r}: {e}")
            return None

    @property
    def precision(self) -> str:
        return "exact" if self.triangle.exact_sides and self.point.is_exact else "float"

    def build(self) -> PointReport:
        triangle, point = self.triangle, self.point
        value = LocusPolynomial(triangle)(point)
        if point.is_exact:
            on_locus = value == 0
        else:
            on_locus = is_orthohomological(triangle, point, config.ceva_tolerance)

        def perspector_string() -> str:
            if not on_locus:
                raise NotPerspective("point is not on the locus")
            return perspector(triangle, point).ratio_string()

        frame = placement(triangle)
        product = self._attempt("ceva_product", lambda: ceva_product(triangle, point))
        distances = self._attempt("oriented_distances", lambda: oriented_distances(triangle, point))
        return PointReport(
            triangle=triangle.describe(),
            precision=self.precision,
            point=point.to_strings(),
            normalized=self._attempt("normalized", lambda: normalize(point).to_strings()),
            locus_value=format_rational(value),
            on_locus=bool(on_locus),
            ceva_product=format_rational(product) if product is not None else None,
            perspector=self._attempt("perspector", perspector_string),
            isogonal=self._attempt("isogonal", lambda: isogonal(triangle, point).ratio_string()),
            oriented_distances=list(distances.as_tuple()) if distances is not None else None,
            oracle_residual=self._attempt(
                "oracle_residual", lambda: cart_concurrency_residual(triangle, frame, point)
            ),
            reasons=self.reasons,
        )


def build_point_report(triangle: TriangleShape, point: BaryPoint) -> PointReport:
    report = ReportBuilder(triangle, point).build()
    logger.info(f"Built report for {point!r}: on_locus={report.on_locus}")
    return report


def build_center_table(triangle: TriangleShape) -> Dict[str, Any]:
    """Every catalog center with its coordinates and locus value, plus the cubic's coefficients."""
    poly = LocusPolynomial(triangle)
    rows: List[Dict[str, Any]] = []
    for name in CENTERS:
        center = known_center(triangle, name)
        value = poly(center)
        rows.append({
            "name": name,
            "coordinates": center.ratio_string(),
            "locus_value": format_rational(value),
            "on_locus": value == 0,
        })
    return {
        "triangle": triangle.describe(),
        "precision": "exact" if triangle.exact_sides else "float",
        "pivots": [format_rational(k) for k in pivot_coefficients(triangle).as_tuple()],
        "coefficients": {term: format_rational(c) for term, c in poly.coefficients().items()},
        "centers": rows,
    }


def format_report_text(report: PointReport) -> str:
    lines = [f"precision: {report.precision}"]
    for key, value in report.to_dict().items():
        if key == "precision":
            continue
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        elif isinstance(value, dict):
            value = ", ".join(f"{k}={v}" for k, v in value.items()) or "-"
        elif value is None:
            value = "null"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def format_center_table_text(table: Dict[str, Any]) -> str:
    lines = [f"triangle: {' '.join(table['triangle'])} ({table['precision']})"]
    width = max(len(row["name"]) for row in table["centers"])
    for row in table["centers"]:
        marker = "*" if row["on_locus"] else " "
        lines.append(f"{marker} {row['name']:<{width}}  {row['coordinates']}  F={row['locus_value']}")
    lines.append("coefficients:")
    for term, coefficient in table["coefficients"].items():
        lines.append(f"  {term}: {coefficient}")
    return "\n".join(lines) + "\n"
