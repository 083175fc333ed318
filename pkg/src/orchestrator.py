"""Verification sweep over one triangle: theorem suites with pass/fail counts."""

import logging
import time
from typing import Any, Dict, List, Optional

import numpy as np

from .config import config
from .core import normalize, placement, to_cartesian
from .homology import ceva_factors, is_orthohomological, perspector
from .locus import (
    LocusPolynomial,
    equilateral_locus_value,
    equilateral_scale,
    generate_locus_points,
    isogonal,
    isogonal_transfer_factor,
    known_center,
    locus_members,
)
from .models import BaryPoint, CheckFailure, GeometryError, Side, TriangleShape
from .oracle import cart_foot, oracle_is_perspective
from .pedal import foot_weights, pedal_foot

logger = logging.getLogger(__name__)

MIN_FOOT_WEIGHT = 1e-3
SIGNIFICANT_LOCUS_VALUE = 1e-6


class SuiteResult:
    """Counters for one suite."""

    def __init__(self, name: str):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.skipped = 0

    def to_dict(self) -> Dict[str, int]:
        return {"passed": self.passed, "failed": self.failed, "skipped": self.skipped}


class VerificationOrchestrator:
    """Runs every verification suite for a triangle and summarizes the outcome."""

    def __init__(self, triangle: TriangleShape, samples: Optional[int] = None, seed: Optional[int] = None):
        self.triangle = triangle
        self.samples = samples if samples is not None else config.verify_samples
        self.seed = seed if seed is not None else config.verify_seed
        if self.samples < 1:
            raise ValueError("samples must be at least 1")

        self.poly = LocusPolynomial(triangle)
        self.frame = placement(triangle)
        self.rng = np.random.default_rng(self.seed)
        self.suites: Dict[str, SuiteResult] = {}
        self.failures: List[CheckFailure] = []

    def _suite(self, name: str) -> SuiteResult:
        if name not in self.suites:
            self.suites[name] = SuiteResult(name)
        return self.suites[name]

    def _record(self, suite: str, ok: bool, message: str, point: Optional[BaryPoint] = None):
        result = self._suite(suite)
        if ok:
            result.passed += 1
            return
        result.failed += 1
        failure = CheckFailure(suite, message, point)
        self.failures.append(failure)
        logger.error(f"Check failed in {suite}: {message}")

    def _skip(self, suite: str, reason: str):
        self._suite(suite).skipped += 1
        logger.debug(f"Skipped check in {suite}: {reason}")

    def _random_non_members(self) -> List[BaryPoint]:
        """Seeded integer triples with nonzero sum that miss the locus."""
        bound = config.random_coordinate_bound
        points: List[BaryPoint] = []
        attempts = 0
        while len(points) < self.samples and attempts < 100 * self.samples:
            attempts += 1
            coords = [int(v) for v in self.rng.integers(-bound, bound, size=3, endpoint=True)]
            if sum(coords) == 0:
                continue
            point = BaryPoint(*coords)
            if self.poly(point) != 0:
                points.append(point)
        return points

    def _is_well_conditioned(self, point: BaryPoint) -> bool:
        if point.total == 0 or point.zero_count >= 2:
            return False
        norm = normalize(point.to_float())
        if max(abs(v) for v in norm.coords) > config.conditioning_limit:
            return False
        for side in Side:
            i, j, k = side.cyclic()
            weights = foot_weights(self.triangle, norm, side)
            scale = 2.0 * float(self.triangle.squares[i])
            if min(abs(weights[j]), abs(weights[k])) / scale < MIN_FOOT_WEIGHT:
                return False
        return True

    def _check_named_centers(self):
        suite = "named_centers"
        for name in locus_members(self.triangle):
            point = known_center(self.triangle, name)
            self._record(suite, self.poly(point) == 0, f"{name} is not on the locus", point)
            if point.zero_count >= 2:
                continue
            if self._ceva_undefined(point):
                self._skip(suite, f"{name} has no defined Ceva product")
                continue
            self._record(suite, is_orthohomological(self.triangle, point),
                         f"{name} fails the Ceva test", point)

        orthocenter = known_center(self.triangle, "orthocenter")
        circumcenter = known_center(self.triangle, "circumcenter")
        if orthocenter.zero_count < 2:
            self._record(suite, isogonal(self.triangle, orthocenter).proportional_to(circumcenter),
                         "isogonal conjugate of the orthocenter is not the circumcenter", orthocenter)

        if self.triangle.exact_sides:
            a, b, c = self.triangle.sides
            s = (a + b + c) / 2
            gergonne = BaryPoint((s - b) * (s - c), (s - c) * (s - a), (s - a) * (s - b))
            incenter = known_center(self.triangle, "incenter")
            try:
                self._record(suite, perspector(self.triangle, incenter).proportional_to(gergonne),
                             "perspector of the incenter is not the Gergonne point", incenter)
            except GeometryError as e:
                self._record(suite, False, f"incenter has no perspector: {e.code}", incenter)

    def _ceva_undefined(self, point: BaryPoint) -> bool:
        try:
            ceva_factors(self.triangle, point)
        except GeometryError:
            return True
        return False

    def _check_equivalence(self, members: List[BaryPoint], non_members: List[BaryPoint]):
        suite = "locus_ceva_equivalence"
        for point in members:
            if point.zero_count >= 2 or point.total == 0:
                self._skip(suite, f"{point!r} is a vertex or at infinity")
                continue
            if self._ceva_undefined(point):
                self._skip(suite, f"{point!r} has no defined Ceva product")
                continue
            self._record(suite, is_orthohomological(self.triangle, point),
                         "locus point fails the Ceva test", point)

        for point in non_members:
            try:
                numerator, denominator = ceva_factors(self.triangle, point)
            except GeometryError as e:
                self._skip(suite, f"{point!r}: {e.code}")
                continue
            value = self.poly(point)
            self._record(suite, numerator - denominator == 2 * value,
                         "Ceva factors disagree with twice the locus value", point)
            self._record(suite, not is_orthohomological(self.triangle, point),
                         "point off the locus passes the Ceva test", point)

    def _check_isogonal_closure(self, members: List[BaryPoint]):
        suite = "isogonal_closure"
        for point in members:
            if point.zero_count >= 2:
                self._skip(suite, f"{point!r} is a vertex")
                continue
            conjugate = isogonal(self.triangle, point)
            self._record(suite, self.poly(conjugate) == 0,
                         f"isogonal conjugate {conjugate.ratio_string()} leaves the locus", point)

    def _check_transfer_identity(self, points: List[BaryPoint]):
        suite = "transfer_identity"
        factor = isogonal_transfer_factor(self.triangle)
        for point in points:
            if point.zero_count >= 2:
                self._skip(suite, f"{point!r} is a vertex")
                continue
            alpha, beta, gamma = point.coords
            lhs = self.poly(isogonal(self.triangle, point, canonical=False))
            rhs = factor * alpha * beta * gamma * self.poly(point)
            self._record(suite, lhs == rhs, f"transfer identity fails: {lhs} != {rhs}", point)

    def _check_oracle_agreement(self, members: List[BaryPoint], non_members: List[BaryPoint]):
        suite = "oracle_agreement"
        tol = config.oracle_tolerance
        scale = max(abs(float(c)) for c in self.poly.coefficients().values())
        diameter = self.triangle.diameter
        for point in members + non_members:
            if not self._is_well_conditioned(point):
                self._skip(suite, f"{point!r} is ill-conditioned")
                continue
            norm = normalize(point.to_float())
            for side in Side:
                expected = to_cartesian(self.frame, pedal_foot(self.triangle, norm, side))
                start, end = ((self.frame.B, self.frame.C), (self.frame.C, self.frame.A),
                              (self.frame.A, self.frame.B))[side.index]
                actual = cart_foot(start, end, to_cartesian(self.frame, norm))
                error = float(np.hypot(expected[0] - actual[0], expected[1] - actual[1]))
                bound = 1e-12 * diameter * max(1.0, max(abs(v) for v in norm.coords))
                self._record(suite, error <= bound, f"foot on {side.value} off by {error:.3e}", point)

            member = self.poly(point) == 0
            if not member and abs(float(self.poly(normalize(point)))) / scale <= SIGNIFICANT_LOCUS_VALUE:
                self._skip(suite, f"{point!r} is too close to the locus to referee")
                continue
            verdict = oracle_is_perspective(self.triangle, self.frame, point, tol)
            self._record(suite, verdict == member,
                         f"oracle says perspective={verdict}, exact membership={member}", point)

    def _check_equilateral(self, points: List[BaryPoint]):
        suite = "equilateral_factorization"
        scale = equilateral_scale(self.triangle)
        for point in points:
            self._record(suite, self.poly(point) == scale * equilateral_locus_value(point),
                         "cubic is not a multiple of the median product", point)

    def run(self) -> Dict[str, Any]:
        """
        Run all suites.

        Returns:
            Summary with per-suite counts, overall success and the first counterexample
        """
        start_time = time.time()
        logger.info(f"Starting verification of {self.triangle!r} with {self.samples} samples, seed {self.seed}")

        members = generate_locus_points(self.triangle, self.samples)
        non_members = self._random_non_members()
        logger.info(f"Generated {len(members)} locus points and {len(non_members)} non-members")
        exhausted = len(members) < self.samples
        if exhausted:
            logger.warning(f"Chord closure gave {len(members)} of {self.samples} locus points; sweep continues on those")

        self._check_named_centers()
        self._check_equivalence(members, non_members)
        self._check_isogonal_closure(members)
        self._check_transfer_identity(members + non_members)
        self._check_oracle_agreement(members, non_members)
        if self.triangle.is_equilateral:
            self._check_equilateral(members + non_members)

        success = not self.failures
        elapsed_time = time.time() - start_time
        logger.info(f"Verification {'passed' if success else 'failed'} in {elapsed_time:.2f}s")
        return {
            "success": success,
            "triangle": self.triangle.describe(),
            "samples": self.samples,
            "seed": self.seed,
            "locus_points": len(members),
            "chord_closure_exhausted": exhausted,
            "non_members": len(non_members),
            "suites": {name: result.to_dict() for name, result in self.suites.items()},
            "failures": len(self.failures),
            "first_failure": self.failures[0].to_dict() if self.failures else None,
        }
