"""Tests for the locus cubic, isogonal conjugation, chords and the center catalog."""

import math
from fractions import Fraction

import pytest

from src.core import normalize, oriented_distances
from src.homology import is_orthohomological
from src.locus import (
    LocusPolynomial,
    catalog_names,
    distance_form_factor,
    equilateral_locus_value,
    equilateral_scale,
    generate_locus_points,
    isogonal,
    isogonal_transfer_factor,
    known_center,
    locus_members,
    locus_value,
    locus_value_distances,
    locus_value_cosine,
    orthocenter_reciprocal,
    cosine_form_factor,
    pivot_coefficients,
    third_intersection,
)
from src.models import (
    BaryPoint,
    ChordDegenerate,
    CoincidentPoints,
    NotOnLocus,
    RightAngleDegeneracy,
    UndefinedAtVertex,
    TriangleShape,
    UnknownCenter,
)

SAMPLE_POINTS = [(1, 1, 1), (2, -3, 7), (11, 2, 9), (-5, 8, 1), (Fraction(1, 2), 3, Fraction(-7, 3))]

MEMBER_NAMES = ["A", "B", "C", "orthocenter", "incenter", "circumcenter",
                "excenter_a", "excenter_b", "excenter_c", "pivot"]

MONOMIALS = {
    "alpha^3": lambda a, b, c: a ** 3,
    "beta^3": lambda a, b, c: b ** 3,
    "gamma^3": lambda a, b, c: c ** 3,
    "alpha^2*beta": lambda a, b, c: a * a * b,
    "alpha^2*gamma": lambda a, b, c: a * a * c,
    "alpha*beta^2": lambda a, b, c: a * b * b,
    "beta^2*gamma": lambda a, b, c: b * b * c,
    "alpha*gamma^2": lambda a, b, c: a * c * c,
    "beta*gamma^2": lambda a, b, c: b * c * c,
    "alpha*beta*gamma": lambda a, b, c: a * b * c,
}


def _random_rational_points(rng, count, bound=1000):
    """Seeded rational triples with nonzero coordinates and nonzero sum."""
    points = []
    while len(points) < count:
        numerators = [int(v) for v in rng.integers(-bound, bound, size=3, endpoint=True)]
        denominator = int(rng.integers(1, 12))
        if 0 in numerators or sum(numerators) == 0:
            continue
        points.append(BaryPoint(*(Fraction(n, denominator) for n in numerators)))
    return points


def _random_rational_triangles(rng, count):
    triangles = []
    while len(triangles) < count:
        sides = [int(v) for v in rng.integers(1, 60, size=3)]
        x, y, z = sorted(sides)
        if x + y <= z:
            continue
        denominator = int(rng.integers(1, 10))
        triangles.append(TriangleShape.from_sides(*(Fraction(s, denominator) for s in sides)))
    return triangles


def _magnitude(poly, point):
    """Size of the largest term, for float tolerances."""
    largest = max(abs(float(v)) for v in point.coords)
    return sum(abs(float(c)) for c in poly.coefficients().values()) * largest ** 3


def test_pivot_coefficients(scalene):
    assert pivot_coefficients(scalene).as_tuple() == (-855, 1125, 1305)


def test_centroid_value(scalene):
    assert locus_value(scalene, BaryPoint(1, 1, 1)) == -15840


@pytest.mark.parametrize("coords", SAMPLE_POINTS)
def test_coefficients_reproduce_polynomial(scalene, coords):
    poly = LocusPolynomial(scalene)
    expansion = sum(c * MONOMIALS[term](*coords) for term, c in poly.coefficients().items())
    assert expansion == poly.evaluate(*coords)


@pytest.mark.parametrize("name", ["A", "B", "C", "orthocenter", "circumcenter", "incenter",
                                  "excenter_a", "excenter_b", "excenter_c", "pivot"])
def test_catalog_members(scalene, name):
    assert locus_value(scalene, known_center(scalene, name)) == 0


def test_locus_members_excludes_centroid(scalene, equilateral):
    assert "centroid" not in locus_members(scalene)
    assert "centroid" in locus_members(equilateral)
    assert set(locus_members(scalene)) == set(catalog_names()) - {"centroid"}


def test_named_centers(scalene):
    assert known_center(scalene, "H").coords == (27, 5, 3)
    assert known_center(scalene, "O").coords == (4, 15, 16)
    assert known_center(scalene, "K").coords == (-19, 25, 29)
    assert known_center(scalene, "Ia").coords == (-6, 5, 4)
    with pytest.raises(UnknownCenter):
        known_center(scalene, "nagel")


def test_right_angle_orthocenter(right_triangle):
    with pytest.raises(RightAngleDegeneracy):
        orthocenter_reciprocal(right_triangle)
    assert known_center(right_triangle, "orthocenter").coords == known_center(right_triangle, "C").coords


def test_isogonal_of_orthocenter_is_circumcenter(scalene):
    assert isogonal(scalene, known_center(scalene, "H")).coords == (4, 15, 16)


def test_isogonal_of_incenter_is_incenter(scalene):
    assert isogonal(scalene, BaryPoint(6, 5, 4)).coords == (6, 5, 4)


def test_isogonal_undefined_at_vertex(scalene):
    with pytest.raises(UndefinedAtVertex):
        isogonal(scalene, BaryPoint(0, 0, 1))


@pytest.mark.parametrize("coords", SAMPLE_POINTS)
def test_transfer_identity(scalene, coords):
    point = BaryPoint(*coords)
    alpha, beta, gamma = point.coords
    conjugate = isogonal(scalene, point, canonical=False)
    expected = isogonal_transfer_factor(scalene) * alpha * beta * gamma * locus_value(scalene, point)
    assert locus_value(scalene, conjugate) == expected


def test_transfer_factor_fixed_by_evaluation(equilateral):
    """One evaluation pins the factor; the closed form agrees."""
    point = BaryPoint(1, 2, 3)
    conjugate = isogonal(equilateral, point, canonical=False)
    measured = locus_value(equilateral, conjugate) / (6 * locus_value(equilateral, point))
    assert measured == isogonal_transfer_factor(equilateral) == -1


@pytest.mark.parametrize("coords", SAMPLE_POINTS)
def test_cosine_form_scaling(scalene, coords):
    point = BaryPoint(*coords)
    exact = float(locus_value(scalene, point))
    scaled = locus_value_cosine(scalene, point) * float(cosine_form_factor(scalene))
    assert math.isclose(scaled, exact, rel_tol=1e-9, abs_tol=1e-6)


@pytest.mark.parametrize("coords", [(1, 1, 1), (2, 3, 7), (11, 2, 9)])
def test_distance_form_scaling(scalene, coords):
    point = BaryPoint(*coords)
    distances = oriented_distances(scalene, point)
    expected = distance_form_factor(scalene) * float(locus_value(scalene, normalize(point)))
    assert math.isclose(locus_value_distances(scalene, distances), expected, rel_tol=1e-9)


@pytest.mark.parametrize("coords", SAMPLE_POINTS)
def test_equilateral_factorization(equilateral, coords):
    point = BaryPoint(*coords)
    assert locus_value(equilateral, point) == equilateral_scale(equilateral) * equilateral_locus_value(point)


def test_equilateral_scale_is_sixth_power():
    triangle = TriangleShape.from_sides(3, 3, 3)
    point = BaryPoint(1, 2, 4)
    assert equilateral_scale(triangle) == 729
    assert locus_value(triangle, point) == 729 * equilateral_locus_value(point)


def test_chord_through_b_and_c(scalene):
    third = third_intersection(scalene, BaryPoint(0, 1, 0), BaryPoint(0, 0, 1))
    assert third.coords == (0, 25, 29)
    assert locus_value(scalene, third) == 0


def test_chord_through_isogonal_pair_meets_pivot(scalene):
    """The line joining H and its conjugate O passes through (kA : kB : kC)."""
    third = third_intersection(scalene, known_center(scalene, "H"), known_center(scalene, "O"))
    assert third.coords == (-19, 25, 29)
    assert is_orthohomological(scalene, third)


def test_chord_errors(scalene, equilateral):
    with pytest.raises(NotOnLocus):
        third_intersection(scalene, BaryPoint(1, 1, 1), BaryPoint(6, 5, 4))
    with pytest.raises(CoincidentPoints):
        third_intersection(scalene, BaryPoint(6, 5, 4), BaryPoint(12, 10, 8))
    # The median through A lies on the equilateral locus
    with pytest.raises(ChordDegenerate):
        third_intersection(equilateral, BaryPoint(1, 0, 0), BaryPoint(1, 1, 1))


def test_generated_points_are_distinct_members(scalene):
    points = generate_locus_points(scalene, 40)
    assert len(points) == 40
    assert len({p.key() for p in points}) == 40
    poly = LocusPolynomial(scalene)
    assert all(poly(p) == 0 for p in points)
    assert all(poly(isogonal(scalene, p)) == 0 for p in points if p.zero_count < 2)


def test_generation_is_deterministic(scalene):
    assert generate_locus_points(scalene, 30) == generate_locus_points(scalene, 30)


def test_generation_defaults_to_chord_points_only(scalene):
    assert generate_locus_points(scalene, 30) == generate_locus_points(scalene, 30, include_isogonal=False)


def test_generation_with_isogonal_conjugates(scalene):
    points = generate_locus_points(scalene, 30, include_isogonal=True)
    assert len(points) == 30
    assert all(locus_value(scalene, p) == 0 for p in points)


def test_equilateral_generation_stays_on_medians(equilateral):
    points = generate_locus_points(equilateral, 25)
    assert len(points) == 25
    for p in points:
        alpha, beta, gamma = p.coords
        assert alpha == beta or beta == gamma or gamma == alpha


def test_generation_rejects_non_member_seed(scalene):
    with pytest.raises(NotOnLocus):
        generate_locus_points(scalene, 5, seeds=[BaryPoint(1, 1, 1)])


@pytest.mark.parametrize("coords", [(1, 2, 3), (7, -2, 5), (Fraction(1, 2), 3, Fraction(-7, 3))])
@pytest.mark.parametrize("t", [3, -1, Fraction(-2, 7)])
def test_cubic_is_homogeneous(scalene, coords, t):
    point = BaryPoint(*coords)
    scaled = BaryPoint(*(t * v for v in coords))
    assert locus_value(scalene, scaled) == t ** 3 * locus_value(scalene, point)


@pytest.mark.parametrize("coords", [(1, 2, 3), (7, -2, 5), (1, 1, 1), (Fraction(3, 4), -5, 2)])
def test_swapping_b_and_c_negates_cubic(coords):
    alpha, beta, gamma = coords
    original = locus_value(TriangleShape.from_sides(6, 5, 4), BaryPoint(alpha, beta, gamma))
    relabelled = locus_value(TriangleShape.from_sides(6, 4, 5), BaryPoint(alpha, gamma, beta))
    assert relabelled == -original


def test_swapping_b_and_c_negates_cubic_on_random_points(rng):
    triangle = TriangleShape.from_sides(7, 3, 5)
    mirrored = TriangleShape.from_sides(7, 5, 3)
    for point in _random_rational_points(rng, 100):
        alpha, beta, gamma = point.coords
        assert locus_value(mirrored, BaryPoint(alpha, gamma, beta)) == -locus_value(triangle, point)


def test_named_centers_on_random_triangles(rng):
    for triangle in _random_rational_triangles(rng, 100):
        poly = LocusPolynomial(triangle)
        for name in MEMBER_NAMES:
            assert poly(known_center(triangle, name)) == 0, (triangle, name)


def test_transfer_identity_on_random_points(scalene, rng):
    # One evaluation fixes the factor; the closed form must agree
    first = BaryPoint(2, 3, 7)
    measured = locus_value(scalene, isogonal(scalene, first, canonical=False)) / (42 * locus_value(scalene, first))
    assert measured == isogonal_transfer_factor(scalene)

    for point in _random_rational_points(rng, 100):
        alpha, beta, gamma = point.coords
        conjugate = isogonal(scalene, point, canonical=False)
        assert locus_value(scalene, conjugate) == measured * alpha * beta * gamma * locus_value(scalene, point)


def test_equilateral_factorization_on_random_points(equilateral, rng):
    for point in _random_rational_points(rng, 1000):
        assert locus_value(equilateral, point) == equilateral_locus_value(point)


def test_cosine_form_scaling_on_random_points(scalene, rng):
    poly = LocusPolynomial(scalene)
    factor = float(cosine_form_factor(scalene))
    for point in _random_rational_points(rng, 100):
        exact = float(poly(point))
        scaled = locus_value_cosine(scalene, point) * factor
        assert math.isclose(scaled, exact, rel_tol=1e-9, abs_tol=1e-12 * _magnitude(poly, point))


def test_distance_form_factor_is_constant(scalene, rng):
    poly = LocusPolynomial(scalene)
    factor = distance_form_factor(scalene)
    for point in _random_rational_points(rng, 100):
        norm = normalize(point)
        expected = factor * float(poly(norm))
        actual = locus_value_distances(scalene, oriented_distances(scalene, point))
        assert math.isclose(actual, expected, rel_tol=1e-9, abs_tol=1e-12 * factor * _magnitude(poly, norm))
