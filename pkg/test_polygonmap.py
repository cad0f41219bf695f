"""
Tests for generalized circles, fractional linear maps and the polygon integrability cases
"""

import cmath
import math

import numpy as np
import pytest

from src.algmono import VerdictClass, VerdictStatus
from src.polygonmap import (
    INFINITY, GenCircle, MoebiusLike, NetTag, PolygonSpec, Side, circle_angle, classify_polygon,
    common_point_of_sides, is_infinity, moebius_image, moebius_matrix_for_pair, normalize_symmetric_pair, reflect,
    reflection_group_closure, symmetric_pair, transform_polygon,
)
from src.polygonmap.moebius import element_order
from src.utils.errors import PoleOfInversion, WitnessVerificationFailed

SQRT3 = math.sqrt(3)


def line_side(p1, p2):
    return Side(GenCircle.through_points(p1, p2), p1, p2)


def arc_side(circle, start, end):
    return Side(circle, start, end)


def straight_quadrilateral():
    corners = [0, 2, 3 + 1j, 1j]
    return PolygonSpec(tuple(line_side(corners[i], corners[(i + 1) % 4]) for i in range(4)))


def concentric_quadrilateral():
    return PolygonSpec((
        line_side(1, 2),
        arc_side(GenCircle.from_center_radius(0, 2), 2, 2j),
        line_side(2j, 1j),
        arc_side(GenCircle.from_center_radius(0, 1), 1j, 1),
    ))


def great_circle(normal):
    nx, ny, nz = normal
    return GenCircle(nz, complex(nx, ny), -nz)


def tetrahedral_triangle():
    t = (1 - SQRT3) / 2
    s = (SQRT3 - 1) / 2
    first, second = t * (1 + 1j), s * (1 - 1j)
    return PolygonSpec((
        arc_side(great_circle((1, -1, 0)), 0j, first),
        arc_side(great_circle((0, 1, -1)), first, second),
        arc_side(great_circle((1, 1, 0)), second, 0j),
    ))


def ideal_triangle():
    vertices = [cmath.exp(2j * math.pi * k / 3) for k in range(3)]
    sides = []
    for k in range(3):
        center = 2 * cmath.exp(1j * math.pi * (2 * k + 1) / 3)
        sides.append(arc_side(GenCircle.from_center_radius(center, SQRT3), vertices[k], vertices[(k + 1) % 3]))
    return PolygonSpec(tuple(sides))


def diheron_triangle():
    corner = cmath.exp(1j * math.pi / 3)
    return PolygonSpec((
        line_side(0j, 1 + 0j),
        arc_side(GenCircle.from_center_radius(0, 1), 1 + 0j, corner),
        line_side(corner, 0j),
    ))


class TestCircles:
    def test_center_and_radius(self):
        circle = GenCircle.from_center_radius(1 + 1j, 2)
        assert circle.center == pytest.approx(1 + 1j)
        assert circle.radius == pytest.approx(2)
        assert circle.contains(3 + 1j, 1e-12)
        assert not circle.contains(0, 1e-12)

    def test_line(self):
        line = GenCircle.through_points(0, 1 + 1j)
        assert line.is_line
        assert is_infinity(line.center)
        assert line.contains(0.5 + 0.5j, 1e-12)
        assert line.contains(INFINITY, 1e-12)

    def test_invalid(self):
        with pytest.raises(ValueError):
            GenCircle(1, 0, 1)
        with pytest.raises(ValueError):
            GenCircle.from_center_radius(0, 0)
        with pytest.raises(ValueError):
            GenCircle.through_points(1j, 1j)

    def test_reflections(self):
        unit = GenCircle.from_center_radius(0, 1)
        assert reflect(unit, 2) == pytest.approx(0.5)
        assert reflect(unit, 1j) == pytest.approx(1j)
        assert reflect(unit, INFINITY) == 0
        assert reflect(GenCircle.through_points(0, 1), 1 + 2j) == pytest.approx(1 - 2j)
        with pytest.raises(PoleOfInversion):
            reflect(unit, 0j)

    def test_angles(self):
        unit = GenCircle.from_center_radius(0, 1)
        real_axis = GenCircle.through_points(0, 1)
        assert circle_angle(unit, real_axis) == pytest.approx(math.pi / 2)
        diagonal = GenCircle.through_points(0, 1 + 1j)
        assert min(circle_angle(real_axis, diagonal), math.pi - circle_angle(real_axis, diagonal)) \
            == pytest.approx(math.pi / 4)
        tangent = GenCircle.from_center_radius(2, 1)
        assert min(circle_angle(unit, tangent), math.pi - circle_angle(unit, tangent)) < 1e-6

    def test_moebius_image(self):
        flip = MoebiusLike.from_coefficients(0, 1, 1, 0)
        unit = GenCircle.from_center_radius(0, 1)
        assert moebius_image(unit, flip).same_as(unit, 1e-12)
        shifted = moebius_image(GenCircle.from_center_radius(0, 1), MoebiusLike.from_coefficients(1, 3, 0, 1))
        assert shifted.center == pytest.approx(3)
        assert moebius_image(GenCircle.through_points(0, 1), flip).is_line

    def test_intersections(self):
        unit = GenCircle.from_center_radius(0, 1)
        points = sorted(unit.intersections(GenCircle.through_points(0, 1), 1e-12), key=lambda z: z.real)
        assert points == [pytest.approx(-1), pytest.approx(1)]
        assert GenCircle.through_points(0, 1).intersections(GenCircle.through_points(1j, 1 + 1j), 1e-12) == []


class TestMoebius:
    def test_compose_with_inverse(self):
        m = MoebiusLike.from_coefficients(2, 1 + 1j, 0.5, 3)
        assert m.compose(m.inverse()).projective_distance(MoebiusLike.identity()) < 1e-12
        assert m.inverse()(m(0.3 + 0.2j)) == pytest.approx(0.3 + 0.2j)

    def test_anti_maps(self):
        reflection = GenCircle.from_center_radius(1j, 2).reflection()
        assert reflection.conjugating
        twice = reflection.compose(reflection)
        assert not twice.conjugating
        assert twice.projective_distance(MoebiusLike.identity()) < 1e-12
        assert reflection.inverse()(reflection(0.5 + 0j)) == pytest.approx(0.5)

    def test_infinity(self):
        m = MoebiusLike.from_coefficients(2, 0, 1, 1)
        assert m(INFINITY) == pytest.approx(2)
        assert is_infinity(m(-1 + 0j))
        assert is_infinity(MoebiusLike.from_coefficients(1, 1, 0, 1)(INFINITY))

    def test_fixed_points(self):
        points = MoebiusLike.from_coefficients(2, 0, 0, 1).fixed_points(1e-12)
        assert points[0] == pytest.approx(0)
        assert is_infinity(points[1])
        assert MoebiusLike.from_coefficients(1, 1, 0, 1).fixed_points(1e-12) == [INFINITY]
        with pytest.raises(ValueError):
            GenCircle.from_center_radius(0, 1).reflection().fixed_points(1e-12)

    def test_pair_map(self):
        m = moebius_matrix_for_pair(1j, 2 + 0j)
        assert abs(m(1j)) < 1e-12
        assert is_infinity(m(2 + 0j))
        assert is_infinity(moebius_matrix_for_pair(3 + 0j, INFINITY)(INFINITY))
        assert moebius_matrix_for_pair(INFINITY, 3 + 0j)(INFINITY) == 0

    def test_element_order(self):
        angle = math.pi / 5
        rotation = MoebiusLike(np.diag([cmath.exp(1j * angle), cmath.exp(-1j * angle)]))
        assert element_order(rotation, 20, 1e-9) == 5
        assert element_order(MoebiusLike.from_coefficients(1, 1, 0, 1), 50, 1e-9) is None


class TestPolygon:
    def test_validation(self):
        with pytest.raises(ValueError):
            PolygonSpec((line_side(0, 1),))
        with pytest.raises(ValueError):
            PolygonSpec((Side(GenCircle.through_points(0, 1), 0, 1j), line_side(1j, 0)))
        with pytest.raises(ValueError):
            PolygonSpec((line_side(0, 1), line_side(2, 0)))

    def test_vertex_angles(self):
        angles = tetrahedral_triangle().vertex_angles()
        folded = sorted(min(a, math.pi - a) for a in angles)
        assert folded == [pytest.approx(math.pi / 3), pytest.approx(math.pi / 3), pytest.approx(math.pi / 2)]
        for angle in ideal_triangle().vertex_angles():
            assert min(angle, math.pi - angle) < 1e-6

    def test_transform_rejects_vertex_at_infinity(self):
        with pytest.raises(ValueError):
            transform_polygon(concentric_quadrilateral(), MoebiusLike.from_coefficients(1, 0, 1, -1))


class TestCases:
    def test_straight_sides_meet_at_infinity(self):
        polygon = straight_quadrilateral()
        assert is_infinity(common_point_of_sides(polygon))
        verdict = classify_polygon(polygon)
        assert verdict.verdict_class is VerdictClass.GENERALIZED_QUADRATURES
        assert verdict.status is VerdictStatus.REPRESENTABLE
        assert verdict.evidence["case"] == "case1"

    def test_concentric_quadrilateral(self):
        polygon = concentric_quadrilateral()
        assert common_point_of_sides(polygon) is None
        p, q = symmetric_pair(polygon)
        assert abs(p) < 1e-12 and is_infinity(q)
        verdict = classify_polygon(polygon)
        assert verdict.verdict_class is VerdictClass.QUADRATURES
        assert verdict.evidence["case"] == "case2"
        assert not verdict.evidence["closure"]["finite"]
        normal_form = verdict.evidence["normal_form"]
        assert (normal_form["rays"], normal_form["concentric_arcs"]) == (2, 2)
        np.testing.assert_allclose(np.array(normal_form["map"]), np.eye(2), atol=1e-12)

    def test_moved_pair_is_sent_back_to_zero_and_infinity(self):
        transform = MoebiusLike.from_coefficients(2, 1 + 1j, 0.1, 1)
        polygon = transform_polygon(concentric_quadrilateral(), transform)
        pair = symmetric_pair(polygon)
        assert pair is not None
        normalizer, rays, arcs = normalize_symmetric_pair(polygon, pair)
        assert (rays, arcs) == (2, 2)
        assert abs(normalizer(pair[0])) < 1e-9
        assert is_infinity(normalizer(pair[1]))

    def test_normal_form_rejects_a_non_symmetric_pair(self):
        with pytest.raises(WitnessVerificationFailed):
            normalize_symmetric_pair(straight_quadrilateral(), (0j, INFINITY))

    def test_tetrahedral_net(self):
        polygon = tetrahedral_triangle()
        closure = reflection_group_closure(polygon)
        assert closure.order == 24
        assert closure.rotation_order == 12
        assert closure.max_rotation_order == 3
        assert closure.net is NetTag.TETRAHEDRAL
        verdict = classify_polygon(polygon)
        assert verdict.verdict_class is VerdictClass.RADICALS
        assert verdict.status is VerdictStatus.REPRESENTABLE
        assert verdict.evidence["case"] == "case3"

    def test_diheron_flags(self):
        polygon = diheron_triangle()
        closure = reflection_group_closure(polygon)
        assert closure.order == 12
        assert closure.net is NetTag.DIHERON
        verdict = classify_polygon(polygon)
        assert verdict.evidence["case"] == "case2"
        assert verdict.evidence["flags"] == ["case3"]

    def test_ideal_triangle_is_strongly_non_representable(self):
        polygon = ideal_triangle()
        assert common_point_of_sides(polygon) is None
        assert symmetric_pair(polygon) is None
        assert not reflection_group_closure(polygon, bound=100).finite
        verdict = classify_polygon(polygon)
        assert verdict.status is VerdictStatus.STRONGLY_NON_REPRESENTABLE
        assert verdict.evidence["case"] is None


def random_transform(rng: np.random.Generator) -> MoebiusLike:
    # pole beyond |z| = 7, well away from every fixture
    rotation = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
    b = complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
    c = complex(rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1))
    return MoebiusLike.from_coefficients(rotation, b, c, 1)


@pytest.mark.parametrize("build, expected", [
    (straight_quadrilateral, (VerdictClass.GENERALIZED_QUADRATURES, "case1")),
    (concentric_quadrilateral, (VerdictClass.QUADRATURES, "case2")),
    (tetrahedral_triangle, (VerdictClass.RADICALS, "case3")),
    (ideal_triangle, (VerdictClass.GENERALIZED_QUADRATURES, None)),
])
def test_cases_are_moebius_invariant(build, expected):
    rng = np.random.default_rng(42)
    for _ in range(5):
        polygon = transform_polygon(build(), random_transform(rng))
        verdict = classify_polygon(polygon)
        assert (verdict.verdict_class, verdict.evidence["case"]) == expected
