"""
Tests for branch points, loop skeletons, sheet tracking and algebraic verdicts
"""

import cmath
import math
import random

import numpy as np
import pytest

from src.algmono import (
    VerdictClass, VerdictStatus, branch_points, build_skeleton, classify_algebraic, find_verdict,
    infinity_loop, monodromy, sheets_at, track_loop, Verdict,
)
from src.cli.poly_parser import parse_polynomial
from src.numkernel import BiPoly
from src.utils.errors import NotMonicInY, NotSquarefree


def winding_number(path, point):
    total = 0.0
    for a, b in path.segments():
        total += cmath.phase((b - point) / (a - point))
    return round(total / (2 * math.pi))


class TestSkeleton:
    def test_petals_wind_once_around_their_puncture(self):
        punctures = [1 + 0j, -1 + 0j, 1j, -0.5 - 0.5j]
        skeleton = build_skeleton(punctures)
        assert sorted(skeleton.punctures, key=lambda z: (z.real, z.imag)) == \
            sorted(punctures, key=lambda z: (z.real, z.imag))
        for loop, center in zip(skeleton.loops, skeleton.punctures):
            assert loop.is_closed and loop.start == skeleton.base_point
            for other in skeleton.punctures:
                assert winding_number(loop, other) == (1 if other == center else 0)

    def test_composite_and_infinity_loop_enclose_everything(self):
        skeleton = build_skeleton([2 + 0j, -3j, 0.5 + 0.5j])
        circle = infinity_loop(skeleton)
        for point in skeleton.punctures:
            assert winding_number(skeleton.composite(), point) == 1
            assert winding_number(circle, point) == 1

    def test_base_point_on_real_axis_when_clear(self):
        skeleton = build_skeleton([1j, -1j])
        assert skeleton.base_point == pytest.approx(1 + 2 * 2)
        assert skeleton.clearance >= 0.2
        # upper puncture first
        assert skeleton.punctures == (1j, -1j)

    def test_collinear_punctures_rotate_the_base(self):
        skeleton = build_skeleton([1 + 0j, 2 + 0j, 3 + 0j])
        assert skeleton.clearance >= 0.2
        assert abs(skeleton.base_point.imag) > 0

    def test_empty_and_duplicate(self):
        assert len(build_skeleton([])) == 0
        with pytest.raises(ValueError):
            build_skeleton([1 + 0j, 1 + 0j])


class TestBranchPoints:
    def test_square_root(self):
        data = branch_points(parse_polynomial("y^2 - x"))
        assert len(data.branch_points) == 1
        assert abs(data.branch_points[0]) < 1e-9
        assert data.n_sheets == 2

    def test_quintic_has_four_branch_points(self):
        data = branch_points(parse_polynomial("y^5 + y - x"))
        assert len(data.branch_points) == 4
        for b in data.branch_points:
            assert abs(abs(b) ** 4 - 256 / 3125) < 1e-9

    def test_leading_coefficient_must_be_constant(self):
        with pytest.raises(NotMonicInY):
            branch_points(parse_polynomial("x*y^2 - 1"))

    def test_repeated_factor(self):
        with pytest.raises(NotSquarefree):
            branch_points(parse_polynomial("(y - x)^2"))

    def test_non_monic_constant_lead_is_normalized(self):
        data = branch_points(parse_polynomial("2*y^2 - x"))
        assert len(data.branch_points) == 1

    def test_numeric_relation_uses_critical_values(self):
        # y^3 - 3y + 0.5i - 2x: critical points +-1
        f = BiPoly({(0, 3): 1.0, (0, 1): -3.0, (0, 0): 0.5j, (1, 0): -2.0})
        data = branch_points(f)
        assert sorted(data.branch_points, key=lambda b: b.real) == [
            pytest.approx(-1 + 0.25j), pytest.approx(1 + 0.25j)]
        assert data.n_sheets == 3

    def test_numeric_relation_must_be_linear_in_x(self):
        with pytest.raises(TypeError):
            branch_points(BiPoly({(0, 2): 1.0, (1, 1): 1.0, (1, 0): -1.0}))


class TestTracking:
    def test_sheets_sorted_lexicographically(self):
        ys = sheets_at(parse_polynomial("y^2 - x"), 4 + 0j, 1e-10)
        assert np.allclose(ys, [-2, 2])

    def test_square_root_swaps_sheets(self):
        f = parse_polynomial("y^2 - x")
        data = branch_points(f)
        skeleton = build_skeleton(data.branch_points)
        assert str(track_loop(f, data, skeleton.loops[0], 1e-10)) == "(0 1)"

    def test_loop_must_start_at_base_point(self):
        f = parse_polynomial("y^2 - x")
        data = branch_points(f)
        other = build_skeleton([5 + 0j]).loops[0]
        with pytest.raises(ValueError):
            track_loop(f, data, other, 1e-10)


class TestMonodromy:
    def test_cube_root(self):
        report = monodromy(parse_polynomial("y^3 - x"))
        assert report.group.order() == 3
        assert report.transitive
        assert report.genus == 0
        assert report.loop_identity_holds()

    def test_quintic_is_s5(self):
        report = monodromy(parse_polynomial("y^5 + y - x"))
        assert len(report.permutations) == 4
        assert all(p.cycle_type == (2, 1, 1, 1) for p in report.permutations)
        assert report.infinity_permutation.is_full_cycle
        assert report.group.order() == 120
        assert report.transitive
        assert report.genus == 0
        assert report.pair.stabilizer.order() == 24

    def test_reducible_relation_is_intransitive(self):
        report = monodromy(parse_polynomial("(y^2 - x)*(y^2 - x - 1)"))
        assert not report.transitive
        assert report.genus is None
        assert report.group.order() == 4
        assert sorted(len(o) for o in report.group.orbits()) == [2, 2]

    def test_threads_do_not_change_the_result(self):
        f = parse_polynomial("y^4 + y - x")
        assert monodromy(f, threads=1).permutations == monodromy(f, threads=3).permutations

    def test_refinement_check(self):
        report = monodromy(parse_polynomial("y^3 + y - x"), refine_check=True)
        assert report.group.order() == 6

    def test_report_dict(self):
        data = monodromy(parse_polynomial("y^2 - x")).to_dict()
        assert data["sheets"] == 2
        assert data["generators"] == ["(0 1)"]
        assert data["group_order"] == 2


class TestVerdicts:
    def test_quintic_verdicts(self):
        verdicts = classify_algebraic(parse_polynomial("y^5 + y - x"), kmax=8)
        assert find_verdict(verdicts, VerdictClass.QUADRATURES).status is VerdictStatus.STRONGLY_NON_REPRESENTABLE
        assert find_verdict(verdicts, VerdictClass.RADICALS) is None
        assert find_verdict(verdicts, VerdictClass.K_QUADRATURES, 4).status is \
            VerdictStatus.STRONGLY_NON_REPRESENTABLE
        assert find_verdict(verdicts, VerdictClass.K_RADICALS, 5).status is VerdictStatus.REPRESENTABLE
        general = find_verdict(verdicts, VerdictClass.GENERALIZED_QUADRATURES)
        assert general.status is VerdictStatus.REPRESENTABLE

    def test_solvable_relation(self):
        verdicts = classify_algebraic(parse_polynomial("y^4 - x^2 - 1"), kmax=2)
        assert find_verdict(verdicts, VerdictClass.RADICALS).status is VerdictStatus.REPRESENTABLE
        assert find_verdict(verdicts, VerdictClass.K_RADICALS, 1).status is VerdictStatus.REPRESENTABLE

    def test_kmax_must_be_positive(self):
        with pytest.raises(ValueError):
            classify_algebraic(parse_polynomial("y^2 - x"), kmax=0)

    def test_verdict_needs_k_for_k_classes(self):
        with pytest.raises(ValueError):
            Verdict(VerdictClass.K_RADICALS, VerdictStatus.REPRESENTABLE, "missing k")
        with pytest.raises(ValueError):
            Verdict(VerdictClass.RADICALS, VerdictStatus.REPRESENTABLE, "extra k", k=2)

    def test_verdict_text(self):
        verdict = Verdict(VerdictClass.K_RADICALS, VerdictStatus.REPRESENTABLE, "ok", k=5)
        assert verdict.label == "KRadicals(5)"
        assert str(verdict) == "Representable(KRadicals(5)): ok"
        assert verdict.to_dict()["class"] == "KRadicals(5)"


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_trinomial_family_is_symmetric(n):
    report = monodromy(parse_polynomial(f"y^{n} + y - x"))
    assert report.group.order() == math.factorial(n)
    verdicts = classify_algebraic(report.relation, kmax=n, report=report)
    assert find_verdict(verdicts, VerdictClass.K_QUADRATURES, n - 1).status is \
        VerdictStatus.STRONGLY_NON_REPRESENTABLE
    assert find_verdict(verdicts, VerdictClass.K_RADICALS, n).status is VerdictStatus.REPRESENTABLE


@pytest.mark.slow
def test_loop_identity_on_random_relations():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.choice([3, 4])
        a = rng.randint(1, 3)
        c, d = rng.randint(-3, 3), rng.randint(-3, 3)
        report = monodromy(parse_polynomial(f"y^{n} + {a}*y - (x^2 + {c}*x + {d})"))
        assert report.loop_identity_holds()
        assert report.transitive


@pytest.mark.slow
def test_permutations_stable_under_tighter_tolerance():
    f = parse_polynomial("y^5 + y - x")
    assert monodromy(f, tol=1e-10).permutations == monodromy(f, tol=1e-11).permutations
