"""
Tests for Fuchsian systems: monodromy matrices, Lie closures and verdicts
"""

from fractions import Fraction

import numpy as np
import pytest

from src.algmono import VerdictClass, VerdictStatus, build_skeleton, find_verdict
from src.fuchsian import (
    FuchsianSystem, MonodromyMatrices, ScalarFuchsianEquation, classify_fuchsian, classify_scalar_equation,
    companion_system, exact_lie_closure, fuchsian_monodromy, generic_stabilizer_probe,
    is_simultaneously_triangularizable, lie_closure, triangularize_matrices,
)
from src.utils.errors import RankThresholdAmbiguous

E = np.array([[0, 1], [0, 0]], dtype=complex)
F = np.array([[0, 0], [1, 0]], dtype=complex)
H = np.array([[1, 0], [0, -1]], dtype=complex)


def sl2_system(eps: float) -> FuchsianSystem:
    return FuchsianSystem((0, 1), (eps * E, eps * F))


def triangular_system() -> FuchsianSystem:
    return FuchsianSystem.from_rational(
        [0, 1],
        [[["1/3", 1], [0, 0]],
         [["-1/3", 2], [0, "1/2"]]])


def commutator_defect(mono: MonodromyMatrices) -> float:
    a, b = mono.matrix_for(0), mono.matrix_for(1)
    c = a @ b @ np.linalg.inv(a) @ np.linalg.inv(b)
    return float(np.linalg.norm(c - np.eye(2)))


class TestSystem:
    def test_validation(self):
        with pytest.raises(ValueError):
            FuchsianSystem((), ())
        with pytest.raises(ValueError):
            FuchsianSystem((0, 1), (E,))
        with pytest.raises(ValueError):
            FuchsianSystem((0, 0), (E, F))
        with pytest.raises(ValueError):
            FuchsianSystem((0, 1), (E, np.eye(3)))

    def test_infinity_residue(self):
        system = FuchsianSystem((0, 1), (E, -E))
        assert system.regular_at_infinity
        assert not sl2_system(0.1).regular_at_infinity
        np.testing.assert_allclose(sl2_system(1.0).infinity_residue, -(E + F))

    def test_from_rational_keeps_exact_copy(self):
        system = triangular_system()
        assert system.exact_residues[0][0][0] == Fraction(1, 3)
        assert system.residues[1][1, 1] == pytest.approx(0.5)

    def test_conjugated_and_scaled(self):
        change = np.array([[1, 1], [0, 1]], dtype=complex)
        system = sl2_system(1.0).conjugated(change)
        np.testing.assert_allclose(change @ system.residues[0] @ np.linalg.inv(change), E, atol=1e-14)
        np.testing.assert_allclose(sl2_system(1.0).scaled(0.5).residues[1], 0.5 * F)


class TestMonodromy:
    def test_unit_determinant_for_traceless_residues(self):
        mono = fuchsian_monodromy(sl2_system(0.05))
        for m in mono.matrices:
            assert abs(np.linalg.det(m) - 1) < 1e-8
        assert max(mono.determinant_residuals) < 1e-8

    def test_first_order_expansion(self):
        eps = 1e-3
        mono = fuchsian_monodromy(sl2_system(eps))
        deviation = mono.matrix_for(0) - np.eye(2) - 2j * np.pi * eps * E
        assert np.linalg.norm(deviation) < 10 * (2 * np.pi * eps) ** 2

    def test_commutator_decays_quadratically(self):
        defects = [commutator_defect(fuchsian_monodromy(sl2_system(eps))) for eps in (1e-2, 5e-3, 2.5e-3)]
        assert 2.8 <= defects[0] / defects[1] <= 5.7
        assert 2.8 <= defects[1] / defects[2] <= 5.7

    def test_loop_product_is_identity_when_regular_at_infinity(self):
        system = FuchsianSystem((0, 1, -1), (E / 10, F / 10, -(E + F) / 10))
        mono = fuchsian_monodromy(system)
        assert mono.product_residual < 1e-6
        np.testing.assert_allclose(mono.infinity_matrix @ mono.ordered_product(), np.eye(2), atol=1e-10)

    def test_threads_give_same_matrices(self):
        system = sl2_system(0.1)
        serial = fuchsian_monodromy(system)
        threaded = fuchsian_monodromy(system, threads=2)
        for a, b in zip(serial.matrices, threaded.matrices):
            np.testing.assert_allclose(a, b, atol=1e-12)

    def test_to_dict(self):
        data = fuchsian_monodromy(sl2_system(0.1)).to_dict()
        assert len(data["matrices"]) == 2
        assert set(data) >= {"base_point", "poles", "infinity_matrix", "product_residual"}


class TestProbe:
    def test_random_solutions_are_moved(self):
        report = generic_stabilizer_probe(fuchsian_monodromy(sl2_system(0.01)), trials=100, seed=42,
                                          threshold=1e-6)
        assert not report.skipped
        assert report.failures == []
        assert report.min_displacement > 1e-6

    def test_identity_monodromy_is_skipped(self):
        skeleton = build_skeleton([0, 1])
        mono = MonodromyMatrices(skeleton, [np.eye(2), np.eye(2)], np.eye(2), 0.0)
        report = generic_stabilizer_probe(mono, threshold=1e-6)
        assert report.skipped
        assert report.to_dict()["failures"] == 0

    def test_reports_fixed_vectors(self):
        skeleton = build_skeleton([0])
        m = np.diag([1, 11]).astype(complex)
        mono = MonodromyMatrices(skeleton, [m], np.linalg.inv(m), 0.0)
        report = generic_stabilizer_probe(mono, trials=100, seed=42, threshold=5.0)
        assert 0 < len(report.failures) < 100
        for v in report.failures:
            assert abs(v[1]) <= 0.5 + 1e-12


class TestLieClosure:
    def test_sl2_is_not_solvable(self):
        closure = lie_closure([E, F])
        assert closure.dimension == 3
        assert closure.derived_dims == [3, 3]
        assert not closure.is_solvable

    def test_commuting_matrices(self):
        closure = lie_closure([np.diag([1, 2]), np.diag([3, -1])])
        assert closure.dimension == 2
        assert closure.derived_dims == [2, 0]
        assert closure.is_solvable

    def test_exact_heisenberg(self):
        zero, one = Fraction(0), Fraction(1)
        e12 = [[zero, one, zero], [zero, zero, zero], [zero, zero, zero]]
        e23 = [[zero, zero, zero], [zero, zero, one], [zero, zero, zero]]
        closure = exact_lie_closure([e12, e23])
        assert closure.exact
        assert closure.dimension == 3
        assert closure.derived_dims == [3, 1, 0]

    def test_ambiguous_rank_without_exact_copy(self):
        delta = 1e-9
        with pytest.raises(RankThresholdAmbiguous):
            lie_closure([E, E + delta * F], tol=1e-9)

    def test_ambiguous_rank_falls_back_to_exact(self):
        delta = Fraction(1, 10 ** 9)
        exact = [
            [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]],
            [[Fraction(0), Fraction(1)], [delta, Fraction(0)]],
        ]
        closure = lie_closure([E, E + float(delta) * F], tol=1e-9, exact=exact)
        assert closure.exact
        assert closure.dimension == 3

    def test_triangularization(self):
        system = triangular_system()
        result = is_simultaneously_triangularizable(system.residues)
        assert result.triangularizable
        assert result.closure.derived_dims == [3, 1, 0]
        basis = result.witness
        for r in system.residues:
            conjugated = np.linalg.inv(basis) @ r @ basis
            assert np.linalg.norm(np.tril(conjugated, -1)) < 1e-8
        assert not is_simultaneously_triangularizable([E, F]).triangularizable

    def test_triangularize_matrices(self):
        assert triangularize_matrices([E, F]) is None
        assert triangularize_matrices([E, H]) is not None


class TestClassify:
    def test_sl2_with_smallness_is_strongly_non_representable(self):
        verdicts = classify_fuchsian(sl2_system(0.01), assume_small=True, kmax=4)
        gq = find_verdict(verdicts, VerdictClass.GENERALIZED_QUADRATURES)
        assert gq.status is VerdictStatus.STRONGLY_NON_REPRESENTABLE
        assert "caveat" in gq.evidence
        assert find_verdict(verdicts, VerdictClass.K_QUADRATURES, 4).status is VerdictStatus.STRONGLY_NON_REPRESENTABLE

    def test_sl2_without_smallness_is_inconclusive(self):
        system = sl2_system(0.01)
        mono = fuchsian_monodromy(system)
        verdicts = classify_fuchsian(system, monodromy=mono)
        assert len(verdicts) == 1
        assert verdicts[0].status is VerdictStatus.INCONCLUSIVE
        assert "monodromy" in verdicts[0].evidence

    def test_triangular_residues_are_representable(self):
        verdicts = classify_fuchsian(triangular_system(), kmax=3)
        for verdict_class, k in ((VerdictClass.GENERALIZED_QUADRATURES, None),
                                 (VerdictClass.QUADRATURES, None),
                                 (VerdictClass.K_QUADRATURES, 3)):
            assert find_verdict(verdicts, verdict_class, k).status is VerdictStatus.REPRESENTABLE
        assert "witness" in verdicts[0].evidence

    def test_triangular_system_has_triangular_monodromy(self):
        mono = fuchsian_monodromy(triangular_system())
        assert triangularize_matrices(mono.matrices, 1e-8) is not None


class TestScalarEquations:
    def test_validation(self):
        with pytest.raises(ValueError):
            ScalarFuchsianEquation(0, (0,), ())
        with pytest.raises(ValueError):
            ScalarFuchsianEquation(2, (0,), ((2, 0, 1, 1),))
        with pytest.raises(ValueError):
            ScalarFuchsianEquation(2, (0,), ((0, 1, 1, 1),))
        with pytest.raises(ValueError):
            ScalarFuchsianEquation(2, (0, 0), ())

    def test_fuchsian_pole_orders(self):
        assert ScalarFuchsianEquation(2, (0,), ((0, 0, 2, 1), (1, 0, 1, 1))).is_fuchsian
        assert not ScalarFuchsianEquation(2, (0,), ((1, 0, 2, 1),)).is_fuchsian

    def test_companion_matrix(self):
        equation = ScalarFuchsianEquation(2, (0,), ((0, 0, 2, 3), (1, 0, 1, 5)))
        matrix = companion_system(equation).coefficient_matrix(2)
        np.testing.assert_allclose(matrix, [[0, 1], [-0.75, -2.5]])

    def test_first_order_power(self):
        # y' - y / (4x) = 0 has solution x^(1/4)
        equation = ScalarFuchsianEquation(1, (0,), ((0, 0, 1, -0.25),))
        mono = fuchsian_monodromy(companion_system(equation))
        assert mono.matrices[0][0, 0] == pytest.approx(1j, abs=1e-8)
        assert classify_scalar_equation(mono)[0].status is VerdictStatus.REPRESENTABLE

    def test_euler_equation_with_integer_exponents(self):
        # y'' - 2 y / x^2 = 0 has solutions x^2 and 1/x
        equation = ScalarFuchsianEquation(2, (0,), ((0, 0, 2, -2),))
        mono = fuchsian_monodromy(companion_system(equation))
        np.testing.assert_allclose(mono.matrices[0], np.eye(2), atol=1e-7)
