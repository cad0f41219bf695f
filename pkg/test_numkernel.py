"""
Tests for exact polynomials, root finding, resultants, linear algebra and ODE transport
"""

from fractions import Fraction

import numpy as np
import pytest

from src.numkernel import (
    BiPoly, PathPolyline, UniPoly, chebyshev, cluster_roots, discriminant_in_y, eigen,
    integrate_linear_ode, matrix_exp, null_space, resultant_in_y, roots_all, roots_with_retry,
    squarefree_decomposition,
)
from src.numkernel.linalg import orthonormal_completion
from src.utils.errors import DegenerateLeadingCoefficient, PathTooClose


class TestUniPoly:
    def test_arithmetic(self):
        p = UniPoly([1, 2, 3])
        q = UniPoly([0, 1])
        assert (p * q).coefficients == (0, 1, 2, 3)
        assert (p - p).is_zero
        assert (q ** 3) == UniPoly.monomial(3)

    def test_divmod_reconstructs(self):
        p = UniPoly([Fraction(1, 2), -3, 0, 7, 2])
        d = UniPoly([1, 0, 1])
        quotient, remainder = divmod(p, d)
        assert quotient * d + remainder == p
        assert remainder.degree < d.degree

    def test_compose_and_derivative(self):
        p = UniPoly([0, 0, 1])
        r = UniPoly([1, 1])
        assert p.compose(r) == UniPoly([1, 2, 1])
        assert p.compose(r).derivative() == UniPoly([2, 2])

    def test_gcd_is_monic(self):
        a = UniPoly.from_roots([1, 2, 3])
        b = UniPoly.from_roots([2, 3, 5]) * 4
        assert a.gcd(b) == UniPoly.from_roots([2, 3])

    def test_chebyshev_recurrence(self):
        assert chebyshev(3) == UniPoly([0, -3, 0, 4])
        assert chebyshev(6) == UniPoly([-1, 0, 18, 0, -48, 0, 32])
        # T_2 o T_3 = T_6
        assert chebyshev(2).compose(chebyshev(3)) == chebyshev(6)

    def test_float_coefficients_become_complex(self):
        p = UniPoly([0.5, 1])
        assert not p.is_exact
        assert isinstance(p.leading, complex)


class TestBiPoly:
    def test_inverse_relation(self):
        f = BiPoly.inverse_relation(UniPoly([0, 0, 1]))
        assert f.deg_y == 2 and f.deg_x == 1
        assert f.at_x(4)(2) == 0

    def test_partial_derivatives(self):
        f = BiPoly({(0, 5): 1, (0, 1): 1, (1, 0): -1})
        assert f.diff_y() == BiPoly({(0, 4): 5, (0, 0): 1})
        assert f.diff_x() == BiPoly({(0, 0): -1})

    def test_complex_coefficients_are_numeric(self):
        f = BiPoly({(0, 1): 1j, (1, 0): Fraction(1, 2)})
        assert not f.is_exact
        assert BiPoly({(0, 1): 1, (1, 0): 2}).is_exact
        with pytest.raises(TypeError):
            resultant_in_y(f, f.diff_y())


class TestRoots:
    def test_simple_roots(self):
        roots = roots_all(UniPoly.from_roots([1, -2, 3]), 1e-10)
        assert [m for _, m in roots] == [1, 1, 1]
        assert np.allclose(sorted(r.real for r, _ in roots), [-2, 1, 3])

    def test_exact_multiplicities(self):
        p = UniPoly.from_roots([1, 1, 1, 2])
        roots = roots_all(p, 1e-10)
        assert len(roots) == 2
        assert sorted(m for _, m in roots) == [1, 3]
        assert sum(m for _, m in roots) == p.degree

    def test_squarefree_decomposition(self):
        p = UniPoly.from_roots([0, 0, 5])
        pieces = dict((m, f) for f, m in squarefree_decomposition(p))
        assert pieces[1] == UniPoly.from_roots([5])
        assert pieces[2] == UniPoly.from_roots([0])

    def test_roots_of_unity(self):
        roots = roots_with_retry(UniPoly([-1, 0, 0, 0, 0, 1]), 1e-12)
        assert len(roots) == 5
        assert all(abs(abs(r) - 1) < 1e-10 for r, _ in roots)

    def test_tolerance_range(self):
        with pytest.raises(ValueError):
            roots_all(UniPoly([1, 1]), 1e-2)

    def test_cluster_merges_close_points(self):
        merged = cluster_roots([(1.0 + 0j, 1), (1.0 + 1e-12j, 1), (2.0 + 0j, 1)], 1e-9)
        assert [m for _, m in merged] == [2, 1]


class TestResultant:
    def test_discriminant_of_quintic_family(self):
        # disc_y(y^5 + y - x) = 3125 x^4 + 256
        f = BiPoly({(0, 5): 1, (0, 1): 1, (1, 0): -1})
        assert discriminant_in_y(f) == UniPoly([256, 0, 0, 0, 3125])

    def test_resultant_vanishes_on_common_root(self):
        f = BiPoly({(0, 2): 1, (1, 0): -1})          # y^2 - x
        g = BiPoly({(0, 1): 1, (0, 0): -2})          # y - 2
        assert resultant_in_y(f, g) == UniPoly([4, -1])

    def test_degenerate_input(self):
        with pytest.raises(DegenerateLeadingCoefficient):
            resultant_in_y(BiPoly({(1, 0): 1}), BiPoly({(0, 1): 1}))


class TestLinearAlgebra:
    def test_eigen_groups_repeated_values(self):
        groups = eigen(np.diag([2.0, 2.0, 5.0]), 1e-10)
        dims = sorted((round(v.real), basis.shape[1]) for v, basis in groups)
        assert dims == [(2, 2), (5, 1)]

    def test_null_space(self):
        m = np.array([[1, 1], [1, 1]], dtype=complex)
        kernel = null_space(m, 1e-10)
        assert kernel.shape == (2, 1)
        assert np.allclose(m @ kernel, 0)

    def test_orthonormal_completion(self):
        v = np.array([1, 1j, 0])
        q = orthonormal_completion(v)
        assert np.allclose(q.conj().T @ q, np.eye(3))
        assert np.allclose(q[:, 0], v / np.linalg.norm(v))

    def test_matrix_exp(self):
        n = np.array([[0, 1], [0, 0]], dtype=complex)
        assert np.allclose(matrix_exp(n), [[1, 1], [0, 1]])


class _ScalarPole:
    """y' = (a / x) y"""

    def __init__(self, a):
        self.a = a

    @property
    def dimension(self):
        return 1

    @property
    def poles(self):
        return (0j,)

    def coefficient_matrix(self, x):
        return np.array([[self.a / x]])


class TestTransport:
    def test_loop_around_pole_gives_exponential(self):
        samples = 256
        circle = tuple(np.exp(2j * np.pi * k / samples) for k in range(samples)) + (1 + 0j,)
        transfer = integrate_linear_ode(_ScalarPole(0.25), PathPolyline(circle), 1e-10)
        assert abs(transfer[0, 0] - np.exp(2j * np.pi * 0.25)) < 1e-6

    def test_constant_path_is_identity(self):
        transfer = integrate_linear_ode(_ScalarPole(1.0), PathPolyline.constant(1 + 0j), 1e-10)
        assert np.allclose(transfer, np.eye(1))

    def test_path_through_pole(self):
        with pytest.raises(PathTooClose):
            integrate_linear_ode(_ScalarPole(1.0), PathPolyline((-1 + 0j, 1 + 0j)), 1e-10)

    def test_path_helpers(self):
        path = PathPolyline((0j, 1 + 0j, 1 + 1j))
        assert path.length == pytest.approx(2.0)
        assert path.distance_to(0.5 + 0.5j) == pytest.approx(0.5)
        assert path.then(PathPolyline((1 + 1j, 2 + 1j))).end == 2 + 1j
