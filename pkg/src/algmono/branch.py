"""
Branch points of an algebraic function f(x, y) = 0 monic in y
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .skeleton import build_skeleton, puncture_gap
from ..numkernel import BiPoly, UniPoly, cluster_roots, discriminant_in_y, roots_with_retry
from ..utils.errors import NotMonicInY, NotSquarefree

logger = logging.getLogger(__name__)

CRITICAL_VALUE_TOL = 1e-8


@dataclass(frozen=True)
class BranchData:
    branch_points: Tuple[complex, ...]
    discriminant: UniPoly
    base_point: complex
    n_sheets: int

    @property
    def gap(self) -> float:
        return puncture_gap(self.branch_points)


def normalize_monic(f: BiPoly) -> BiPoly:
    """Divide by the leading y-coefficient, which must not depend on x"""
    if f.deg_y < 1:
        raise NotMonicInY("Relation does not involve y")
    leading = f.coefficient_in_y(f.deg_y)
    if not leading.is_constant:
        raise NotMonicInY(f"Leading y-coefficient {leading} depends on x")
    lead = leading[0]
    return f if lead == 1 else f.scaled(Fraction(1) / lead)


def critical_value_points(f: BiPoly, tol: float) -> Tuple[complex, ...]:
    """
    Branch points of a numeric relation q(y) + a*x = 0: the critical values -q(c)/a

    Raises:
        TypeError: x enters other than through the constant multiple a*x
    """
    a = f.coefficients.get((1, 0), 0)
    if f.deg_x != 1 or a == 0 or any(i == 1 and j > 0 for i, j in f.coefficients):
        raise TypeError("Numeric relations must have the form q(y) + a*x")
    q = UniPoly([f.coefficients.get((0, j), 0) for j in range(f.deg_y + 1)])
    if q.degree < 2:
        return ()
    critical = roots_with_retry(q.derivative(), tol)
    values = [(complex(-q(c) / a), 1) for c, _ in critical]
    scale = max(1.0, max(abs(v) for v, _ in values))
    return tuple(v for v, _ in cluster_roots(values, CRITICAL_VALUE_TOL * scale))


def branch_points(f: BiPoly, tol: float = 1e-10) -> BranchData:
    """
    Distinct roots of disc_y(f) and the base point of the loop skeleton around them

    Raises:
        NotMonicInY: leading y-coefficient depends on x
        NotSquarefree: disc_y(f) vanishes identically
    """
    f = normalize_monic(f)
    if not f.is_exact:
        points = critical_value_points(f, tol)
        skeleton = build_skeleton(points, tol)
        logger.info(f"{len(points)} critical value(s) of a numeric relation, {f.deg_y} sheets")
        return BranchData(points, UniPoly.from_roots(points), skeleton.base_point, f.deg_y)
    if f.deg_y == 1:
        discriminant = UniPoly([1])
    else:
        discriminant = discriminant_in_y(f)
    if discriminant.is_zero:
        raise NotSquarefree("Discriminant vanishes identically: f has a repeated factor in y")

    points: Tuple[complex, ...] = ()
    if not discriminant.is_constant:
        points = tuple(r for r, _ in roots_with_retry(discriminant, tol))
    skeleton = build_skeleton(points, tol)
    logger.info(f"{len(points)} branch point(s), {f.deg_y} sheets, base point {skeleton.base_point:.6g}")
    return BranchData(points, discriminant, skeleton.base_point, f.deg_y)
