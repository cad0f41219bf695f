"""
Exact resultants in y by evaluation at rational points and Newton interpolation
"""

import logging
from fractions import Fraction
from typing import List, Sequence

from .polynomials import BiPoly, UniPoly
from ..utils.errors import DegenerateLeadingCoefficient

logger = logging.getLogger(__name__)


def sylvester_matrix(f: Sequence[Fraction], g: Sequence[Fraction]) -> List[List[Fraction]]:
    """Sylvester matrix of two coefficient lists (lowest power first, formal degrees = len - 1)"""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    high_f = list(reversed(f))
    high_g = list(reversed(g))
    for shift in range(n):
        rows.append([Fraction(0)] * shift + high_f + [Fraction(0)] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([Fraction(0)] * shift + high_g + [Fraction(0)] * (size - shift - n - 1))
    return rows


def exact_determinant(matrix: List[List[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination"""
    rows = [list(r) for r in matrix]
    size = len(rows)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        lead = rows[col][col]
        det *= lead
        for r in range(col + 1, size):
            factor = rows[r][col] / lead
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def newton_interpolation(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UniPoly:
    """Exact interpolating polynomial through (xs, ys)"""
    table = list(ys)
    count = len(xs)
    for level in range(1, count):
        for i in range(count - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    result = UniPoly([table[-1]])
    for i in range(count - 2, -1, -1):
        result = result * UniPoly([-xs[i], 1]) + table[i]
    return result


def resultant_bound(f: BiPoly, g: BiPoly) -> int:
    return f.deg_y * g.deg_x + g.deg_y * f.deg_x


def resultant_at(f: BiPoly, g: BiPoly, x0: Fraction) -> Fraction:
    """Sylvester determinant of f(x0, y), g(x0, y) with the formal y-degrees"""
    fy = [f.coefficient_in_y(j)(x0) for j in range(f.deg_y + 1)]
    gy = [g.coefficient_in_y(j)(x0) for j in range(g.deg_y + 1)]
    return exact_determinant(sylvester_matrix(fy, gy))


def resultant_in_y(f: BiPoly, g: BiPoly) -> UniPoly:
    """
    Res_y(f, g) as an exact polynomial in x

    Evaluates the Sylvester determinant at bound + 1 integer points and interpolates.
    """
    if not (f.is_exact and g.is_exact):
        raise TypeError("Exact resultants need rational coefficients")
    for name, poly in (("f", f), ("g", g)):
        if poly.deg_y < 1:
            raise DegenerateLeadingCoefficient(f"{name} has no y-dependence")
        if poly.coefficient_in_y(poly.deg_y).is_zero:
            raise DegenerateLeadingCoefficient(f"Leading y-coefficient of {name} vanishes identically")

    bound = resultant_bound(f, g)
    xs = [Fraction(k) for k in range(bound + 1)]
    ys = [resultant_at(f, g, x) for x in xs]
    logger.debug(f"Resultant interpolated from {len(xs)} samples (degree bound {bound})")
    return newton_interpolation(xs, ys)


def discriminant_in_y(f: BiPoly) -> UniPoly:
    """Res_y(f, df/dy); its roots are the branch points of the algebraic function f = 0"""
    return resultant_in_y(f, f.diff_y())
