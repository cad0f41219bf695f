"""
Recognition of power and Chebyshev polynomials up to linear changes on both sides
"""

import cmath
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .linear import LinearChange
from ..numkernel import UniPoly, chebyshev, cluster_roots, roots_with_retry
from ..utils.errors import NotPrimitiveInput

logger = logging.getLogger(__name__)

FLOAT_TOLERANCE = 1e-10
CRITICAL_ROOT_TOL = 1e-12
RATIONAL_DENOMINATOR = 10 ** 6

# p = outer(base_n(inner(z)))
Recognition = Tuple[int, LinearChange, LinearChange]


def _agrees(candidate: UniPoly, p: UniPoly) -> bool:
    if candidate.is_exact and p.is_exact:
        return candidate == p
    scale = max(1.0, max(abs(c) for c in p.coefficients))
    size = max(len(candidate.coefficients), len(p.coefficients))
    return all(abs(complex(candidate[i]) - complex(p[i])) <= FLOAT_TOLERANCE * scale for i in range(size))


def _assemble(base: UniPoly, inner: LinearChange, outer: LinearChange) -> UniPoly:
    return outer.as_poly().compose(base.compose(inner.as_poly()))


def _require_primitive(p: UniPoly):
    from .decompose import decompose
    if p.is_exact and len(decompose(p)[0].components) > 1:
        raise NotPrimitiveInput(f"Degree-{p.degree} polynomial decomposes")


def recognize_power(p: UniPoly, check_primitive: bool = True) -> Optional[Recognition]:
    """
    Recognize p = outer(z^n) o inner, i.e. p' = c (z - a)^(n - 1)

    Returns:
        (n, inner, outer) or None
    """
    n = p.degree
    if n < 2:
        raise ValueError("Power recognition needs degree >= 2")
    if check_primitive:
        _require_primitive(p)
    lead = p.leading
    # critical point from the z^(n-2) coefficient of p'
    derivative = p.derivative()
    a = -derivative[n - 2] / ((n - 1) * derivative.leading)
    inner = LinearChange(1, -a)
    outer = LinearChange(lead, p(a))
    if _agrees(_assemble(UniPoly.monomial(n), inner, outer), p):
        return n, inner, outer
    return None


def _rationalize(value: complex) -> Optional[Fraction]:
    if abs(value.imag) > FLOAT_TOLERANCE * max(1.0, abs(value)):
        return None
    return Fraction(value.real).limit_denominator(RATIONAL_DENOMINATOR)


def _exact_change(a: complex, b: complex) -> Optional[LinearChange]:
    ra, rb = _rationalize(a), _rationalize(b)
    if ra is None or rb is None or ra == 0:
        return None
    return LinearChange(ra, rb)


def critical_values(p: UniPoly) -> Tuple[List[complex], List[complex]]:
    """Critical points (with multiplicity) of p and their distinct values"""
    points = roots_with_retry(p.derivative(), CRITICAL_ROOT_TOL)
    values = cluster_roots([(complex(p(z)), 1) for z, _ in points],
                           1e-8 * max(1.0, max(abs(complex(c)) for c in p.coefficients)))
    expanded = [z for z, m in points for _ in range(m)]
    return expanded, [v for v, _ in values]


def recognize_chebyshev(p: UniPoly, check_primitive: bool = True) -> Optional[Recognition]:
    """
    Recognize p = alpha T_n(beta z + gamma) + delta

    T_n has n - 1 simple critical points and critical values +-1, so the two critical
    values of p fix alpha and delta; beta is an n-th root of the leading coefficient and
    gamma follows from the z^(n-1) coefficient.

    Returns:
        (n, inner, outer) or None
    """
    n = p.degree
    if n < 2:
        raise ValueError("Chebyshev recognition needs degree >= 2")
    if check_primitive:
        _require_primitive(p)
    points, values = critical_values(p)
    if len(values) != 2 or len(cluster_roots([(z, 1) for z in points], 1e-8)) != n - 1:
        return None

    base = chebyshev(n)
    low, high = sorted(values, key=lambda v: (v.real, v.imag))
    lead = complex(p.leading)
    for alpha in ((high - low) / 2, (low - high) / 2):
        if abs(alpha) == 0:
            continue
        delta = (high + low) / 2
        target = lead / alpha / 2 ** (n - 1)
        principal = cmath.exp(cmath.log(target) / n)
        next_coefficient = complex(p[n - 1]) / alpha
        for k in range(n):
            beta = principal * cmath.exp(2j * cmath.pi * k / n)
            gamma = next_coefficient / (2 ** (n - 1) * n * beta ** (n - 1))
            for inner, outer in (
                (_exact_change(beta, gamma), _exact_change(alpha, delta)),
                (LinearChange(beta, gamma), LinearChange(alpha, delta)),
            ):
                if inner is None or outer is None:
                    continue
                if _agrees(_assemble(base, inner, outer), p):
                    return n, inner, outer
    return None
