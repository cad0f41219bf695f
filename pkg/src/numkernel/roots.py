"""
All-roots solver: exact squarefree splitting, Aberth-Ehrlich iteration, Newton polish,
multiplicity clustering
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from .polynomials import UniPoly
from ..utils.errors import NonConvergence, OverflowingCoefficients

logger = logging.getLogger(__name__)

MIN_TOL = 1e-14
MAX_TOL = 1e-4
MAX_ITERATIONS = 500


def squarefree_decomposition(p: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Yun's algorithm over the rationals: p = lc * prod(f_i ** i), f_i squarefree and coprime"""
    if not p.is_exact:
        raise TypeError("Squarefree decomposition needs rational coefficients")
    if p.is_constant:
        return []
    dp = p.derivative()
    a = p.gcd(dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    factors = []
    multiplicity = 1
    while b.degree > 0:
        a = b.gcd(d)
        if a.degree > 0:
            factors.append((a, multiplicity))
        b = b // a
        c = d // a
        d = c - b.derivative()
        multiplicity += 1
    return factors


def polynomial_scale(coefficients: np.ndarray, root: complex) -> float:
    """Max coefficient magnitude times max(1, |root|)**degree"""
    degree = len(coefficients) - 1
    return float(np.max(np.abs(coefficients))) * max(1.0, abs(root)) ** degree


def _check_coefficients(coefficients: np.ndarray):
    magnitudes = np.abs(coefficients)
    if not np.all(np.isfinite(magnitudes)):
        raise OverflowingCoefficients("Polynomial coefficients are not finite")
    nonzero = magnitudes[magnitudes > 0]
    if nonzero.size and nonzero.max() / nonzero.min() > 1e280:
        raise OverflowingCoefficients("Coefficient magnitudes span more than 280 decades")


def _initial_guesses(coefficients: np.ndarray, start_angle: float) -> np.ndarray:
    degree = len(coefficients) - 1
    lead = coefficients[0]
    center = -coefficients[1] / (degree * lead)
    # Taylor shift to the centroid keeps the starting circle tight
    shifted = np.array([np.polyval(np.polyder(coefficients, k), center) / math.factorial(k)
                        for k in range(degree, -1, -1)])
    tail = np.abs(shifted[1:] / shifted[0])
    radius = max(float(np.max(tail ** (1.0 / np.arange(1, degree + 1)))), 1e-12)
    angles = start_angle + 2 * np.pi * np.arange(degree) / degree
    return center + radius * np.exp(1j * angles)


def aberth_roots(coefficients: np.ndarray, tol: float, start_angle: float = 0.4) -> np.ndarray:
    """Simultaneous Aberth-Ehrlich iteration; coefficients highest power first"""
    degree = len(coefficients) - 1
    if degree == 1:
        return np.array([-coefficients[1] / coefficients[0]])

    derivative = np.polyder(coefficients)
    z = _initial_guesses(coefficients, start_angle)
    step_target = 1e-3 * tol
    for iteration in range(MAX_ITERATIONS):
        values = np.polyval(coefficients, z)
        slopes = np.polyval(derivative, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(slopes != 0, values / slopes, values)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            repulsion = (1.0 / diff).sum(axis=1) - 1.0
            correction = ratio / (1.0 - ratio * repulsion)
        correction = np.where(np.isfinite(correction), correction, 0.0)
        z = z - correction
        if np.all(np.abs(correction) <= step_target * np.maximum(1.0, np.abs(z))):
            logger.debug(f"Aberth converged after {iteration + 1} iterations (degree {degree})")
            break
    else:
        residuals = np.abs(np.polyval(coefficients, z))
        scales = np.array([polynomial_scale(coefficients, r) for r in z])
        if np.any(residuals > tol * scales):
            raise NonConvergence(f"Aberth iteration cap {MAX_ITERATIONS} hit (degree {degree})",
                                 start_angle=start_angle)

    # Newton polish
    for _ in range(2):
        slopes = np.polyval(derivative, z)
        safe = np.abs(slopes) > 0
        z = np.where(safe, z - np.polyval(coefficients, z) / np.where(safe, slopes, 1.0), z)
    return z


def cluster_roots(points: List[Tuple[complex, int]], radius: float) -> List[Tuple[complex, int]]:
    """Merge roots closer than radius; the representative is the multiplicity-weighted mean"""
    clusters: List[List[Tuple[complex, int]]] = []
    for point, multiplicity in points:
        merged = [c for c in clusters if any(abs(point - q) <= radius for q, _ in c)]
        fresh = [(point, multiplicity)]
        for cluster in merged:
            fresh.extend(cluster)
            clusters.remove(cluster)
        clusters.append(fresh)

    result = []
    for cluster in clusters:
        total = sum(m for _, m in cluster)
        center = sum(q * m for q, m in cluster) / total
        result.append((complex(center), total))
    return sorted(result, key=lambda item: (item[0].real, item[0].imag))


def roots_all(p: UniPoly, tol: float, start_angle: float = 0.4) -> List[Tuple[complex, int]]:
    """
    All complex roots of p with multiplicities

    Args:
        p: nonconstant polynomial (rational or complex coefficients)
        tol: residual tolerance in [1e-14, 1e-4]
        start_angle: phase of the initial Aberth circle; change it to retry after NonConvergence

    Returns:
        List of (root, multiplicity) sorted by (real, imag); multiplicities sum to degree(p)
    """
    if p.is_constant:
        raise ValueError("roots_all needs a nonconstant polynomial")
    if not MIN_TOL <= tol <= MAX_TOL:
        raise ValueError(f"Root tolerance {tol} outside [{MIN_TOL}, {MAX_TOL}]")

    if p.is_exact:
        pieces = squarefree_decomposition(p)
    else:
        pieces = [(p, 1)]

    found: List[Tuple[complex, int]] = []
    for factor, multiplicity in pieces:
        coefficients = factor.to_numpy()
        _check_coefficients(coefficients)
        for root in aberth_roots(coefficients, tol, start_angle):
            found.append((complex(root), multiplicity))

    result = cluster_roots(found, 10 * tol)
    full = p.to_numpy()
    for root, _ in result:
        if abs(np.polyval(full, root)) > tol * polynomial_scale(full, root):
            logger.warning(f"Root {root} has a large residual for degree {p.degree}")
    return result


def roots_with_retry(p: UniPoly, tol: float, attempts: int = 4) -> List[Tuple[complex, int]]:
    """roots_all with perturbed starting circles after NonConvergence"""
    for attempt in range(attempts):
        try:
            return roots_all(p, tol, start_angle=0.4 + 1.3 * attempt)
        except NonConvergence:
            logger.warning(f"Root finder did not converge (attempt {attempt + 1}), perturbing start")
    raise NonConvergence(f"Root finder failed after {attempts} perturbed starts")
