"""
Numerical continuation of the sheets y_1(x), ..., y_n(x) of f(x, y) = 0 along a path
"""

import logging
from typing import Optional, Sequence

import numpy as np

from .branch import BranchData
from ..numkernel import BiPoly, PathPolyline, roots_with_retry
from ..permgrp import Permutation
from ..utils.errors import MonodromyConsistencyError, SheetCollision, StepUnderflow

logger = logging.getLogger(__name__)

MOVEMENT_FACTOR = 0.3
NEWTON_ITERATIONS = 12
MIN_STEP_FRACTION = 1e-12
MACHINE_EPS = np.finfo(float).eps


class NumericRelation:
    """Float evaluation of f, df/dy and df/dx for many sheets at one x"""

    def __init__(self, f: BiPoly):
        self.degree = f.deg_y
        self.rows = f.numeric_rows()
        self.x_rows = f.diff_x().numeric_rows() if f.deg_x > 0 else []

    def y_coefficients(self, x: complex) -> np.ndarray:
        """Coefficients of f(x, .) highest power of y first"""
        return np.array([np.polyval(row, x) for row in reversed(self.rows)], dtype=complex)

    def _x_coefficients(self, x: complex) -> np.ndarray:
        if not self.x_rows:
            return np.zeros(1, dtype=complex)
        return np.array([np.polyval(row, x) for row in reversed(self.x_rows)], dtype=complex)

    def values(self, x: complex, ys: np.ndarray):
        coeffs = self.y_coefficients(x)
        return np.polyval(coeffs, ys), np.polyval(np.polyder(coeffs), ys)

    def slopes(self, x: complex, ys: np.ndarray) -> np.ndarray:
        """dy/dx = -f_x / f_y on every sheet"""
        _, fy = self.values(x, ys)
        fx = np.polyval(self._x_coefficients(x), ys)
        return -fx / fy


def min_gap(ys: np.ndarray) -> float:
    if len(ys) < 2:
        return np.inf
    diffs = np.abs(ys[:, None] - ys[None, :])
    np.fill_diagonal(diffs, np.inf)
    return float(diffs.min())


def sheets_at(f: BiPoly, x: complex, tol: float) -> np.ndarray:
    """Sheets over x sorted lexicographically by (re, im)"""
    roots = roots_with_retry(f.at_x(complex(x)), tol)
    if any(m > 1 for _, m in roots):
        raise SheetCollision(f"Sheets coincide over x={x}", parameter=0.0)
    return np.array([r for r, _ in roots], dtype=complex)


def _newton(relation: NumericRelation, x: complex, guess: np.ndarray, tol: float):
    ys = guess.copy()
    for _ in range(NEWTON_ITERATIONS):
        value, derivative = relation.values(x, ys)
        if np.any(derivative == 0):
            return ys, False
        step = value / derivative
        ys = ys - step
        if np.all(np.abs(step) <= tol * np.maximum(1.0, np.abs(ys))):
            return ys, True
    return ys, False


def _matched(predicted: np.ndarray, corrected: np.ndarray) -> bool:
    """Every corrected sheet is the nearest one to its own prediction"""
    distances = np.abs(predicted[:, None] - corrected[None, :])
    return bool(np.all(np.argmin(distances, axis=1) == np.arange(len(predicted))))


def continue_sheets(relation: NumericRelation, path: PathPolyline, start: np.ndarray,
                    tol: float) -> np.ndarray:
    """
    Predictor-corrector continuation of all sheets along path

    Args:
        relation: numeric f
        path: polyline avoiding the branch points
        start: sheets over path.start
        tol: Newton tolerance relative to max(1, |y|)

    Returns:
        Sheets over path.end; entry i is the continuation of start[i]
    """
    ys = np.array(start, dtype=complex)
    total = max(path.length, 1e-300)
    min_step = MIN_STEP_FRACTION * total
    travelled = 0.0
    step = total

    for a, b in path.segments():
        length = abs(b - a)
        s = 0.0
        step = min(step * 2, length)
        while s < length:
            h = min(step, length - s)
            x0 = a + (b - a) * (s / length)
            x1 = a + (b - a) * ((s + h) / length)
            gap = min_gap(ys)
            if gap < 100 * MACHINE_EPS * max(1.0, float(np.max(np.abs(ys)))):
                parameter = (travelled + s) / total
                raise SheetCollision(f"Sheets collide at path parameter {parameter:.6f}", parameter=parameter)

            predicted = ys + relation.slopes(x0, ys) * (x1 - x0)
            accepted = False
            if np.max(np.abs(predicted - ys)) < MOVEMENT_FACTOR * gap:
                corrected, converged = _newton(relation, x1, predicted, tol)
                accepted = (converged
                            and np.max(np.abs(corrected - predicted)) < MOVEMENT_FACTOR * gap
                            and _matched(predicted, corrected))
            if not accepted:
                step = h / 2
                if step < min_step:
                    raise StepUnderflow(f"Continuation step underflow near x={x0}", position=x0)
                continue

            ys = corrected
            s += h
            step = min(2 * h, length)
        travelled += length
    return ys


def permutation_from_sheets(start: np.ndarray, end: np.ndarray) -> Permutation:
    """Map sheet i to the index of the start sheet nearest to its continuation"""
    gap = min_gap(start) if len(start) > 1 else 1.0
    images = []
    for y in end:
        distances = np.abs(start - y)
        j = int(np.argmin(distances))
        if distances[j] > 0.25 * gap:
            raise MonodromyConsistencyError(f"Continued sheet {y} does not return to the fiber")
        images.append(j)
    if len(set(images)) != len(images):
        raise MonodromyConsistencyError(f"Continuation does not permute the sheets: {images}")
    return Permutation(tuple(images))


def track_loop(f: BiPoly, branch: BranchData, loop: PathPolyline, tol: float,
               relation: Optional[NumericRelation] = None,
               base_sheets: Optional[Sequence[complex]] = None) -> Permutation:
    """
    Sheet permutation induced by continuing all sheets once around a closed loop

    Sheets are indexed by the lexicographic order of the roots of f(base_point, y).
    """
    if not loop.is_closed or abs(loop.start - branch.base_point) > 1e-12 * max(1.0, abs(branch.base_point)):
        raise ValueError("track_loop needs a loop closed at the base point")
    relation = relation or NumericRelation(f)
    if base_sheets is None:
        base_sheets = sheets_at(f, branch.base_point, tol)
    start = np.array(base_sheets, dtype=complex)
    end = continue_sheets(relation, loop, start, tol)
    permutation = permutation_from_sheets(start, end)
    logger.debug(f"Loop of length {loop.length:.4g}: {permutation}")
    return permutation
