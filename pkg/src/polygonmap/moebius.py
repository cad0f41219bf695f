"""
Fractional linear and anti-linear maps of the Riemann sphere
"""

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

INFINITY = complex(math.inf, 0.0)


def is_infinity(z: complex) -> bool:
    return cmath.isinf(z)


@dataclass(frozen=True, eq=False)
class MoebiusLike:
    """
    z -> (a w + b) / (c w + d) with w = conj(z) when conjugating, else w = z

    The matrix is normalized to determinant 1 on construction.
    """
    matrix: np.ndarray
    conjugating: bool = False

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex).reshape(2, 2)
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) == 0:
            raise ValueError("Degenerate fractional linear map")
        m = m / cmath.sqrt(det)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "MoebiusLike":
        return cls(np.eye(2))

    @classmethod
    def from_coefficients(cls, a, b, c, d) -> "MoebiusLike":
        return cls(np.array([[a, b], [c, d]]))

    def __call__(self, z: complex) -> complex:
        (a, b), (c, d) = self.matrix
        if is_infinity(z):
            return INFINITY if c == 0 else a / c
        w = z.conjugate() if self.conjugating else z
        denominator = c * w + d
        if denominator == 0:
            return INFINITY
        return (a * w + b) / denominator

    def compose(self, inner: "MoebiusLike") -> "MoebiusLike":
        """self o inner"""
        right = inner.matrix.conj() if self.conjugating else inner.matrix
        return MoebiusLike(self.matrix @ right, self.conjugating != inner.conjugating)

    def inverse(self) -> "MoebiusLike":
        (a, b), (c, d) = self.matrix
        inverse = np.array([[d, -b], [-c, a]])
        # M o conj has inverse conj(M^-1) o conj
        return MoebiusLike(inverse.conj() if self.conjugating else inverse, self.conjugating)

    def unit(self) -> np.ndarray:
        """Matrix scaled to unit Frobenius norm"""
        return self.matrix / np.linalg.norm(self.matrix)

    def fixed_points(self, tol: float) -> List[complex]:
        """Fixed points of a holomorphic map: roots of c z^2 + (d - a) z - b"""
        if self.conjugating:
            raise ValueError("fixed_points is defined for holomorphic maps")
        (a, b), (c, d) = self.unit()
        if abs(c) <= tol:
            if abs(d - a) <= tol:
                return [INFINITY]
            return [b / (a - d), INFINITY]
        disc = cmath.sqrt((d - a) ** 2 + 4 * b * c)
        roots = [(a - d + disc) / (2 * c), (a - d - disc) / (2 * c)]
        if abs(disc) <= math.sqrt(tol):
            return [roots[0]]
        return roots

    def projective_distance(self, other: "MoebiusLike") -> float:
        if self.conjugating != other.conjugating:
            return math.inf
        return float(projective_distances(other.unit().ravel()[None, :], self.unit().ravel())[0])


def projective_distances(stack: np.ndarray, vector: np.ndarray) -> np.ndarray:
    """min over |omega| = 1 of ||vector - omega row|| for each row of stack (unit rows)"""
    inner = stack.conj() @ vector
    magnitude = np.abs(inner)
    omega = np.ones_like(inner)
    nonzero = magnitude > 0
    omega[nonzero] = inner[nonzero] / magnitude[nonzero]
    return np.linalg.norm(vector[None, :] - omega[:, None] * stack, axis=1)


def element_order(element: MoebiusLike, limit: int, tol: float) -> Optional[int]:
    """Smallest k <= limit with element^k projectively the identity"""
    identity = MoebiusLike.identity()
    power = element
    for k in range(1, limit + 1):
        if power.projective_distance(identity) <= tol:
            return k
        power = element.compose(power)
    return None


def moebius_matrix_for_pair(p: complex, q: complex) -> MoebiusLike:
    """Holomorphic map sending p to 0 and q to infinity"""
    if is_infinity(q):
        return MoebiusLike.from_coefficients(1, -p, 0, 1)
    if is_infinity(p):
        return MoebiusLike.from_coefficients(0, 1, 1, -q)
    return MoebiusLike.from_coefficients(1, -p, 1, -q)

