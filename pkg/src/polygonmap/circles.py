"""
Generalized circles A|z|^2 + 2 Re(conj(B) z) + C = 0 (lines when A = 0)
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from .moebius import INFINITY, MoebiusLike, is_infinity
from ..utils.errors import PoleOfInversion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenCircle:
    A: float
    B: complex
    C: float

    def __post_init__(self):
        object.__setattr__(self, "A", float(self.A))
        object.__setattr__(self, "B", complex(self.B))
        object.__setattr__(self, "C", float(self.C))
        if self.delta <= 0:
            raise ValueError(f"Not a real circle or line: |B|^2 - AC = {self.delta}")

    @classmethod
    def from_center_radius(cls, center: complex, radius: float) -> "GenCircle":
        if radius <= 0:
            raise ValueError("Radius must be positive")
        return cls(1.0, -complex(center), abs(center) ** 2 - radius ** 2)

    @classmethod
    def through_points(cls, p1: complex, p2: complex) -> "GenCircle":
        """Line through two distinct points"""
        if p1 == p2:
            raise ValueError("A line needs two distinct points")
        normal = 1j * (p2 - p1)
        return cls(0.0, normal, -2 * (normal.conjugate() * p1).real)

    @property
    def delta(self) -> float:
        return abs(self.B) ** 2 - self.A * self.C

    @property
    def is_line(self) -> bool:
        return self.A == 0

    @property
    def center(self) -> complex:
        return INFINITY if self.is_line else -self.B / self.A

    @property
    def radius(self) -> float:
        return math.inf if self.is_line else math.sqrt(self.delta) / abs(self.A)

    def hermitian(self) -> np.ndarray:
        return np.array([[self.A, self.B], [self.B.conjugate(), self.C]], dtype=complex)

    @classmethod
    def from_hermitian(cls, h: np.ndarray, tol: float = 1e-12) -> "GenCircle":
        scale = np.max(np.abs(h))
        h = h / scale
        a = float(h[0, 0].real)
        return cls(0.0 if abs(a) <= tol else a, complex(h[0, 1]), float(h[1, 1].real))

    def distance(self, z: complex) -> float:
        """Euclidean distance from z to the curve (0 for infinity on a line)"""
        if is_infinity(z):
            return 0.0 if self.is_line else math.inf
        if self.is_line:
            return abs(2 * (self.B.conjugate() * z).real + self.C) / (2 * abs(self.B))
        return abs(abs(z - self.center) - self.radius)

    def contains(self, z: complex, tol: float) -> bool:
        if is_infinity(z):
            return self.is_line
        return self.distance(z) <= tol * max(1.0, abs(z), 0.0 if self.is_line else self.radius)

    def reflection(self) -> MoebiusLike:
        """Inversion as the anti-map z -> (-B conj(z) - C) / (A conj(z) + conj(B))"""
        return MoebiusLike(np.array([[-self.B, -self.C], [self.A, self.B.conjugate()]]), conjugating=True)

    def intersections(self, other: "GenCircle", tol: float) -> List[complex]:
        """Finite common points; infinity is not included"""
        if self.is_line and other.is_line:
            return _line_line(self, other, tol)
        if self.is_line:
            return _circle_line(other, self, tol)
        if other.is_line:
            return _circle_line(self, other, tol)
        return _circle_circle(self, other, tol)

    def same_as(self, other: "GenCircle", tol: float) -> bool:
        a = np.array([self.A, self.B.real, self.B.imag, self.C])
        b = np.array([other.A, other.B.real, other.B.imag, other.C])
        a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
        return min(np.linalg.norm(a - b), np.linalg.norm(a + b)) <= tol


def reflect(circle: GenCircle, z: complex) -> complex:
    """Inversion in a circle or mirror reflection in a line; infinity maps to the center"""
    if not circle.is_line and not is_infinity(z) and z == circle.center:
        raise PoleOfInversion(f"{z} is the center of the circle of inversion")
    if is_infinity(z):
        return circle.center
    return circle.reflection()(z)


def circle_angle(first: GenCircle, second: GenCircle) -> float:
    """Angle in [0, pi] between two generalized circles; 0 or pi for tangency"""
    numerator = (2 * (first.B * second.B.conjugate()).real
                 - first.A * second.C - second.A * first.C)
    cosine = numerator / (2 * math.sqrt(first.delta * second.delta))
    return math.acos(max(-1.0, min(1.0, cosine)))


def moebius_image(circle: GenCircle, transform: MoebiusLike) -> GenCircle:
    """Image of a circle under a holomorphic map: H' = S^H H S with S the inverse matrix"""
    if transform.conjugating:
        raise ValueError("moebius_image expects a holomorphic map")
    inverse = np.linalg.inv(transform.matrix)
    return GenCircle.from_hermitian(inverse.conj().T @ circle.hermitian() @ inverse)


def _line_coefficients(line: GenCircle):
    # b1 u + b2 v = -C / 2
    return line.B.real, line.B.imag, -line.C / 2


def _line_line(first: GenCircle, second: GenCircle, tol: float) -> List[complex]:
    a1, b1, c1 = _line_coefficients(first)
    a2, b2, c2 = _line_coefficients(second)
    det = a1 * b2 - a2 * b1
    if abs(det) <= tol * math.hypot(a1, b1) * math.hypot(a2, b2):
        return []
    return [complex((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)]


def _circle_line(circle: GenCircle, line: GenCircle, tol: float) -> List[complex]:
    a, b, c = _line_coefficients(line)
    norm = math.hypot(a, b)
    normal = complex(a, b) / norm
    center = circle.center
    offset = (c - (a * center.real + b * center.imag)) / norm
    foot = center + offset * normal
    half_chord_sq = circle.radius ** 2 - offset ** 2
    return _chord(foot, 1j * normal, half_chord_sq, circle.radius, tol)


def _circle_circle(first: GenCircle, second: GenCircle, tol: float) -> List[complex]:
    c1, c2 = first.center, second.center
    r1, r2 = first.radius, second.radius
    d = abs(c2 - c1)
    if d <= tol * max(1.0, r1):
        return []
    along = (r1 ** 2 - r2 ** 2 + d ** 2) / (2 * d)
    direction = (c2 - c1) / d
    return _chord(c1 + along * direction, 1j * direction, r1 ** 2 - along ** 2, r1, tol)


def _chord(foot: complex, direction: complex, half_sq: float, radius: float, tol: float) -> List[complex]:
    scale = max(1.0, radius) ** 2
    if half_sq < -tol * scale:
        return []
    if half_sq <= tol * scale:
        return [foot]
    half = math.sqrt(half_sq)
    return [foot + half * direction, foot - half * direction]
