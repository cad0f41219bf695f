"""
Polyline paths and transfer matrices of linear ODE systems Y' = A(x) Y along them
"""

import logging
from dataclasses import dataclass
from typing import Protocol, Sequence, Tuple, runtime_checkable

import numpy as np
from scipy.integrate import solve_ivp

from ..utils.errors import PathTooClose, StepUnderflow

logger = logging.getLogger(__name__)

TOLERANCE_FLOOR = 1e-13


@dataclass(frozen=True)
class PathPolyline:
    """Piecewise-linear path in the complex plane (a single vertex is the constant path)"""
    vertices: Tuple[complex, ...]

    def __post_init__(self):
        vertices = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if not vertices:
            raise ValueError("A path needs at least one vertex")
        for a, b in zip(vertices, vertices[1:]):
            if a == b:
                raise ValueError(f"Consecutive path vertices coincide at {a}")

    @classmethod
    def constant(cls, point: complex) -> "PathPolyline":
        """Zero-length path; its transfer matrix is the identity"""
        return cls((point,))

    @property
    def start(self) -> complex:
        return self.vertices[0]

    @property
    def end(self) -> complex:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def length(self) -> float:
        return float(sum(abs(b - a) for a, b in zip(self.vertices, self.vertices[1:])))

    def segments(self):
        return zip(self.vertices, self.vertices[1:])

    def reversed(self) -> "PathPolyline":
        return PathPolyline(tuple(reversed(self.vertices)))

    def then(self, other: "PathPolyline") -> "PathPolyline":
        """Concatenation; other must start where self ends"""
        if abs(other.start - self.end) > 1e-14 * max(1.0, abs(self.end)):
            raise ValueError("Paths do not connect")
        return PathPolyline(self.vertices + other.vertices[1:])

    def distance_to(self, point: complex) -> float:
        """Euclidean distance from point to the path"""
        best = abs(self.vertices[0] - point)
        for a, b in self.segments():
            d = b - a
            t = min(1.0, max(0.0, ((point - a) * d.conjugate()).real / abs(d) ** 2))
            best = min(best, abs(a + t * d - point))
        return float(best)


@runtime_checkable
class LinearSystem(Protocol):
    """Linear system Y' = A(x) Y with finitely many poles"""

    @property
    def dimension(self) -> int: ...

    @property
    def poles(self) -> Sequence[complex]: ...

    def coefficient_matrix(self, x: complex) -> np.ndarray: ...


def min_pole_gap(poles: Sequence[complex]) -> float:
    if len(poles) < 2:
        return 1.0
    return float(min(abs(a - b) for i, a in enumerate(poles) for b in poles[i + 1:]))


def integrate_linear_ode(system: LinearSystem, path: PathPolyline, tol: float,
                         start: np.ndarray = None) -> np.ndarray:
    """
    Transfer matrix of Y' = A(x) Y along path

    Args:
        system: coefficient provider
        path: polyline staying at least min_pole_gap/10 from every pole
        tol: local error per unit arclength (mixed absolute/relative, floor 1e-13)
        start: initial value Y(path.start), identity by default

    Returns:
        T with Y(path.end) = T when Y(path.start) = start
    """
    n = system.dimension
    clearance = min_pole_gap(system.poles) / 10
    for pole in system.poles:
        distance = path.distance_to(pole)
        if distance < clearance:
            raise PathTooClose(f"Path passes within {distance:.3g} of pole {pole} (need {clearance:.3g})",
                               pole=pole, distance=distance)

    current = np.eye(n, dtype=complex) if start is None else np.array(start, dtype=complex)
    for a, b in path.segments():
        delta = b - a
        length = abs(delta)
        local_tol = max(tol * min(1.0, length), TOLERANCE_FLOOR)

        def rhs(t, flat, a=a, delta=delta):
            y = flat.reshape(n, n)
            return (system.coefficient_matrix(a + t * delta) @ y * delta).ravel()

        solution = solve_ivp(rhs, (0.0, 1.0), current.ravel(), method="DOP853",
                             rtol=local_tol, atol=local_tol)
        if solution.status < 0:
            position = a + solution.t[-1] * delta
            raise StepUnderflow(f"Integrator stalled near x={position}: {solution.message}",
                                position=position)
        current = solution.y[:, -1].reshape(n, n)
    return current
