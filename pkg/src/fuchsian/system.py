"""
Fuchsian systems Y' = sum A_i / (x - a_i) Y and scalar equations reduced to companion systems
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from ..numkernel import as_cmatrix

logger = logging.getLogger(__name__)

MAX_DIMENSION = 16
ExactMatrix = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True, eq=False)
class FuchsianSystem:
    """
    Attributes:
        poles: distinct finite poles a_i
        residues: constant n x n residue matrices A_i, one per pole
        exact_residues: the same matrices with rational entries, when the input was rational
    """
    poles: Tuple[complex, ...]
    residues: Tuple[np.ndarray, ...]
    exact_residues: Optional[Tuple[ExactMatrix, ...]] = None

    def __post_init__(self):
        poles = tuple(complex(a) for a in self.poles)
        residues = tuple(as_cmatrix(r) for r in self.residues)
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "residues", residues)
        if not poles:
            raise ValueError("A Fuchsian system needs at least one pole")
        if len(poles) != len(residues):
            raise ValueError(f"{len(poles)} poles but {len(residues)} residue matrices")
        if len(set(poles)) != len(poles):
            raise ValueError("Poles must be pairwise distinct")
        n = residues[0].shape[0]
        if any(r.shape != (n, n) for r in residues):
            raise ValueError("All residues must share one dimension")
        if n > MAX_DIMENSION:
            raise ValueError(f"Dimension {n} exceeds {MAX_DIMENSION}")

    @classmethod
    def from_rational(cls, poles: Sequence, residues: Sequence[Sequence[Sequence]]) -> "FuchsianSystem":
        """Build from rational entries, keeping the exact copy for rank decisions"""
        exact = tuple(tuple(tuple(Fraction(v) for v in row) for row in m) for m in residues)
        numeric = [np.array([[complex(v) for v in row] for row in m]) for m in exact]
        return cls(tuple(poles), tuple(numeric), exact)

    @property
    def dimension(self) -> int:
        return self.residues[0].shape[0]

    @property
    def infinity_residue(self) -> np.ndarray:
        """Residue at infinity, -sum A_i; zero means the system is regular there"""
        return -sum(self.residues)

    @property
    def regular_at_infinity(self) -> bool:
        return bool(np.allclose(self.infinity_residue, 0, atol=1e-12))

    def coefficient_matrix(self, x: complex) -> np.ndarray:
        return sum(r / (x - a) for a, r in zip(self.poles, self.residues))

    def scaled(self, factor: float) -> "FuchsianSystem":
        return FuchsianSystem(self.poles, tuple(factor * r for r in self.residues))

    def conjugated(self, change: np.ndarray) -> "FuchsianSystem":
        """Same system in the basis given by the columns of change"""
        inverse = np.linalg.inv(change)
        return FuchsianSystem(self.poles, tuple(inverse @ r @ change for r in self.residues))


@dataclass(frozen=True)
class ScalarFuchsianEquation:
    """
    y^(n) + sum_j a_j(x) y^(j) = 0 with a_j(x) = sum c / (x - a)^m

    Attributes:
        order: n
        poles: singular points
        terms: (j, pole index, m, c) entries of the partial fractions
    """
    order: int
    poles: Tuple[complex, ...]
    terms: Tuple[Tuple[int, int, int, complex], ...]

    def __post_init__(self):
        object.__setattr__(self, "poles", tuple(complex(a) for a in self.poles))
        object.__setattr__(self, "terms", tuple((int(j), int(i), int(m), complex(c))
                                                for j, i, m, c in self.terms))
        if not 1 <= self.order <= MAX_DIMENSION:
            raise ValueError(f"Equation order must lie in [1, {MAX_DIMENSION}]")
        if not self.poles or len(set(self.poles)) != len(self.poles):
            raise ValueError("Poles must be nonempty and pairwise distinct")
        for j, i, m, _ in self.terms:
            if not 0 <= j < self.order:
                raise ValueError(f"Term index j={j} outside [0, {self.order})")
            if not 0 <= i < len(self.poles):
                raise ValueError(f"Pole index {i} out of range")
            if m < 1:
                raise ValueError("Pole orders must be at least 1")

    @property
    def is_fuchsian(self) -> bool:
        """Pole order of a_j at most n - j everywhere"""
        return all(m <= self.order - j for j, _, m, _ in self.terms)

    def coefficient(self, j: int, x: complex) -> complex:
        return sum(c / (x - self.poles[i]) ** m for jj, i, m, c in self.terms if jj == j)


@dataclass(frozen=True)
class CompanionSystem:
    """First-order system for (y, y', ..., y^(n-1)) of a scalar equation"""
    equation: ScalarFuchsianEquation

    @property
    def dimension(self) -> int:
        return self.equation.order

    @property
    def poles(self) -> Tuple[complex, ...]:
        return self.equation.poles

    def coefficient_matrix(self, x: complex) -> np.ndarray:
        n = self.dimension
        matrix = np.zeros((n, n), dtype=complex)
        matrix[np.arange(n - 1), np.arange(1, n)] = 1
        matrix[n - 1, :] = [-self.equation.coefficient(j, x) for j in range(n)]
        return matrix


def companion_system(equation: ScalarFuchsianEquation) -> CompanionSystem:
    if not equation.is_fuchsian:
        logger.warning("Scalar equation has poles above Fuchsian order; monodromy is still computed")
    return CompanionSystem(equation)
