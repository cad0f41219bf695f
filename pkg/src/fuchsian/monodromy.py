"""
Monodromy matrices of linear systems along the loop skeleton, and the generic-solution probe
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..algmono import LoopSkeleton, build_skeleton
from ..numkernel import LinearSystem, integrate_linear_ode

logger = logging.getLogger(__name__)


@dataclass
class MonodromyMatrices:
    """
    Attributes:
        skeleton: loops around the poles (skeleton.punctures gives the pole of each matrix)
        matrices: transfer matrix of each loop
        infinity_matrix: inverse of the ordered product M_k ... M_1
        product_residual: ||M_k ... M_1 - I||, small when the system is regular at infinity
        determinant_residuals: |det M_i - exp(2 pi i tr A_i)| per loop, for residue systems
    """
    skeleton: LoopSkeleton
    matrices: List[np.ndarray]
    infinity_matrix: np.ndarray
    product_residual: float
    determinant_residuals: Optional[List[float]] = None

    @property
    def dimension(self) -> int:
        return self.infinity_matrix.shape[0]

    def ordered_product(self) -> np.ndarray:
        product = np.eye(self.dimension, dtype=complex)
        for m in self.matrices:
            product = m @ product
        return product

    def matrix_for(self, pole: complex) -> np.ndarray:
        index = int(np.argmin([abs(p - pole) for p in self.skeleton.punctures]))
        return self.matrices[index]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "base_point": self.skeleton.base_point,
            "poles": list(self.skeleton.punctures),
            "matrices": [m.tolist() for m in self.matrices],
            "infinity_matrix": self.infinity_matrix.tolist(),
            "product_residual": self.product_residual,
            "determinant_residuals": self.determinant_residuals,
        }


def fuchsian_monodromy(system: LinearSystem, tol: float = 1e-10, threads: int = 1) -> MonodromyMatrices:
    """
    Transfer matrices of Y' = A(x) Y around each pole

    Loops come from the same skeleton builder as algebraic monodromy, so matrix i belongs to
    skeleton.punctures[i] and M_k ... M_1 times infinity_matrix is the identity.
    """
    skeleton = build_skeleton(system.poles, tol)
    n = system.dimension
    logger.info(f"Integrating {len(skeleton)} loop(s) of a dimension-{n} system")

    def run(loop):
        return integrate_linear_ode(system, loop, tol)

    if threads > 1 and len(skeleton) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            matrices = list(pool.map(run, skeleton.loops))
    else:
        matrices = [run(loop) for loop in skeleton.loops]

    product = np.eye(n, dtype=complex)
    for m in matrices:
        product = m @ product
    infinity = np.linalg.inv(product)
    residual = float(np.linalg.norm(product - np.eye(n)))

    determinant_residuals = None
    residues = getattr(system, "residues", None)
    if residues is not None:
        by_pole = dict(zip(system.poles, residues))
        determinant_residuals = [
            float(abs(np.linalg.det(m) - np.exp(2j * np.pi * np.trace(by_pole[p]))))
            for p, m in zip(skeleton.punctures, matrices)
        ]
    return MonodromyMatrices(skeleton, matrices, infinity, residual, determinant_residuals)


@dataclass
class ProbeReport:
    trials: int
    skipped: bool = False
    note: str = ""
    min_displacement: Optional[float] = None
    failures: List[List[complex]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "skipped": self.skipped,
            "note": self.note,
            "min_displacement": self.min_displacement,
            "failures": len(self.failures),
        }


def generic_stabilizer_probe(monodromy: MonodromyMatrices, trials: int = 100, seed: int = 42,
                             tol: float = 1e-10, threshold: Optional[float] = None) -> ProbeReport:
    """
    Check that random solutions are moved by every non-identity monodromy generator

    Args:
        monodromy: computed monodromy matrices
        trials: number of random unit vectors
        seed: numpy generator seed
        tol: integration tolerance
        threshold: displacement below which a vector counts as fixed, 10*tol by default

    Returns:
        ProbeReport listing the vectors that some generator fixes
    """
    threshold = 10 * tol if threshold is None else threshold
    n = monodromy.dimension
    moving = [m for m in monodromy.matrices if np.linalg.norm(m - np.eye(n)) > threshold]
    if not moving:
        return ProbeReport(trials, skipped=True, note="all monodromy generators are the identity")

    rng = np.random.default_rng(seed)
    report = ProbeReport(trials)
    smallest = np.inf
    for _ in range(trials):
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        v /= np.linalg.norm(v)
        displacement = min(float(np.linalg.norm(m @ v - v)) for m in moving)
        smallest = min(smallest, displacement)
        if displacement <= threshold:
            report.failures.append([complex(c) for c in v])
    report.min_displacement = float(smallest)
    if report.failures:
        logger.warning(f"{len(report.failures)} of {trials} probe vectors are fixed by a generator")
    return report
