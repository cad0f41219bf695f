"""
Small dense complex linear algebra on top of scipy.linalg
"""

import logging
from typing import List, Tuple

import numpy as np
import scipy.linalg

from .roots import cluster_roots
from ..utils.errors import NonConvergence

logger = logging.getLogger(__name__)

MAX_EIGEN_DIMENSION = 64


def as_cmatrix(entries) -> np.ndarray:
    """Square, finite complex matrix"""
    matrix = np.array(entries, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ValueError("Matrix has non-finite entries")
    return matrix


def matrix_scale(matrix: np.ndarray) -> float:
    return max(1.0, float(np.linalg.norm(matrix, 2)))


def null_space(matrix: np.ndarray, threshold: float) -> np.ndarray:
    """Orthonormal basis (columns) of the numerical kernel: singular values <= threshold"""
    _, singular, vh = scipy.linalg.svd(matrix)
    rank = int(np.sum(singular > threshold))
    return vh[rank:].conj().T


def orthonormal_completion(vector: np.ndarray) -> np.ndarray:
    """Unitary matrix whose first column is vector / |vector|"""
    n = vector.shape[0]
    seed = np.eye(n, dtype=complex)
    seed[:, 0] = vector / np.linalg.norm(vector)
    q, r = scipy.linalg.qr(seed)
    # undo the phase QR puts on the first column
    q[:, 0] *= r[0, 0] / abs(r[0, 0])
    return q


def matrix_exp(matrix: np.ndarray) -> np.ndarray:
    return scipy.linalg.expm(matrix)


def eigen(matrix, tol: float) -> List[Tuple[complex, np.ndarray]]:
    """
    Eigenvalues grouped at radius 10*tol with orthonormal eigenspace bases

    Returns:
        List of (eigenvalue, basis) where basis has one column per eigenvector
    """
    m = as_cmatrix(matrix)
    n = m.shape[0]
    if n > MAX_EIGEN_DIMENSION:
        raise ValueError(f"eigen supports n <= {MAX_EIGEN_DIMENSION}, got {n}")
    try:
        values = scipy.linalg.eigvals(m)
    except np.linalg.LinAlgError as e:
        raise NonConvergence(f"Eigenvalue iteration failed: {e}")

    scale = matrix_scale(m)
    groups = cluster_roots([(complex(v), 1) for v in values], 10 * tol * scale)
    result = []
    for value, _ in groups:
        basis = null_space(m - value * np.eye(n), 100 * tol * scale)
        result.append((value, basis))
    return result
