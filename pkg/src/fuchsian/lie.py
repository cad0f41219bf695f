"""
Lie closure of a set of matrices, its derived series, and simultaneous triangularization
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..numkernel import as_cmatrix, eigen, null_space
from ..numkernel.linalg import matrix_scale, orthonormal_completion
from ..utils.errors import RankThresholdAmbiguous, WitnessVerificationFailed

logger = logging.getLogger(__name__)

MAX_DIMENSION = 16
AMBIGUITY_FACTOR = 10.0


@dataclass
class LieClosure:
    """
    Attributes:
        basis: matrices spanning the Lie algebra generated by the inputs
        derived_dims: dimensions of L, [L, L], ... ending at 0 or at the first repeat
        exact: whether ranks were decided in rational arithmetic
    """
    basis: List[np.ndarray]
    derived_dims: List[int]
    exact: bool = False

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_solvable(self) -> bool:
        return self.derived_dims[-1] == 0


@dataclass
class TriangularizationResult:
    triangularizable: bool
    closure: LieClosure
    witness: Optional[np.ndarray] = None
    residual: Optional[float] = None
    notes: List[str] = field(default_factory=list)


def bracket(a, b):
    return a @ b - b @ a


class _NumericSpan:
    """Orthonormal basis of a span of matrices with a three-way rank decision"""

    def __init__(self, n: int, threshold: float):
        self.n = n
        self.threshold = threshold
        self.vectors: List[np.ndarray] = []

    def __len__(self) -> int:
        return len(self.vectors)

    def matrices(self) -> List[np.ndarray]:
        return [v.reshape(self.n, self.n) for v in self.vectors]

    def add(self, matrix: np.ndarray) -> Optional[np.ndarray]:
        """Adjoin matrix; returns the new unit basis matrix, or None when already in the span"""
        residual = matrix.ravel().astype(complex)
        # two passes of Gram-Schmidt
        for _ in range(2):
            for q in self.vectors:
                residual = residual - np.vdot(q, residual) * q
        size = float(np.linalg.norm(residual))
        if size <= self.threshold / AMBIGUITY_FACTOR:
            return None
        if size <= self.threshold * AMBIGUITY_FACTOR:
            raise RankThresholdAmbiguous(
                f"Residual {size:.3g} too close to rank threshold {self.threshold:.3g}",
                singular_value=size, threshold=self.threshold)
        unit = residual / size
        self.vectors.append(unit)
        return unit.reshape(self.n, self.n)


def _unit(matrix: np.ndarray) -> np.ndarray:
    return matrix / np.linalg.norm(matrix)


def _numeric_closure(matrices: Sequence[np.ndarray], tol: float) -> List[np.ndarray]:
    n = matrices[0].shape[0]
    span = _NumericSpan(n, tol)
    queue = []
    for m in matrices:
        if np.linalg.norm(m) > tol / AMBIGUITY_FACTOR:
            added = span.add(_unit(m))
            if added is not None:
                queue.append(added)
    processed: List[np.ndarray] = []
    while queue:
        current = queue.pop(0)
        for other in processed + [current]:
            added = span.add(bracket(current, other))
            if added is not None:
                queue.append(added)
        processed.append(current)
    return span.matrices()


def _numeric_derived(basis: List[np.ndarray], tol: float) -> List[np.ndarray]:
    if not basis:
        return []
    span = _NumericSpan(basis[0].shape[0], tol)
    for a, b in itertools.combinations(basis, 2):
        span.add(bracket(a, b))
    return span.matrices()


def _derived_dims(basis, derive) -> List[int]:
    dims = [len(basis)]
    current = basis
    while dims[-1] > 0:
        current = derive(current)
        dims.append(len(current))
        if dims[-1] == dims[-2]:
            break
    return dims


# Exact rational arithmetic on flattened matrices

Vector = List[Fraction]


def _exact_mul(a: Vector, b: Vector, n: int) -> Vector:
    return [sum(a[i * n + k] * b[k * n + j] for k in range(n)) for i in range(n) for j in range(n)]


def _exact_bracket(a: Vector, b: Vector, n: int) -> Vector:
    return [x - y for x, y in zip(_exact_mul(a, b, n), _exact_mul(b, a, n))]


class _ExactSpan:
    """Row-echelon basis over the rationals"""

    def __init__(self):
        self.rows: List[Tuple[int, Vector]] = []

    def __len__(self) -> int:
        return len(self.rows)

    def add(self, vector: Vector) -> Optional[Vector]:
        v = list(vector)
        for pivot, row in self.rows:
            if v[pivot] != 0:
                factor = v[pivot]
                v = [x - factor * y for x, y in zip(v, row)]
        pivot = next((i for i, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return None
        lead = v[pivot]
        v = [x / lead for x in v]
        # keep rows reduced at the new pivot
        self.rows = [(p, [x - r[pivot] * y for x, y in zip(r, v)]) for p, r in self.rows]
        self.rows.append((pivot, v))
        return v

    def vectors(self) -> List[Vector]:
        return [row for _, row in self.rows]


def exact_lie_closure(matrices: Sequence[Sequence[Sequence[Fraction]]]) -> LieClosure:
    """Lie closure and derived series with every rank decided exactly"""
    n = len(matrices[0])
    span = _ExactSpan()
    queue = []
    for m in matrices:
        added = span.add([Fraction(x) for row in m for x in row])
        if added is not None:
            queue.append(added)
    processed: List[Vector] = []
    while queue:
        current = queue.pop(0)
        for other in processed + [current]:
            added = span.add(_exact_bracket(current, other, n))
            if added is not None:
                queue.append(added)
        processed.append(current)
    # echelon rows span the same algebra
    basis = span.vectors()

    def derive(vectors):
        derived = _ExactSpan()
        for a, b in itertools.combinations(vectors, 2):
            derived.add(_exact_bracket(a, b, n))
        return derived.vectors()

    dims = _derived_dims(basis, derive)
    numeric = [np.array([complex(x) for x in v]).reshape(n, n) for v in basis]
    return LieClosure(numeric, dims, exact=True)


def lie_closure(residues: Sequence, tol: float = 1e-9,
                exact: Optional[Sequence[Sequence[Sequence[Fraction]]]] = None) -> LieClosure:
    """
    Lie algebra generated by residues, with its derived series

    Args:
        residues: square matrices of one dimension n <= 16
        tol: rank threshold on unit-normalized matrices
        exact: rational copies of residues; used when a numeric rank decision is ambiguous

    Raises:
        RankThresholdAmbiguous: a residual sits within a factor 10 of tol and no exact copy exists
    """
    matrices = [as_cmatrix(r) for r in residues]
    if not matrices:
        raise ValueError("lie_closure needs at least one matrix")
    n = matrices[0].shape[0]
    if n > MAX_DIMENSION or any(m.shape != (n, n) for m in matrices):
        raise ValueError(f"Residues must share one dimension <= {MAX_DIMENSION}")
    try:
        basis = _numeric_closure(matrices, tol)
        dims = _derived_dims(basis, lambda b: _numeric_derived(b, tol))
    except RankThresholdAmbiguous as e:
        if exact is None:
            raise
        logger.warning(f"{e}; switching to exact rational elimination")
        return exact_lie_closure(exact)
    logger.debug(f"Lie closure of dimension {len(basis)}, derived dimensions {dims}")
    return LieClosure(basis, dims)


# Common flags

def _common_eigenvector(matrices: Sequence[np.ndarray], tol: float) -> Optional[np.ndarray]:
    """Unit vector that is an eigenvector of every matrix, by depth-first eigenvalue choice"""
    n = matrices[0].shape[0]
    threshold = np.sqrt(tol)

    def search(index: int, subspace: np.ndarray) -> Optional[np.ndarray]:
        if index == len(matrices):
            return subspace[:, 0]
        a = matrices[index]
        scale = matrix_scale(a)
        for value, _ in eigen(a, tol):
            restricted = (a - value * np.eye(n)) @ subspace
            kernel = null_space(restricted, threshold * scale)
            if kernel.shape[1] == 0:
                continue
            found = search(index + 1, subspace @ kernel)
            if found is not None:
                return found
        return None

    return search(0, np.eye(n, dtype=complex))


def _flag(matrices: List[np.ndarray], tol: float) -> Optional[np.ndarray]:
    n = matrices[0].shape[0]
    if n == 1:
        return np.eye(1, dtype=complex)
    vector = _common_eigenvector(matrices, tol)
    if vector is None:
        return None
    unitary = orthonormal_completion(vector)
    blocks = [(unitary.conj().T @ m @ unitary)[1:, 1:] for m in matrices]
    inner = _flag(blocks, tol)
    if inner is None:
        return None
    extended = np.eye(n, dtype=complex)
    extended[1:, 1:] = inner
    return unitary @ extended


def lower_residual(matrices: Sequence[np.ndarray], basis: np.ndarray) -> float:
    """Largest strictly-lower mass of the conjugated matrices, relative to their norms"""
    inverse = np.linalg.inv(basis)
    worst = 0.0
    for m in matrices:
        conjugated = inverse @ m @ basis
        worst = max(worst, float(np.linalg.norm(np.tril(conjugated, -1))) / matrix_scale(m))
    return worst


def triangularize_matrices(matrices: Sequence, tol: float = 1e-9) -> Optional[np.ndarray]:
    """
    Unitary basis in which every matrix is upper triangular, or None

    Works for any family; the flag is verified to 100*tol relative mass.
    """
    mats = [as_cmatrix(m) for m in matrices]
    flag = _flag(mats, tol)
    if flag is None:
        return None
    residual = lower_residual(mats, flag)
    if residual > 100 * tol:
        logger.debug(f"Candidate flag rejected with lower residual {residual:.3g}")
        return None
    return flag


def is_simultaneously_triangularizable(residues: Sequence, tol: float = 1e-9,
                                       exact=None) -> TriangularizationResult:
    """
    Decide simultaneous triangularizability through solvability of the Lie closure

    When the closure is solvable a triangularizing basis is built from common
    eigenvectors and checked.

    Raises:
        WitnessVerificationFailed: solvable closure but the constructed flag misses 100*tol
    """
    closure = lie_closure(residues, tol, exact)
    if not closure.is_solvable:
        return TriangularizationResult(False, closure)
    mats = [as_cmatrix(r) for r in residues]
    flag = _flag(mats, tol)
    residual = lower_residual(mats, flag) if flag is not None else float("inf")
    if residual > 100 * tol:
        raise WitnessVerificationFailed(
            f"Solvable Lie closure (derived dims {closure.derived_dims}) but flag residual {residual:.3g}",
            derived_dims=closure.derived_dims, residual=residual)
    return TriangularizationResult(True, closure, flag, residual)
