# Numeric substrate: exact polynomials, roots, resultants, linear algebra, linear ODE transport
from .polynomials import BiPoly, UniPoly, chebyshev, to_scalar
from .roots import roots_all, roots_with_retry, squarefree_decomposition, cluster_roots
from .resultant import resultant_in_y, discriminant_in_y
from .linalg import eigen, null_space, matrix_exp, as_cmatrix
from .ode import LinearSystem, PathPolyline, integrate_linear_ode, min_pole_gap

__all__ = [
    "BiPoly", "UniPoly", "chebyshev", "to_scalar",
    "roots_all", "roots_with_retry", "squarefree_decomposition", "cluster_roots",
    "resultant_in_y", "discriminant_in_y",
    "eigen", "null_space", "matrix_exp", "as_cmatrix",
    "LinearSystem", "PathPolyline", "integrate_linear_ode", "min_pole_gap",
]
