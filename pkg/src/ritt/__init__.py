# Polynomial decomposition and invertibility by radicals
from .linear import LinearChange
from .recognize import recognize_chebyshev, recognize_power
from .decompose import ComponentTag, Decomposition, TagKind, decompose, right_component, tag_component
from .inverse import (
    certify_primitivity, check_solvable_primitive_shape, classify_inverse, inverse_monodromy,
    invertible_by_k_radicals, invertible_by_radicals,
)

__all__ = [
    "LinearChange", "recognize_chebyshev", "recognize_power",
    "ComponentTag", "Decomposition", "TagKind", "decompose", "right_component", "tag_component",
    "certify_primitivity", "check_solvable_primitive_shape", "classify_inverse", "inverse_monodromy",
    "invertible_by_k_radicals", "invertible_by_radicals",
]
