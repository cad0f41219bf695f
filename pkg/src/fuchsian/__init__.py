# Fuchsian systems: monodromy matrices, Lie closure, triangularization, verdicts
from .system import CompanionSystem, FuchsianSystem, ScalarFuchsianEquation, companion_system
from .lie import (
    LieClosure, TriangularizationResult, exact_lie_closure, is_simultaneously_triangularizable,
    lie_closure, triangularize_matrices,
)
from .monodromy import MonodromyMatrices, ProbeReport, fuchsian_monodromy, generic_stabilizer_probe
from .classify import classify_fuchsian, classify_scalar_equation

__all__ = [
    "CompanionSystem", "FuchsianSystem", "ScalarFuchsianEquation", "companion_system",
    "LieClosure", "TriangularizationResult", "exact_lie_closure", "is_simultaneously_triangularizable",
    "lie_closure", "triangularize_matrices",
    "MonodromyMatrices", "ProbeReport", "fuchsian_monodromy", "generic_stabilizer_probe",
    "classify_fuchsian", "classify_scalar_equation",
]
