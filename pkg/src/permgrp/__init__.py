# Permutation groups: stabilizer chains, blocks, composition factors
from .permutation import Permutation
from .group import PermutationGroup
from .composition import (
    CyclicOfPrime, NonabelianSimple, FactorSignature, MonodromyPair,
    composition_factor_signature, is_k_solvable, is_almost_solvable_finite,
    monodromy_pair, riemann_hurwitz_genus,
)

__all__ = [
    "Permutation", "PermutationGroup",
    "CyclicOfPrime", "NonabelianSimple", "FactorSignature", "MonodromyPair",
    "composition_factor_signature", "is_k_solvable", "is_almost_solvable_finite",
    "monodromy_pair", "riemann_hurwitz_genus",
]
