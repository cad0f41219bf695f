"""
Representability verdicts for Fuchsian systems and scalar equations
"""

import logging
from typing import List, Optional

from .lie import is_simultaneously_triangularizable, lie_closure, triangularize_matrices
from .monodromy import MonodromyMatrices
from .system import FuchsianSystem
from ..algmono import Verdict, VerdictClass, VerdictStatus
from ..utils.errors import WitnessVerificationFailed

logger = logging.getLogger(__name__)

SMALLNESS_CAVEAT = ("the residues are assumed small enough for the non-triangularizable "
                    "criterion to apply; this bound is asserted by the user, not computed")


def classify_fuchsian(system: FuchsianSystem, assume_small: bool = False, kmax: int = 8,
                      tol: float = 1e-9, monodromy: Optional[MonodromyMatrices] = None) -> List[Verdict]:
    """
    Verdicts for a Fuchsian system from the solvability of its residues' Lie closure

    Args:
        system: poles and residue matrices
        assume_small: user assertion that the residues are small enough
        kmax: k of the k-quadrature verdict
        tol: rank threshold
        monodromy: computed monodromy, attached as evidence when the result is inconclusive

    Returns:
        Verdicts for generalized quadratures, k-quadratures and (when triangularizable) quadratures
    """
    evidence = {}
    try:
        result = is_simultaneously_triangularizable(system.residues, tol, system.exact_residues)
        closure = result.closure
        triangular = result.triangularizable
        if triangular:
            evidence["witness"] = result.witness.tolist()
            evidence["witness_residual"] = result.residual
    except WitnessVerificationFailed as e:
        logger.warning(str(e))
        closure = lie_closure(system.residues, tol, system.exact_residues)
        triangular = True
        evidence["note"] = "triangularizing basis failed verification; solvability rests on the derived series"

    evidence.update({
        "lie_dimension": closure.dimension,
        "derived_dims": closure.derived_dims,
        "exact_rank": closure.exact,
    })

    if triangular:
        reason = "residues are simultaneously triangularizable (solvable Lie closure)"
        return [
            Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.REPRESENTABLE, reason, evidence=evidence),
            Verdict(VerdictClass.QUADRATURES, VerdictStatus.REPRESENTABLE,
                    "triangular system integrates by successive quadratures", evidence=evidence),
            Verdict(VerdictClass.K_QUADRATURES, VerdictStatus.REPRESENTABLE, reason, k=kmax, evidence=evidence),
        ]

    reason = "residues are not simultaneously triangularizable (Lie closure not solvable)"
    if assume_small:
        evidence["caveat"] = SMALLNESS_CAVEAT
        return [
            Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.STRONGLY_NON_REPRESENTABLE,
                    reason + "; holds for almost every solution", evidence=evidence),
            Verdict(VerdictClass.K_QUADRATURES, VerdictStatus.STRONGLY_NON_REPRESENTABLE,
                    reason + "; holds for almost every solution", k=kmax, evidence=evidence),
        ]

    if monodromy is not None:
        evidence["monodromy"] = monodromy.to_dict()
    return [Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.INCONCLUSIVE,
                    reason + " and smallness was not asserted", evidence=evidence)]


def classify_scalar_equation(monodromy: MonodromyMatrices, tol: float = 1e-9) -> List[Verdict]:
    """
    Verdict for a scalar equation from its companion-system monodromy

    A common flag of the monodromy generators makes the monodromy group triangular,
    hence solvable; otherwise nothing is concluded.
    """
    flag = triangularize_matrices(monodromy.matrices, tol)
    if flag is not None:
        return [Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.REPRESENTABLE,
                        "monodromy group is triangular, hence solvable",
                        evidence={"witness": flag.tolist()})]
    return [Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.INCONCLUSIVE,
                    "monodromy generators have no common flag",
                    evidence={"monodromy": monodromy.to_dict()})]
