"""
Processor for algebraic functions y(x) given by a relation f(x, y) = 0
"""

import logging
from typing import Dict, Any

from ..algmono import group_verdicts, monodromy
from ..config.settings import RunConfig
from ..numkernel import BiPoly
from ..permgrp import composition_factor_signature
from ..utils.errors import InputValidationError, TopoGaloisError


class AlgebraicProcessor:
    """Monodromy group of an algebraic function and the verdicts it implies"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def process(self, relation: BiPoly, config: RunConfig) -> Dict[str, Any]:
        """
        Classify the algebraic function defined by a relation

        Args:
            relation: f(x, y) with constant leading coefficient in y
            config: tolerances, kmax, seed and thread count

        Returns:
            Dictionary with the monodromy intermediates and the verdict list
        """
        if relation.deg_y < 1:
            raise InputValidationError("Relation does not involve y")

        self.logger.info(f"Classifying algebraic function of degree {relation.deg_y} in y")
        try:
            report = monodromy(relation, config.tolerances.root, config.threads)
            signature = composition_factor_signature(report.group, seed=config.seed)
            verdicts = group_verdicts(report.group, config.kmax, signature)
        except TopoGaloisError as e:
            self.logger.error(f"Algebraic classification failed: {e}")
            raise

        intermediates = report.to_dict()
        intermediates.update({
            "solvable": signature.all_cyclic,
            "factor_signature": signature.to_dict(),
            "loop_identity": report.loop_identity_holds(),
        })
        return {"intermediates": intermediates, "verdicts": verdicts}
