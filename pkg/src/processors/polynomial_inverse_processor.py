"""
Processor for the inverse function of a univariate polynomial
"""

import logging
from typing import Dict, Any, Optional

from ..config.settings import RunConfig
from ..numkernel import UniPoly
from ..ritt import classify_inverse, decompose
from ..utils.errors import InputValidationError, TopoGaloisError


class PolynomialInverseProcessor:
    """Decomposition of a polynomial and invertibility of its inverse by (k-)radicals"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def process(self, polynomial: UniPoly, config: RunConfig, k: Optional[int] = None) -> Dict[str, Any]:
        """
        Classify the inverse function of a polynomial

        Args:
            polynomial: nonconstant polynomial; numeric coefficients skip the decomposition
            config: tolerances and thread count
            k: also decide invertibility by k-radicals when given

        Returns:
            Dictionary with the decompositions and the verdict list
        """
        if polynomial.is_constant:
            raise InputValidationError("A constant polynomial has no inverse")

        self.logger.info(f"Classifying the inverse of a degree-{polynomial.degree} polynomial")
        try:
            decompositions = decompose(polynomial) if polynomial.is_exact else []
            verdicts, certificate = classify_inverse(polynomial, k, config.tolerances.root, config.threads)
        except TopoGaloisError as e:
            self.logger.error(f"Inverse classification failed: {e}")
            raise

        intermediates = {
            "degree": polynomial.degree,
            "decompositions": [d.to_dict() for d in decompositions],
            "certificate": certificate.to_dict() if certificate is not None else None,
        }
        return {"intermediates": intermediates, "verdicts": verdicts}
