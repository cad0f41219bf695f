"""
Processor for Fuchsian systems and scalar Fuchsian equations
"""

import logging
from typing import Dict, Any, Union

import numpy as np

from ..algmono import VerdictClass, VerdictStatus, find_verdict
from ..config.settings import RunConfig
from ..fuchsian import (
    FuchsianSystem, ScalarFuchsianEquation, classify_fuchsian, classify_scalar_equation,
    companion_system, fuchsian_monodromy, generic_stabilizer_probe,
)
from ..utils.errors import TopoGaloisError

PROBE_THRESHOLD = 1e-6
PROBE_TRIALS = 100


class FuchsianProcessor:
    """Monodromy matrices and generalized-quadrature verdicts of linear systems"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def process(self, subject: Union[FuchsianSystem, ScalarFuchsianEquation],
                config: RunConfig) -> Dict[str, Any]:
        """
        Classify a Fuchsian system, or a scalar equation through its companion system

        Args:
            subject: residue system or scalar equation
            config: tolerances, kmax, assume_small, seed and thread count

        Returns:
            Dictionary with monodromy intermediates and the verdict list
        """
        try:
            if isinstance(subject, ScalarFuchsianEquation):
                return self._process_equation(subject, config)
            return self._process_system(subject, config)
        except TopoGaloisError as e:
            self.logger.error(f"Fuchsian classification failed: {e}")
            raise

    def _process_system(self, system: FuchsianSystem, config: RunConfig) -> Dict[str, Any]:
        tol = config.tolerances
        self.logger.info(f"Fuchsian system of dimension {system.dimension} with {len(system.poles)} pole(s)")
        if not system.regular_at_infinity:
            self.logger.info("System has a pole at infinity")

        mono = fuchsian_monodromy(system, tol.ode, config.threads)
        verdicts = classify_fuchsian(system, config.assume_small, config.kmax, tol.rank, monodromy=mono)

        intermediates: Dict[str, Any] = {
            "dimension": system.dimension,
            "poles": list(system.poles),
            "infinity_residue": system.infinity_residue.tolist(),
            "regular_at_infinity": system.regular_at_infinity,
            "monodromy": mono.to_dict(),
        }
        general = find_verdict(verdicts, VerdictClass.GENERALIZED_QUADRATURES)
        if general is not None and general.status is not VerdictStatus.REPRESENTABLE:
            probe = generic_stabilizer_probe(mono, PROBE_TRIALS, config.seed, tol.ode, PROBE_THRESHOLD)
            intermediates["probe"] = probe.to_dict()
        return {"intermediates": intermediates, "verdicts": verdicts}

    def _process_equation(self, equation: ScalarFuchsianEquation, config: RunConfig) -> Dict[str, Any]:
        tol = config.tolerances
        self.logger.info(f"Scalar equation of order {equation.order} with {len(equation.poles)} pole(s)")
        mono = fuchsian_monodromy(companion_system(equation), tol.ode, config.threads)
        verdicts = classify_scalar_equation(mono, tol.rank)
        intermediates = {
            "order": equation.order,
            "poles": list(equation.poles),
            "fuchsian": equation.is_fuchsian,
            "monodromy": mono.to_dict(),
            "monodromy_determinants": [complex(np.linalg.det(m)) for m in mono.matrices],
        }
        return {"intermediates": intermediates, "verdicts": verdicts}
