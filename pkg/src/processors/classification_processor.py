"""
Main classification processor that handles every subcommand
"""

import logging
from pathlib import Path
from typing import Dict, Any, List, Optional, Tuple

from .algebraic_processor import AlgebraicProcessor
from .fuchsian_processor import FuchsianProcessor
from .polygon_processor import PolygonProcessor
from .polynomial_inverse_processor import PolynomialInverseProcessor
from ..cli.loaders import load_fuchsian, load_json, load_polygon
from ..cli.poly_parser import parse_polynomial, print_polynomial
from ..config.settings import RunConfig
from ..numkernel import BiPoly, UniPoly
from ..utils.errors import InputValidationError
from ..utils.input_validator import validate_input_file

SUBCOMMANDS = ("algebraic", "invert-poly", "fuchsian", "polygon")
STABILITY_FACTOR = 0.1


class ClassificationProcessor:
    """Main processor that loads the input and delegates to the subcommand processors"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.algebraic_processor = AlgebraicProcessor()
        self.polynomial_inverse_processor = PolynomialInverseProcessor()
        self.fuchsian_processor = FuchsianProcessor()
        self.polygon_processor = PolygonProcessor()

    def process(self, subcommand: str, source: str, config: RunConfig, k: Optional[int] = None,
                check_stability: bool = False) -> Dict[str, Any]:
        """
        Load an input and classify it

        Args:
            subcommand: one of SUBCOMMANDS
            source: polynomial text, or path of a JSON input file
            config: run configuration
            k: k of the k-radical check for invert-poly
            check_stability: repeat with all tolerances tightened tenfold and compare verdicts

        Returns:
            Dictionary with "input", "intermediates" and "verdicts"
        """
        if subcommand not in SUBCOMMANDS:
            raise InputValidationError(f"Unsupported subcommand: {subcommand}")

        subject, echo = self.load(subcommand, source)
        self.logger.info(f"Processing {subcommand} input")
        result = self._dispatch(subcommand, subject, config, k)

        if check_stability:
            refined = self._dispatch(subcommand, subject, config.scaled(STABILITY_FACTOR), k)
            agrees = self._signature(result["verdicts"]) == self._signature(refined["verdicts"])
            if not agrees:
                self.logger.warning("Verdicts change when the tolerances are tightened")
            result["intermediates"]["stability"] = {
                "factor": STABILITY_FACTOR,
                "agrees": agrees,
                "refined_verdicts": [f"{status}({label})" for label, status in self._signature(refined["verdicts"])],
            }

        result["input"] = echo
        return result

    def load(self, subcommand: str, source: str) -> Tuple[Any, Dict[str, Any]]:
        """Parse or read the subcommand's input; returns the object and its echo"""
        if subcommand in ("algebraic", "invert-poly"):
            polynomial = parse_polynomial(source)
            if subcommand == "algebraic" and not isinstance(polynomial, BiPoly):
                raise InputValidationError("algebraic needs a relation in x and y")
            if subcommand == "invert-poly" and not isinstance(polynomial, UniPoly):
                raise InputValidationError("invert-poly needs a polynomial in z")
            return polynomial, {"polynomial": print_polynomial(polynomial)}

        file_path = Path(source)
        is_valid, error_msg = validate_input_file(file_path)
        if not is_valid:
            raise InputValidationError(f"Invalid file: {error_msg}")
        data = load_json(file_path)
        subject = load_fuchsian(data) if subcommand == "fuchsian" else load_polygon(data)
        return subject, {"file": file_path.name, "record": data}

    def _dispatch(self, subcommand: str, subject: Any, config: RunConfig,
                  k: Optional[int]) -> Dict[str, Any]:
        if subcommand == "algebraic":
            return self.algebraic_processor.process(subject, config)
        elif subcommand == "invert-poly":
            return self.polynomial_inverse_processor.process(subject, config, k)
        elif subcommand == "fuchsian":
            return self.fuchsian_processor.process(subject, config)
        else:
            return self.polygon_processor.process(subject, config)

    @staticmethod
    def _signature(verdicts) -> List[Tuple[str, str]]:
        return [(v.label, v.status.value) for v in verdicts]

    def get_supported_subcommands(self) -> list:
        """Get list of supported subcommands"""
        return list(SUBCOMMANDS)
