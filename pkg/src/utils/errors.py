"""
Error hierarchy shared by every TopoGalois module
"""

from typing import Any, Dict, Iterable, Optional


class TopoGaloisError(Exception):
    """Base class for all toolkit errors"""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details: Dict[str, Any] = details


# Input problems

class ParseError(TopoGaloisError, ValueError):
    """Polynomial text could not be parsed"""

    def __init__(self, message: str, position: int, expected: Iterable[str] = ()):
        self.position = position
        self.expected = sorted(set(expected))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail, position=position, expected=self.expected)


class InputValidationError(TopoGaloisError, ValueError):
    pass


class ConfigurationError(TopoGaloisError, ValueError):
    pass


class NotSquarefree(TopoGaloisError, ValueError):
    pass


class NotMonicInY(TopoGaloisError, ValueError):
    pass


class DegenerateLeadingCoefficient(TopoGaloisError, ValueError):
    pass


class NotTransitive(TopoGaloisError, ValueError):
    pass


class NotPrimitiveInput(TopoGaloisError, ValueError):
    pass


class PathTooClose(TopoGaloisError, ValueError):
    pass


class PoleOfInversion(TopoGaloisError, ValueError):
    pass


class OrderTooLarge(TopoGaloisError, ValueError):
    pass


# Numerical breakdown

class NonConvergence(TopoGaloisError, ArithmeticError):
    pass


class OverflowingCoefficients(TopoGaloisError, ArithmeticError):
    pass


class StepUnderflow(TopoGaloisError, ArithmeticError):
    def __init__(self, message: str, position: Optional[complex] = None, **details: Any):
        self.position = position
        super().__init__(message, position=position, **details)


class SheetCollision(TopoGaloisError, ArithmeticError):
    def __init__(self, message: str, parameter: float, **details: Any):
        self.parameter = parameter
        super().__init__(message, parameter=parameter, **details)


class RankThresholdAmbiguous(TopoGaloisError, ArithmeticError):
    def __init__(self, message: str, singular_value: float, threshold: float):
        self.singular_value = singular_value
        self.threshold = threshold
        super().__init__(message, singular_value=singular_value, threshold=threshold)


class ParabolicComposition(TopoGaloisError, ArithmeticError):
    pass


# Internal consistency

class UnidentifiedSimpleFactor(TopoGaloisError, RuntimeError):
    def __init__(self, order: int):
        self.order = order
        super().__init__(f"Simple factor of order {order} is not in the bundled table", order=order)


class WitnessVerificationFailed(TopoGaloisError, RuntimeError):
    pass


class CrossCheckMismatch(TopoGaloisError, RuntimeError):
    pass


class MonodromyConsistencyError(TopoGaloisError, RuntimeError):
    pass
