"""
Loaders turning JSON input records into Fuchsian systems, scalar equations and polygons
"""

import json
import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Union

import numpy as np

from ..fuchsian import FuchsianSystem, ScalarFuchsianEquation
from ..polygonmap import GenCircle, PolygonSpec, Side
from ..utils.errors import InputValidationError
from ..utils.input_validator import validate_fuchsian_record, validate_polygon_record

logger = logging.getLogger(__name__)

Entry = Union[Fraction, complex]


def load_json(file_path: Path) -> Any:
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise InputValidationError(f"{file_path} is not valid JSON: {e.msg} (line {e.lineno})") from e


def parse_complex(value: Any) -> complex:
    """Read a number or a string such as "1.5-2i", "3", "-i" or "1/2" as a finite complex"""
    if isinstance(value, bool):
        raise InputValidationError(f"Expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        result = complex(value)
    elif isinstance(value, str):
        text = value.replace(" ", "").lower()
        try:
            result = complex(Fraction(text)) if "/" in text else complex(text.replace("i", "j"))
        except (ValueError, ZeroDivisionError) as e:
            raise InputValidationError(f"Cannot read {value!r} as a complex number") from e
    else:
        raise InputValidationError(f"Expected a number, got {value!r}")
    if not (math.isfinite(result.real) and math.isfinite(result.imag)):
        raise InputValidationError(f"Non-finite value {value!r}")
    return result


def parse_entry(value: Any) -> Entry:
    """Exact rational when the value is an integer, a rational string or a decimal, else complex"""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, float) and math.isfinite(value):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.replace(" ", ""))
        except (ValueError, ZeroDivisionError):
            pass
    return parse_complex(value)


def load_fuchsian(data: Any) -> Union[FuchsianSystem, ScalarFuchsianEquation]:
    """
    Build a system from {"poles": [...], "residues": [matrix, ...]} or a scalar equation from
    {"poles": [...], "equation": {"order": n, "terms": [[j, pole_index, m, c], ...]}}
    """
    is_valid, error_msg = validate_fuchsian_record(data)
    if not is_valid:
        raise InputValidationError(f"Invalid Fuchsian input: {error_msg}")

    poles = [parse_complex(a) for a in data["poles"]]
    try:
        if "residues" in data:
            entries = [[[parse_entry(v) for v in row] for row in m] for m in data["residues"]]
            if all(isinstance(v, Fraction) for m in entries for row in m for v in row):
                return FuchsianSystem.from_rational(poles, entries)
            logger.debug("Residues have non-rational entries; rank decisions are numeric only")
            return FuchsianSystem(tuple(poles), tuple(np.array(m, dtype=complex) for m in entries))

        equation = data["equation"]
        terms = [(j, i, m, parse_complex(c)) for j, i, m, c in equation.get("terms", [])]
        return ScalarFuchsianEquation(equation["order"], tuple(poles), tuple(terms))
    except InputValidationError:
        raise
    except (TypeError, ValueError) as e:
        raise InputValidationError(f"Invalid Fuchsian input: {e}") from e


def _side(record: dict) -> Side:
    if record["kind"] == "line":
        p1, p2 = parse_complex(record["p1"]), parse_complex(record["p2"])
        return Side(GenCircle.through_points(p1, p2), p1, p2)
    center = parse_complex(record["center"])
    radius = float(record["radius"])
    if not radius > 0:
        raise InputValidationError(f"Circle radius must be positive, got {radius}")
    start = center + radius * np.exp(1j * float(record["from"]))
    end = center + radius * np.exp(1j * float(record["to"]))
    return Side(GenCircle.from_center_radius(center, radius), complex(start), complex(end))


def load_polygon(data: Any) -> PolygonSpec:
    """Polygon from a list of side records (or {"sides": [...]}) in boundary order"""
    is_valid, error_msg = validate_polygon_record(data)
    if not is_valid:
        raise InputValidationError(f"Invalid polygon input: {error_msg}")

    records: List[dict] = data["sides"] if isinstance(data, dict) else data
    try:
        return PolygonSpec(tuple(_side(r) for r in records))
    except InputValidationError:
        raise
    except (TypeError, ValueError) as e:
        raise InputValidationError(f"Invalid polygon input: {e}") from e
