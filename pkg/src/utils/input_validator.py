"""
Input file and record validation utilities
"""

from pathlib import Path
from typing import Any, Tuple, Optional

SUPPORTED_EXTENSIONS = {'.json'}
MAX_INPUT_BYTES = 1 << 20


def validate_input_file(file_path: Path) -> Tuple[bool, Optional[str]]:
    """
    Validate that a system/polygon input file can be loaded

    Args:
        file_path: Path to the input file

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not file_path.exists():
        return False, "File does not exist"

    if not file_path.is_file():
        return False, "Path is not a file"

    if file_path.suffix.lower() not in SUPPORTED_EXTENSIONS:
        return False, f"Unsupported file extension. Only {', '.join(sorted(SUPPORTED_EXTENSIONS))} is supported"

    if file_path.stat().st_size > MAX_INPUT_BYTES:
        return False, f"Input file larger than {MAX_INPUT_BYTES} bytes"

    return True, None


def _is_square_matrix(value: Any) -> bool:
    if not isinstance(value, list) or not value:
        return False
    n = len(value)
    return all(isinstance(row, list) and len(row) == n for row in value)


def validate_fuchsian_record(data: Any) -> Tuple[bool, Optional[str]]:
    """Check the shape of a Fuchsian system record before construction"""
    if not isinstance(data, dict):
        return False, "Fuchsian input must be a JSON object"

    poles = data.get("poles")
    if not isinstance(poles, list) or not poles:
        return False, "'poles' must be a nonempty list"

    if "residues" in data:
        residues = data["residues"]
        if not isinstance(residues, list) or len(residues) != len(poles):
            return False, "'residues' must list one matrix per pole"
        if not all(_is_square_matrix(m) for m in residues):
            return False, "every residue must be a square row-major matrix"
        sizes = {len(m) for m in residues}
        if len(sizes) != 1:
            return False, "all residues must share one dimension"
        return True, None

    if "equation" in data:
        equation = data["equation"]
        if not isinstance(equation, dict) or not isinstance(equation.get("order"), int):
            return False, "'equation' must carry an integer 'order'"
        if equation["order"] < 1:
            return False, "equation order must be at least 1"
        terms = equation.get("terms", [])
        if not isinstance(terms, list) or not all(isinstance(t, list) and len(t) == 4 for t in terms):
            return False, "equation 'terms' must be [j, pole_index, m, coefficient] lists"
        return True, None

    return False, "Fuchsian input needs 'residues' or 'equation'"


def validate_polygon_record(data: Any) -> Tuple[bool, Optional[str]]:
    """Check the shape of a polygon record before construction"""
    sides = data.get("sides") if isinstance(data, dict) else data
    if not isinstance(sides, list) or len(sides) < 2:
        return False, "Polygon input must list at least two sides"

    for index, side in enumerate(sides):
        if not isinstance(side, dict):
            return False, f"Side {index} is not an object"
        kind = side.get("kind")
        if kind == "circle":
            missing = {"center", "radius", "from", "to"} - side.keys()
        elif kind == "line":
            missing = {"p1", "p2"} - side.keys()
        else:
            return False, f"Side {index} has unknown kind {kind!r}"
        if missing:
            return False, f"Side {index} is missing {', '.join(sorted(missing))}"

    return True, None
