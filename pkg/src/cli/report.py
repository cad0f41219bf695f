"""
Report record and its text / JSON renderings
"""

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np

from .. import APP_NAME, __version__
from ..algmono import Verdict, VerdictStatus

SIGNIFICANT_DIGITS = 12
EXIT_CLASSIFIED = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def format_real(x: float):
    """Float rounded to fixed significant digits; non-finite values become strings"""
    if not math.isfinite(x):
        return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}") + 0.0


def format_complex(z: complex) -> str:
    """Text such as "1.5-2i" that the input loaders read back"""
    if math.isnan(z.real) or math.isnan(z.imag):
        return "nan"
    if math.isinf(z.real) or math.isinf(z.imag):
        return "inf"
    re, im = format_real(z.real), format_real(z.imag)
    if im == 0:
        return f"{re:.{SIGNIFICANT_DIGITS}g}"
    imag = f"{abs(im):.{SIGNIFICANT_DIGITS}g}i"
    if re == 0:
        return f"-{imag}" if im < 0 else imag
    return f"{re:.{SIGNIFICANT_DIGITS}g}{'-' if im < 0 else '+'}{imag}"


def to_jsonable(value: Any) -> Any:
    """Convert report values (complex, numpy, Fraction, enums, verdicts) to plain JSON types"""
    if isinstance(value, Verdict):
        return to_jsonable(value.to_dict())
    if isinstance(value, Enum):
        return value.value
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        return format_real(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return format_complex(complex(value))
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    return str(value)


@dataclass
class Report:
    """
    Everything a classification run produced

    Attributes:
        subcommand: algebraic, invert-poly, fuchsian or polygon
        input: echo of the parsed input
        intermediates: branch points, generators, group orders, residuals, witnesses
        verdicts: the classification outcome
        config: echo of the run configuration
    """
    subcommand: str
    input: Dict[str, Any]
    intermediates: Dict[str, Any]
    verdicts: List[Verdict]
    config: Dict[str, Any]
    version: str = field(default=__version__)

    @property
    def exit_code(self) -> int:
        if any(v.status is VerdictStatus.INCONCLUSIVE for v in self.verdicts):
            return EXIT_INCONCLUSIVE
        return EXIT_CLASSIFIED

    def to_dict(self) -> Dict[str, Any]:
        return to_jsonable({
            "subcommand": self.subcommand,
            "input": self.input,
            "intermediates": self.intermediates,
            "verdicts": self.verdicts,
            "config": self.config,
            "version": self.version,
        })


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2, allow_nan=False)


def _compact(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, allow_nan=False)


def render_text(report: Report) -> str:
    data = report.to_dict()
    lines = [f"{APP_NAME} {data['version']} - {data['subcommand']}"]
    for section in ("input", "intermediates", "config"):
        lines.append(f"{section}:")
        for key in sorted(data[section]):
            lines.append(f"  {key}: {_compact(data[section][key])}")
    lines.append("verdicts:")
    for verdict in data["verdicts"]:
        lines.append(f"  {verdict['status']}({verdict['class']}): {verdict['reason']}")
        if verdict["evidence"]:
            lines.append(f"    evidence: {_compact(verdict['evidence'])}")
    return "\n".join(lines)


def render(report: Report, output_format: str = "text") -> str:
    if output_format == "json":
        return render_json(report)
    return render_text(report)
