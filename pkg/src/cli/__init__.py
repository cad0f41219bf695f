# Command-line front end: polynomial grammar, input loaders, report rendering
from .poly_parser import parse_polynomial, print_polynomial
from .loaders import load_fuchsian, load_polygon, parse_complex
from .report import Report, render, render_json, render_text, to_jsonable

__all__ = [
    "parse_polynomial", "print_polynomial",
    "load_fuchsian", "load_polygon", "parse_complex",
    "Report", "render", "render_json", "render_text", "to_jsonable",
]
