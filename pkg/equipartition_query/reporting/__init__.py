"""Deterministic renderers for command output (text, CSV, JSON)."""

from .document import OutputDocument, to_jsonable
from .format import fmt_complex, fmt_float, fmt_sign, parse_amplitudes, parse_classes
from .tables import TableView, render_csv, render_text

__all__ = [
    "OutputDocument",
    "to_jsonable",
    "TableView",
    "render_csv",
    "render_text",
    "fmt_float",
    "fmt_complex",
    "fmt_sign",
    "parse_amplitudes",
    "parse_classes",
]
