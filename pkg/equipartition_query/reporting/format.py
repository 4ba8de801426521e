"""Number formatting and command-line value parsing."""

from __future__ import annotations

import re
from typing import List

import numpy as np

from ..config import get_float_digits
from ..errors import ParseError
from ..core.types import BitString


def canonical_float(value: float, digits: int | None = None) -> float:
    """Round to ``digits`` significant digits; -0.0 becomes 0.0."""
    digits = get_float_digits() if digits is None else digits
    out = float(f"{float(value):.{digits}g}")
    return 0.0 if out == 0 else out


def fmt_float(value: float, digits: int | None = None) -> str:
    digits = get_float_digits() if digits is None else digits
    return f"{canonical_float(value, digits):.{digits}g}"


def fmt_complex(value: complex, digits: int | None = None) -> str:
    """Format as a+bi, dropping the imaginary part when it rounds to zero."""
    re_part = canonical_float(value.real, digits)
    im_part = canonical_float(value.imag, digits)
    if im_part == 0:
        return fmt_float(re_part, digits)
    if re_part == 0:
        return f"{fmt_float(im_part, digits)}i"
    sign = "+" if im_part > 0 else "-"
    return f"{fmt_float(re_part, digits)}{sign}{fmt_float(abs(im_part), digits)}i"


def fmt_sign(entry: int) -> str:
    return f"{entry:+d}"


_IMAG_ONLY = re.compile(r"^([+-]?)i$")


def parse_amplitude(token: str) -> complex:
    """Accept "a", "a+bi", "a-bi", "bi", "i", "-i" (and "j" in place of "i")."""
    raw = (token or "").strip().replace(" ", "").lower().replace("j", "i")
    if not raw:
        raise ParseError("empty amplitude")
    m = _IMAG_ONLY.match(raw)
    if m:
        return complex(0, -1 if m.group(1) == "-" else 1)
    candidate = raw
    if candidate.endswith("i"):
        # "a+i" / "a-i" carry an implicit unit coefficient
        if candidate[-2:] in ("+i", "-i"):
            candidate = candidate[:-1] + "1i"
        candidate = candidate[:-1] + "j"
    try:
        value = complex(candidate)
    except ValueError:
        raise ParseError(f"not a complex amplitude: {token!r}") from None
    if not np.isfinite(value):
        raise ParseError(f"amplitude must be finite: {token!r}")
    return value


def parse_amplitudes(text: str) -> List[complex]:
    return [parse_amplitude(tok) for tok in (text or "").split(",")]


def parse_classes(text: str) -> List[List[BitString]]:
    """Parse semicolon-separated classes of comma-separated labels: 00,11;01,10."""
    if not text or not text.strip():
        raise ParseError("no classes given")
    groups = text.split(";")
    out: List[List[BitString]] = []
    for g in groups:
        members = [tok for tok in g.split(",") if tok.strip()]
        if not members:
            raise ParseError(f"empty class in {text!r}")
        out.append([BitString.parse(tok) for tok in members])
    return out
