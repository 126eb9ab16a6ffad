"""
Text Formats

Bracketed coefficient lists for binary forms ("[1,0,0,-2]" is s^3 - 2t^3,
highest s-power first, rationals as "p/q") and the curve file format:

    degree 3
    [1,0,0,0]
    [0,0,1,0]
    [0,0,0,1]

or a syzygy matrix whose 2x2 minors parameterize the curve:

    matrix
    [1,0,0,0]
    [0,1,1,0]
    [0,0,0,1]
    [1,0,0,3,0,0]
    [0,0,3,0,0,1]
    [1,0,0,0,1,1]

Lines starting with '#' are ignored.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from models.errors import CurveParseError
from models.forms import BinaryForm, MovingLine, format_scalar


_LIST_PATTERN = re.compile(r"^\[(.*)\]$")
_DEGREE_PATTERN = re.compile(r"^degree\s+(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class CurveInput:
    """Parsed curve file: either three forms or the two rows of a syzygy matrix"""
    kind: str
    forms: Tuple[BinaryForm, ...] = ()
    alpha: Tuple[BinaryForm, ...] = ()
    beta: Tuple[BinaryForm, ...] = ()
    declared_degree: Optional[int] = None


def parse_scalar(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CurveParseError(f"Invalid rational {text!r}") from exc


def parse_form(text: str) -> BinaryForm:
    """Parse "[c0,c1,...,cn]" into a degree-n form"""
    match = _LIST_PATTERN.match(text.strip())
    if not match:
        raise CurveParseError(f"Expected a bracketed coefficient list, got {text!r}")
    body = match.group(1).strip()
    if not body:
        raise CurveParseError("Empty coefficient list")
    return BinaryForm.from_coeffs([parse_scalar(part) for part in body.split(",")])


def parse_form_list(coeffs: Sequence[str]) -> BinaryForm:
    """Form from a list of "p/q" strings, as emitted in JSON reports"""
    if not coeffs:
        raise CurveParseError("Empty coefficient list")
    return BinaryForm.from_coeffs([parse_scalar(c) for c in coeffs])


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def parse_curve_text(text: str) -> CurveInput:
    """
    Parse a curve file or an inline "[..];[..];[..]" triple

    Raises:
        CurveParseError: on any malformed input
    """
    lines = _content_lines(text)
    if len(lines) == 1 and ";" in lines[0]:
        lines = [part.strip() for part in lines[0].split(";") if part.strip()]
    if not lines:
        raise CurveParseError("No curve data")

    header = lines[0].lower()
    if header == "matrix":
        if len(lines) != 7:
            raise CurveParseError(f"A matrix block needs six forms, got {len(lines) - 1}")
        forms = [parse_form(line) for line in lines[1:]]
        if len({f.degree for f in forms[:3]}) != 1 or len({f.degree for f in forms[3:]}) != 1:
            raise CurveParseError("Each matrix row must hold forms of one degree")
        return CurveInput(kind="matrix", alpha=tuple(forms[:3]), beta=tuple(forms[3:]))

    declared = None
    match = _DEGREE_PATTERN.match(lines[0])
    if match:
        declared = int(match.group(1))
        lines = lines[1:]
    if len(lines) != 3:
        raise CurveParseError(f"Expected three forms, got {len(lines)}")
    forms = tuple(parse_form(line) for line in lines)
    degrees = {f.degree for f in forms}
    if len(degrees) != 1:
        raise CurveParseError(f"Forms have unequal degrees {sorted(degrees)}")
    if declared is not None and declared not in degrees:
        raise CurveParseError(f"Declared degree {declared} but forms have degree {degrees.pop()}")
    return CurveInput(kind="forms", forms=forms, declared_degree=declared)


# ============================================
# Output
# ============================================

def form_to_list(form: BinaryForm) -> List[str]:
    return [format_scalar(c) for c in form.coeffs]


def form_to_text(form: BinaryForm) -> str:
    return "[" + ",".join(form_to_list(form)) + "]"


def line_to_lists(line: MovingLine) -> List[List[str]]:
    return [form_to_list(c) for c in line.components]


def vector_to_list(vector: Sequence[Fraction]) -> List[str]:
    return [format_scalar(v) for v in vector]


def curve_to_text(forms: Sequence[BinaryForm]) -> str:
    """Curve file text for a triple of forms"""
    lines = [f"degree {forms[0].degree}"]
    lines.extend(form_to_text(f) for f in forms)
    return "\n".join(lines) + "\n"
