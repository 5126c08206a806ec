"""Text casting helpers for exact scalars, points and forms."""
import re
from fractions import Fraction
from typing import List, Optional, Sequence

from hadamard_star.exceptions import FieldMismatchError, ScalarParseError
from hadamard_star.field import Field, QuadExt

_RATIONAL = re.compile(r"^\s*[+-]?\d+(?:\s*/\s*\d+)?\s*$")
_QUADRATIC = re.compile(
    r"^\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*(?P<op>[+-])\s*)?"
    r"(?P<b>[+-]?\s*(?:\d+(?:/\d+)?\s*\*\s*)?)"
    r"sqrt\(\s*(?P<m>\d+)\s*\)\s*$"
)


def cast_scalar(v, field: Optional[Field] = None):
    """
    Converts an exact scalar from its text encoding (or a JSON integer).

    Rationals are written ``"p/q"`` and elements of Q(sqrt(m)) as
    ``"p/q + r/s*sqrt(m)"``; there is no floating-point path.

    Parameters
    ----------
    v : str, int or Fraction
        The value to convert.
    field : Field, optional
        When given, the result is lifted into this field.

    Returns
    -------
    Fraction or QuadExt
        The exact scalar.

    Raises
    ------
    ScalarParseError
        If the input is not an exact scalar encoding.
    FieldMismatchError
        If the radicand disagrees with ``field``.
    """
    if isinstance(v, (Fraction, QuadExt)) or (
        isinstance(v, int) and not isinstance(v, bool)
    ):
        value = v if isinstance(v, QuadExt) else Fraction(v)
    elif isinstance(v, str):
        value = _parse_text(v)
    else:
        raise ScalarParseError(
            f"Invalid scalar {v!r}: expected exact text or an integer"
        )
    return value if field is None else field.coerce(value)


def _parse_text(text: str):
    try:
        if _RATIONAL.match(text):
            return Fraction(text.replace(" ", ""))
        match = _QUADRATIC.match(text)
        if match is None:
            raise ScalarParseError(f"Invalid scalar {text!r}")
        rational = Fraction(match["a"]) if match["a"] else Fraction(0)
        coeff = match["b"].replace(" ", "").rstrip("*")
        if coeff in ("", "+"):
            surd = Fraction(1)
        elif coeff == "-":
            surd = Fraction(-1)
        else:
            surd = Fraction(coeff)
        if match["op"] == "-":
            surd = -surd
        return QuadExt(rational, surd, int(match["m"]))
    except (ZeroDivisionError, ValueError) as exc:
        if isinstance(exc, (ScalarParseError, FieldMismatchError)):
            raise
        raise ScalarParseError(f"Invalid scalar {text!r}") from exc


def parse_rational(text: str) -> Fraction:
    """Parses ``"p"`` or ``"p/q"``; decimals and exponents are rejected."""
    if not _RATIONAL.match(text):
        raise ScalarParseError(f"Invalid rational {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"Invalid rational {text!r}") from exc


def cast_vector(values: Sequence, field: Optional[Field] = None) -> List:
    """Converts a sequence of scalar encodings."""
    return [cast_scalar(v, field) for v in values]


def parse_bracketed(text: str, field: Optional[Field] = None) -> List:
    """
    Reads a point or form written as ``"[1/2 : -3 : 7/5]"``.

    Raises
    ------
    ScalarParseError
        If the brackets are missing or an entry is malformed.
    """
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ScalarParseError(f"Invalid coordinate list {text!r}")
    return cast_vector(stripped[1:-1].split(":"), field)


def format_bracketed(values: Sequence) -> str:
    """Writes coordinates in the ``"[a : b : c]"`` format."""
    return "[" + " : ".join(str(v) for v in values) + "]"
