"""JSON command documents with exact scalars written as text."""
import json
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Dict, List, Mapping, Optional, Sequence

from hadamard_star.apolarity import HomogeneousForm
from hadamard_star.exceptions import HadamardStarError, SchemaError
from hadamard_star.field import Field
from hadamard_star.geometry import LinearForm, ProjPoint, Ring
from hadamard_star.utils import cast_scalar, cast_vector, format_bracketed, parse_bracketed

FORMAT_VERSION_KEY = "format_version"


def load_document(text: str, format_version: int) -> Dict[str, Any]:
    """
    Parses a command document.

    Parameters
    ----------
    text : str
        JSON text; an empty string is read as an empty document.
    format_version : int
        The schema version this build understands.

    Raises
    ------
    SchemaError
        If the text is not a JSON object or carries another schema version.
    """
    if not text.strip():
        return {FORMAT_VERSION_KEY: format_version}
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input is not valid JSON: {exc.msg}") from exc
    if not isinstance(document, dict):
        raise SchemaError("a command document must be a JSON object")
    version = document.get(FORMAT_VERSION_KEY, format_version)
    if version != format_version:
        raise SchemaError(f"unsupported format_version {version!r}, expected {format_version}")
    return document


def dump_document(document: Mapping[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)


def error_document(exc: BaseException, format_version: int) -> Dict[str, Any]:
    """The machine-readable document printed for a failed job."""
    return {
        FORMAT_VERSION_KEY: format_version,
        "error": type(exc).__name__,
        "message": str(exc),
    }


def require(document: Mapping[str, Any], key: str, kind: type = object) -> Any:
    """
    Fetches a mandatory key.

    Raises
    ------
    SchemaError
        If the key is missing or its value has the wrong JSON type.
    """
    if key not in document:
        raise SchemaError(f"missing key {key!r}")
    value = document[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise SchemaError(f"key {key!r} must be of type {kind.__name__}")
    return value


def optional_int(document: Mapping[str, Any], key: str, default: Optional[int]) -> Optional[int]:
    if key not in document:
        return default
    return require(document, key, int)


def _coordinates(value: Any, field: Optional[Field]) -> List:
    try:
        if isinstance(value, str):
            return parse_bracketed(value, field)
        if isinstance(value, list):
            return cast_vector(value, field)
    except HadamardStarError as exc:
        raise SchemaError(str(exc)) from exc
    raise SchemaError(f"expected '[a : b : ...]' text or a list of scalars, got {value!r}")


def read_point(value: Any, field: Optional[Field] = None) -> ProjPoint:
    return ProjPoint(_coordinates(value, field))


def read_form(value: Any, field: Optional[Field] = None, ring: Ring = Ring.S) -> LinearForm:
    return LinearForm(_coordinates(value, field), ring)


def read_points(
    document: Mapping[str, Any], key: str, field: Optional[Field] = None
) -> List[ProjPoint]:
    """Reads a non-empty list of points stored under ``key``."""
    values = require(document, key, list)
    if not values:
        raise SchemaError(f"key {key!r} must not be empty")
    return [read_point(v, field) for v in values]


def read_forms(
    document: Mapping[str, Any], key: str, field: Optional[Field] = None, ring: Ring = Ring.S
) -> List[LinearForm]:
    values = require(document, key, list)
    if not values:
        raise SchemaError(f"key {key!r} must not be empty")
    return [read_form(v, field, ring) for v in values]


def read_ring(document: Mapping[str, Any], default: Ring = Ring.S) -> Ring:
    """Reads ``"ring": "x"`` or ``"ring": "y"``."""
    if "ring" not in document:
        return default
    try:
        return Ring(require(document, "ring", str))
    except ValueError as exc:
        raise SchemaError("key 'ring' must be 'x' or 'y'") from exc


def read_polynomial(
    document: Mapping[str, Any], key: str = "polynomial", nvars: Optional[int] = None
) -> HomogeneousForm:
    """
    Reads a homogeneous polynomial written as text.

    The number of variables is the document's ``nvars`` key when present,
    then ``nvars`` (the caller passes the points' coordinate count), and
    otherwise one more than the highest variable index in the text.

    Raises
    ------
    SchemaError
        If the text does not parse or uses more than ``nvars`` variables.
    """
    text = require(document, key, str)
    nvars = optional_int(document, "nvars", nvars)
    try:
        return HomogeneousForm.from_text(text, nvars=nvars)
    except HadamardStarError as exc:
        raise SchemaError(str(exc)) from exc


def read_scalar(value: Any, field: Optional[Field] = None):
    try:
        return cast_scalar(value, field)
    except HadamardStarError as exc:
        raise SchemaError(str(exc)) from exc


def write_scalar(value) -> str:
    return str(value)


def write_scalars(values: Sequence) -> List[str]:
    return [str(v) for v in values]


def write_point(point: ProjPoint) -> str:
    """Rational points are written with coprime integer coordinates."""
    coords = point.coords
    if all(isinstance(c, Fraction) for c in coords):
        scale = lcm(*(c.denominator for c in coords))
        integers = [int(c * scale) for c in coords]
        divisor = gcd(*integers)
        coords = [x // divisor for x in integers]
    return format_bracketed(coords)


def write_points(points: Sequence[ProjPoint]) -> List[str]:
    return [write_point(p) for p in points]


def write_form(form: LinearForm) -> str:
    return format_bracketed(form.coeffs)
