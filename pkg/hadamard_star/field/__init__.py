from fractions import Fraction
from typing import Iterable, Union

from hadamard_star.exceptions import FieldMismatchError

from .base import Field
from .quadext import QuadExt, QuadraticField, check_radicand
from .rational import QQ, RationalField, rational_sqrt, square_free_split

__all__ = [
    "base",
    "rational",
    "quadext",
    "Field",
    "Fraction",
    "QQ",
    "QuadExt",
    "QuadraticField",
    "RationalField",
    "Scalar",
    "field_from_name",
    "field_of",
    "rational_sqrt",
    "square_free_split",
]

Scalar = Union[Fraction, QuadExt]


def field_of(values: Iterable) -> Field:
    """
    Smallest field context containing every value.

    Raises
    ------
    FieldMismatchError
        If quadratic elements with different radicands are present.
    """
    radicand = None
    for value in values:
        if isinstance(value, QuadExt):
            if radicand is not None and radicand != value.radicand:
                raise FieldMismatchError(
                    f"cannot mix sqrt({radicand}) and sqrt({value.radicand})"
                )
            radicand = value.radicand
    return QQ if radicand is None else QuadraticField(radicand)


def field_from_name(name: str) -> Field:
    """Field context from a CLI name: ``rational`` or ``quadext:<m>``."""
    if name == "rational":
        return QQ
    if name.startswith("quadext:"):
        try:
            return QuadraticField(int(name.split(":", 1)[1]))
        except ValueError as exc:
            raise ValueError(f"Invalid field name {name!r}") from exc
    raise ValueError(f"Invalid field name {name!r}")
