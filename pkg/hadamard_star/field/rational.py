from fractions import Fraction
from math import isqrt
from typing import Optional, Tuple

from sympy import factorint

from hadamard_star.exceptions import FieldMismatchError

from .base import Field, as_fraction


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """
    Exact square root of a non-negative rational.

    Fractions are kept in lowest terms, so ``value`` is a square exactly when
    its numerator and denominator both are.

    Parameters
    ----------
    value : Fraction
        The rational to take the root of.

    Returns
    -------
    Fraction or None
        The non-negative root, or None when ``value`` is negative or not a
        perfect square.
    """
    value = Fraction(value)
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


class RationalField(Field):
    """The field Q, with ``fractions.Fraction`` as its element type."""

    name = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        # pylint: disable=import-outside-toplevel
        from .quadext import QuadExt

        if isinstance(value, QuadExt):
            if value.surd_part != 0:
                raise FieldMismatchError(
                    f"{value} does not lie in the rational field"
                )
            return value.rational_part
        return as_fraction(value)

    def sqrt(self, value) -> Optional[Fraction]:
        return rational_sqrt(self.coerce(value))


QQ = RationalField()


def square_free_split(value: Fraction) -> Tuple[Fraction, int]:
    """
    Write a nonzero rational as ``s**2 * m`` with m a square-free integer.

    Parameters
    ----------
    value : Fraction
        Nonzero rational.

    Returns
    -------
    tuple of (Fraction, int)
        The factor s (positive) and the square-free part m, which carries
        the sign of ``value``.

    Raises
    ------
    ValueError
        If ``value`` is zero.

    Examples
    --------
    >>> square_free_split(Fraction(8, 3))
    (Fraction(2, 3), 6)
    """
    value = Fraction(value)
    if value == 0:
        raise ValueError("zero has no square-free part")
    product = value.numerator * value.denominator
    root, radicand = 1, -1 if product < 0 else 1
    for prime, exp in factorint(abs(product)).items():
        root *= prime ** (exp // 2)
        if exp % 2:
            radicand *= prime
    return Fraction(root, value.denominator), radicand
