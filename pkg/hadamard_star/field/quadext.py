from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from sympy import factorint

from hadamard_star.exceptions import FieldDivisionError, FieldMismatchError

from .base import Field, as_fraction
from .rational import rational_sqrt


@lru_cache(maxsize=None)
def check_radicand(radicand: int) -> int:
    """
    Validate a radicand for Q(sqrt(m)).

    Parameters
    ----------
    radicand : int
        Candidate m.

    Returns
    -------
    int
        The radicand itself.

    Raises
    ------
    ValueError
        If m is not a square-free integer greater than 1.
    """
    if isinstance(radicand, bool) or not isinstance(radicand, int) or radicand < 2:
        raise ValueError(f"radicand must be an integer > 1, got {radicand!r}")
    if any(exp > 1 for exp in factorint(radicand).values()):
        raise ValueError(f"radicand {radicand} is not square-free")
    return radicand


class QuadExt:
    """
    An element ``rational_part + surd_part * sqrt(radicand)`` of Q(sqrt(m)).

    Both parts are stored as ``Fraction`` and therefore always in lowest
    terms, so equality and hashing are structural. Values are immutable.

    Parameters
    ----------
    rational_part : int or Fraction
        The rational component.
    surd_part : int or Fraction
        The coefficient of ``sqrt(radicand)``.
    radicand : int
        Square-free m > 1.
    """

    __slots__ = ("_a", "_b", "_m")

    def __init__(self, rational_part=0, surd_part=0, radicand: int = 2) -> None:
        self._a = as_fraction(rational_part)
        self._b = as_fraction(surd_part)
        self._m = check_radicand(radicand)

    @property
    def rational_part(self) -> Fraction:
        return self._a

    @property
    def surd_part(self) -> Fraction:
        return self._b

    @property
    def radicand(self) -> int:
        return self._m

    def _parts(self, other) -> Optional[Tuple[Fraction, Fraction]]:
        if isinstance(other, QuadExt):
            if other._m != self._m:
                raise FieldMismatchError(
                    f"cannot mix sqrt({self._m}) and sqrt({other._m})"
                )
            return other._a, other._b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(other), Fraction(0)
        return None

    def _make(self, a, b) -> "QuadExt":
        return QuadExt(a, b, self._m)

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self._make(self._a + parts[0], self._b + parts[1])

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self._make(self._a - parts[0], self._b - parts[1])

    def __rsub__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self._make(parts[0] - self._a, parts[1] - self._b)

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        c, d = parts
        return self._make(
            self._a * c + self._m * self._b * d, self._a * d + self._b * c
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self * self._make(*parts).inverse()

    def __rtruediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        return self._make(*parts) * self.inverse()

    def __neg__(self):
        return self._make(-self._a, -self._b)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = self._make(1, 0)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            return (self._a, self._b, self._m) == (other._a, other._b, other._m)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._m))

    def __repr__(self) -> str:
        return f"QuadExt({self._a!s}, {self._b!s}, {self._m})"

    def __str__(self) -> str:
        sign = "-" if self._b < 0 else "+"
        return f"{self._a} {sign} {abs(self._b)}*sqrt({self._m})"

    def conjugate(self) -> "QuadExt":
        return self._make(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - m*b**2``; nonzero for every nonzero element."""
        return self._a * self._a - self._m * self._b * self._b

    def inverse(self) -> "QuadExt":
        if not self:
            raise FieldDivisionError(f"division by zero in Q(sqrt({self._m}))")
        norm = self.norm()
        return self._make(self._a / norm, -self._b / norm)

    def sqrt(self) -> Optional["QuadExt"]:
        """
        Square root inside Q(sqrt(m)), if one exists.

        Writing the root as ``c + e*sqrt(m)`` gives ``c**2 + m*e**2 = a`` and
        ``2*c*e = b``; the norm of the argument must then be a rational square
        ``n**2`` and ``c**2`` is one of ``(a + n)/2``, ``(a - n)/2``.

        Returns
        -------
        QuadExt or None
            A root, or None when the element is not a square in the field.
        """
        if self._b == 0:
            root = rational_sqrt(self._a)
            if root is not None:
                return self._make(root, 0)
            root = rational_sqrt(self._a / self._m)
            return None if root is None else self._make(0, root)
        n = rational_sqrt(self.norm())
        if n is None:
            return None
        for half in ((self._a + n) / 2, (self._a - n) / 2):
            c = rational_sqrt(half)
            if c:
                return self._make(c, self._b / (2 * c))
        return None


class QuadraticField(Field):
    """
    The field Q(sqrt(m)) for one fixed square-free radicand.

    Parameters
    ----------
    radicand : int
        Square-free m > 1.
    """

    def __init__(self, radicand: int) -> None:
        self.radicand = check_radicand(radicand)
        self.name = f"quadext:{self.radicand}"

    @property
    def zero(self) -> QuadExt:
        return QuadExt(0, 0, self.radicand)

    @property
    def one(self) -> QuadExt:
        return QuadExt(1, 0, self.radicand)

    @property
    def generator(self) -> QuadExt:
        """The element sqrt(m)."""
        return QuadExt(0, 1, self.radicand)

    def coerce(self, value) -> QuadExt:
        if isinstance(value, QuadExt):
            if value.radicand != self.radicand:
                raise FieldMismatchError(
                    f"{value} does not lie in Q(sqrt({self.radicand}))"
                )
            return value
        return QuadExt(as_fraction(value), 0, self.radicand)

    def sqrt(self, value) -> Optional[QuadExt]:
        return self.coerce(value).sqrt()
