from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Optional


class Field(ABC):
    """
    Abstract base class for the exact scalar fields used throughout the package.

    A field context fixes how plain integers and rationals are lifted
    (``coerce``), how scalars are read from and written to text, and which
    square roots exist. Arithmetic itself lives on the scalar values, so the
    concrete methods below are thin wrappers kept for callers that want to
    stay generic over the field.

    Methods
    -------
    coerce(value)
        Lift an int, Fraction or field element into this field.
    parse(text)
        Read a scalar from its exact text encoding.
    sqrt(value)
        Square root inside the field, or None.
    """

    name: str = ""

    @property
    @abstractmethod
    def zero(self):
        """Additive identity of the field."""
        raise NotImplementedError("The zero property must be implemented by subclasses.")

    @property
    @abstractmethod
    def one(self):
        """Multiplicative identity of the field."""
        raise NotImplementedError("The one property must be implemented by subclasses.")

    @abstractmethod
    def coerce(self, value):
        """
        Lift a value into the field.

        Parameters
        ----------
        value : int, Fraction or field element
            The value to lift.

        Raises
        ------
        FieldMismatchError
            If the value belongs to a different quadratic field.
        """
        raise NotImplementedError("The coerce method must be implemented by subclasses.")

    @abstractmethod
    def sqrt(self, value) -> Optional[object]:
        """Return a square root of ``value`` inside the field, or None."""
        raise NotImplementedError("The sqrt method must be implemented by subclasses.")

    def parse(self, text: str):
        """Read a scalar of this field from text such as ``"5/6"``."""
        # pylint: disable=import-outside-toplevel
        from hadamard_star.utils import cast_scalar

        return self.coerce(cast_scalar(text))

    @staticmethod
    def format(value) -> str:
        """Write a scalar in its canonical text encoding."""
        return str(value)

    def add(self, a, b):
        """Sum ``a + b`` of two scalars lifted into the field."""
        return self.coerce(a) + self.coerce(b)

    def sub(self, a, b):
        """Difference ``a - b``."""
        return self.coerce(a) - self.coerce(b)

    def mul(self, a, b):
        """Product ``a * b``."""
        return self.coerce(a) * self.coerce(b)

    def div(self, a, b):
        """
        Quotient ``a / b`` of two scalars lifted into the field.

        Raises
        ------
        ZeroDivisionError
            If ``b`` is zero (``FieldDivisionError`` in a quadratic field).
        """
        return self.coerce(a) / self.coerce(b)

    def neg(self, a):
        """Additive inverse of ``a``."""
        return -self.coerce(a)

    def inv(self, a):
        """
        Multiplicative inverse of ``a``.

        Raises
        ------
        ZeroDivisionError
            If ``a`` is zero.
        """
        return self.one / self.coerce(a)

    @staticmethod
    def is_zero(a) -> bool:
        """Whether ``a`` is the zero of its field."""
        return a == 0

    @staticmethod
    def eq(a, b) -> bool:
        """Exact equality; an embedded rational equals the plain rational."""
        return a == b

    def __eq__(self, other):
        return isinstance(other, Field) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.name!r})"


def as_fraction(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; anything else is rejected."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)
