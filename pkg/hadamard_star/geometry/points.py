"""Projective points, hyperplanes, Hadamard products and the Cremona map."""
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from hadamard_star.exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    UndefinedHadamardProductError,
)
from hadamard_star.linalg import Matrix, rank
from hadamard_star.linalg.matrix import maximal_minors
from hadamard_star.utils import format_bracketed, parse_bracketed


class Ring(Enum):
    """Variable family a linear form is written in."""

    S = "x"
    T = "y"


class _Projective:
    """Nonzero coordinate vector considered up to a nonzero global scale."""

    __slots__ = ("coords", "_canonical")

    def __init__(self, coords: Iterable) -> None:
        self.coords: Tuple = tuple(Fraction(c) if isinstance(c, int) else c for c in coords)
        if len(self.coords) < 2:
            raise DimensionMismatchError(
                f"need at least 2 homogeneous coordinates, got {len(self.coords)}"
            )
        lead = next((c for c in self.coords if c != 0), None)
        if lead is None:
            raise DegenerateInputError(f"{self.__class__.__name__} with all entries zero")
        self._canonical = tuple(c / lead for c in self.coords)

    @property
    def dimension(self) -> int:
        """Ambient dimension n of P^n."""
        return len(self.coords) - 1

    def canonical(self) -> Tuple:
        """Representative whose first nonzero entry is 1."""
        return self._canonical

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c != 0)

    @property
    def has_full_support(self) -> bool:
        return len(self.support) == len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._canonical))

    def __str__(self) -> str:
        return format_bracketed(self.coords)


class ProjPoint(_Projective):
    """
    A point of P^n given by homogeneous coordinates.

    Examples
    --------
    >>> ProjPoint([1, 2, 3]) == ProjPoint([2, 4, 6])
    True
    """

    __slots__ = ()

    @classmethod
    def from_text(cls, text: str) -> "ProjPoint":
        return cls(parse_bracketed(text))

    def as_form(self, ring: Ring = Ring.S) -> "LinearForm":
        """The linear form with the same coefficient vector."""
        return LinearForm(self.coords, ring)

    def __repr__(self) -> str:
        return f"ProjPoint({self})"


class LinearForm(_Projective):
    """
    A linear form ``c_0 v_0 + ... + c_n v_n`` up to scale, i.e. a hyperplane.

    Parameters
    ----------
    coeffs : iterable of scalars
        The coefficient vector, not all zero.
    ring : Ring
        Whether the form is written in the x (S) or y (T) variables.
    """

    __slots__ = ("ring",)

    def __init__(self, coeffs: Iterable, ring: Ring = Ring.S) -> None:
        super().__init__(coeffs)
        self.ring = ring

    @classmethod
    def from_text(cls, text: str, ring: Ring = Ring.S) -> "LinearForm":
        return cls(parse_bracketed(text), ring)

    @property
    def coeffs(self) -> Tuple:
        return self.coords

    def as_point(self) -> ProjPoint:
        """The form as a point of P(S_1)."""
        return ProjPoint(self.coords)

    def evaluate(self, point: ProjPoint):
        """Value of the form at a representative of ``point``."""
        _same_dimension([self, point])
        return sum((c * p for c, p in zip(self.coords, point.coords)), Fraction(0))

    def contains(self, point: ProjPoint) -> bool:
        return self.evaluate(point) == 0

    def __eq__(self, other) -> bool:
        result = super().__eq__(other)
        if result is NotImplemented:
            return result
        return result and self.ring == other.ring

    def __hash__(self) -> int:
        return hash((super().__hash__(), self.ring))

    def __repr__(self) -> str:
        return f"LinearForm({self}, ring={self.ring.name})"

    def to_text(self) -> str:
        """Human-readable equation such as ``13/4*y0 + 1/2*y1 + 1/3*y2``."""
        var = self.ring.value
        terms = [f"{c}*{var}{i}" for i, c in enumerate(self.coords) if c != 0]
        return " + ".join(terms)


def _same_dimension(items: Sequence[_Projective]) -> int:
    dims = {item.dimension for item in items}
    if len(dims) != 1:
        raise DimensionMismatchError(f"mixed ambient dimensions {sorted(dims)}")
    return dims.pop()


def coordinate_matrix(items: Sequence[_Projective]) -> Matrix:
    """Matrix whose rows are the coordinate vectors of ``items``."""
    _same_dimension(items)
    return Matrix([item.coords for item in items])


def hadamard_points(a: ProjPoint, b: ProjPoint) -> ProjPoint:
    """
    Hadamard product ``[a_0 b_0 : ... : a_n b_n]``.

    Raises
    ------
    UndefinedHadamardProductError
        If ``a_i b_i = 0`` for every i.
    """
    _same_dimension([a, b])
    coords = [x * y for x, y in zip(a.coords, b.coords)]
    if all(c == 0 for c in coords):
        raise UndefinedHadamardProductError(f"{a} * {b} is not defined")
    return ProjPoint(coords)


def _require_off_coordinate_hyperplanes(p: ProjPoint) -> None:
    if not p.has_full_support:
        raise DegenerateInputError(f"{p} has a zero coordinate")


def hadamard_point_hyperplane(p: ProjPoint, h: LinearForm) -> LinearForm:
    """
    The hyperplane ``p * V(h)``, i.e. ``V(a_0 v_0/p_0 + ... + a_n v_n/p_n)``.

    Raises
    ------
    DegenerateInputError
        If ``p`` has a zero coordinate.
    """
    _same_dimension([p, h])
    _require_off_coordinate_hyperplanes(p)
    return LinearForm([a / x for a, x in zip(h.coords, p.coords)], h.ring)


def cremona(p: ProjPoint) -> ProjPoint:
    """
    Standard Cremona transformation ``[1/p_0 : ... : 1/p_n]``.

    Raises
    ------
    DegenerateInputError
        If ``p`` lies on a coordinate hyperplane.
    """
    _require_off_coordinate_hyperplanes(p)
    return ProjPoint([1 / x for x in p.coords])


def delta_stratum(p: ProjPoint) -> Optional[int]:
    """
    Smallest i with ``p`` in Delta_i, or None when no coordinate vanishes.

    A point with k zero coordinates lies in Delta_{n-k}.
    """
    zeros = sum(1 for c in p.coords if c == 0)
    return None if zeros == 0 else p.dimension - zeros


def avoids_delta(p: ProjPoint, i: int) -> bool:
    """True iff ``p`` is not in Delta_i."""
    stratum = delta_stratum(p)
    return stratum is None or stratum > i


def general_position(points: Sequence[_Projective]) -> bool:
    """
    Whether no hyperplane contains n+1 of the points.

    For r >= n+1 points every maximal minor of the r x (n+1) coordinate
    matrix must be nonzero; for r <= n the points must be linearly
    independent.

    Raises
    ------
    DegenerateInputError
        If ``points`` is empty.
    """
    if not points:
        raise DegenerateInputError("general position of an empty list")
    m = coordinate_matrix(points)
    if m.rows <= m.cols - 1:
        return rank(m) == m.rows
    return all(minor != 0 for _, minor in maximal_minors(m))


def span_contains(points: Sequence[ProjPoint], x: ProjPoint) -> bool:
    """Whether ``x`` lies in the linear span of ``points``."""
    if not points:
        raise DegenerateInputError("span of an empty list")
    base = coordinate_matrix(points)
    return rank(coordinate_matrix([*points, x])) == rank(base)


def on_line(p: ProjPoint, q: ProjPoint, x: ProjPoint) -> bool:
    """Whether ``x`` lies on the line spanned by distinct ``p`` and ``q``."""
    return span_contains([p, q], x)
