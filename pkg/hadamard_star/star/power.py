"""Square-free Hadamard powers of points on a line."""
import logging
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Tuple

from hadamard_star.exceptions import (
    DegenerateInputError,
    DimensionMismatchError,
    PreconditionError,
    UndefinedHadamardProductError,
)
from hadamard_star.geometry import (
    LinearForm,
    ProjPoint,
    coordinate_matrix,
    hadamard_point_hyperplane,
    hadamard_points,
    on_line,
)
from hadamard_star.linalg import Matrix, determinant, maximal_minors

from .configuration import Classification, Verdict, classify, with_verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSet:
    """
    A finite set of pairwise distinct points of P^n, kept in input order.

    Raises
    ------
    DegenerateInputError
        If the set is empty or two points coincide projectively.
    """

    points: Tuple[ProjPoint, ...]

    def __init__(self, points: Iterable[ProjPoint]) -> None:
        points = tuple(points)
        if not points:
            raise DegenerateInputError("empty point set")
        if len({p.dimension for p in points}) != 1:
            raise DimensionMismatchError("points of different ambient dimensions")
        if len(set(points)) != len(points):
            raise DegenerateInputError("point set contains a repeated point")
        object.__setattr__(self, "points", points)

    @property
    def dimension(self) -> int:
        return self.points[0].dimension

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def as_set(self) -> frozenset:
        return frozenset(self.points)


def squarefree_power(xs: PointSet, r: int) -> PointSet:
    """
    All products ``P_1 * ... * P_r`` of r distinct points of ``xs``.

    Subsets are visited in lexicographic order and repeated products are
    kept once.

    Raises
    ------
    PreconditionError
        If r is not in [1, |xs|] or a point has a zero coordinate.
    UndefinedHadamardProductError
        Naming the subset whose product is undefined.
    """
    if not 1 <= r <= len(xs):
        raise PreconditionError(f"cannot take {r}-fold products of {len(xs)} points")
    if not all(p.has_full_support for p in xs):
        raise PreconditionError("points must avoid Delta_{n-1}")
    products = {}
    for subset in combinations(range(len(xs)), r):
        try:
            product = reduce(hadamard_points, (xs.points[i] for i in subset))
        except UndefinedHadamardProductError as exc:
            raise UndefinedHadamardProductError(
                f"product over subset {subset} is not defined"
            ) from exc
        products.setdefault(product, product)
    return PointSet(products.values())


def _check_line_pair(p: ProjPoint, q: ProjPoint, n: int) -> None:
    if p.dimension != n or q.dimension != n:
        raise DimensionMismatchError(f"points must lie in P^{n}")
    if p == q:
        raise DegenerateInputError(f"{p} and {q} do not span a line")
    if not (p.has_full_support and q.has_full_support):
        raise DegenerateInputError("line points must have no zero coordinate")


def _power_rows(p: ProjPoint, q: ProjPoint, n: int) -> list:
    return [
        [x ** (n - 1 - k) * y**k for x, y in zip(p.coords, q.coords)] for k in range(n)
    ]


def line_power_form(p: ProjPoint, q: ProjPoint, n: int) -> LinearForm:
    """
    Equation of the (n-1)-th Hadamard power of the line through p and q.

    It is the determinant whose rows are ``p^(n-1), p^(n-2) q, ..., q^(n-1)``
    followed by ``(x_0, ..., x_n)``, expanded along the last row.

    Raises
    ------
    DegenerateInputError
        If p and q coincide or have a zero coordinate.
    PreconditionError
        If the power rows are dependent, so the determinant vanishes identically.
    """
    _check_line_pair(p, q, n)
    rows = Matrix(_power_rows(p, q, n))
    coeffs = []
    for j in range(n + 1):
        keep = [c for c in range(n + 1) if c != j]
        minor = determinant(rows.submatrix(range(n), keep))
        coeffs.append(minor if (n + j) % 2 == 0 else -minor)
    try:
        return LinearForm(coeffs)
    except DegenerateInputError as exc:
        raise PreconditionError("Hadamard powers of p and q are dependent") from exc


def line_power_determinants(p: ProjPoint, q: ProjPoint, n: int) -> tuple:
    """The two determinants with last row p, respectively q."""
    _check_line_pair(p, q, n)
    rows = _power_rows(p, q, n)
    return (
        determinant(Matrix(rows + [list(p.coords)])),
        determinant(Matrix(rows + [list(q.coords)])),
    )


def line_power_condition(p: ProjPoint, q: ProjPoint, n: int) -> bool:
    """
    Sufficient condition for the square-free n-th power of points on a line
    to be an HSC: both determinants of :func:`line_power_determinants` vanish,
    i.e. p and q lie on the hyperplane of :func:`line_power_form`.
    """
    det_p, det_q = line_power_determinants(p, q, n)
    return det_p == 0 and det_q == 0


def line_avoids_delta(p: ProjPoint, q: ProjPoint) -> bool:
    """
    Whether the line through p and q misses Delta_{n-2}.

    A point of the line with zero coordinates i and j exists exactly when
    the 2x2 minor of ``[p; q]`` on columns i, j vanishes.
    """
    return all(minor != 0 for _, minor in maximal_minors(coordinate_matrix([p, q])))


def hsc_power_pipeline(xs: PointSet, p: ProjPoint, q: ProjPoint) -> Classification:
    """
    Classify the hyperplanes ``{P * V(line_power_form(p, q, n)) : P in xs}``.

    Their codimension-n star configuration is the square-free n-th power of
    ``xs``; it is always a WHSC, and an HSC when the line-power condition
    holds. When the condition fails the kernel witness decides.

    Parameters
    ----------
    xs : PointSet
        m > n points on the line through p and q, none on a coordinate
        hyperplane.
    p, q : ProjPoint
        Two distinct points spanning the line.

    Raises
    ------
    PreconditionError
        Naming the violated hypothesis.
    """
    n = xs.dimension
    if len(xs) <= n:
        raise PreconditionError(f"need more than {n} points, got {len(xs)}")
    _check_line_pair(p, q, n)
    if not line_avoids_delta(p, q):
        raise PreconditionError("line meets Delta_{n-2}")
    if not all(on_line(p, q, x) for x in xs):
        raise PreconditionError("a point of the set is not on the line")
    if not all(x.has_full_support for x in xs):
        raise PreconditionError("a point of the set meets Delta_{n-1}")
    form = line_power_form(p, q, n)
    forms = [hadamard_point_hyperplane(x, form) for x in xs]
    base = classify(forms, codim=n)
    if not base.is_whsc:
        logger.warning("line-power family classified %s, expected WHSC", base.verdict.value)
        return base
    if line_power_condition(p, q, n):
        return with_verdict(base, Verdict.HSC, "line-power-condition")
    return base
