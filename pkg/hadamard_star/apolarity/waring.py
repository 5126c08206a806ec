"""Apolarity of point sets to forms and Waring reconstruction."""
from typing import List, Optional, Sequence

from hadamard_star.exceptions import DegenerateInputError, DimensionMismatchError
from hadamard_star.geometry import ProjPoint
from hadamard_star.linalg import Matrix, solve

from .forms import HomogeneousForm, monomials


def _check_points(points: Sequence[ProjPoint], f: HomogeneousForm) -> None:
    if not points:
        raise DegenerateInputError("no points given")
    if len(set(points)) != len(points):
        raise DegenerateInputError("points must be pairwise distinct")
    if any(p.dimension + 1 != f.nvars for p in points):
        raise DimensionMismatchError("points and form live in different spaces")


def power_matrix(points: Sequence[ProjPoint], d: int) -> Matrix:
    """Columns are the coefficient vectors of ``l_P**d``, ``l_P = sum p_j x_j``."""
    nvars = points[0].dimension + 1
    columns = [HomogeneousForm.linear_power(p.coords, d).coefficient_vector() for p in points]
    return Matrix(
        [[column[i] for column in columns] for i in range(len(monomials(nvars, d)))],
        cols=len(columns),
    )


def waring_coefficients(
    points: Sequence[ProjPoint], f: HomogeneousForm
) -> Optional[List]:
    """
    Coefficients ``alpha`` with ``sum alpha_i l_{P_i}**d == f``, or None.

    The system is solved in the monomial basis of ``S_d``; free unknowns are
    set to zero.
    """
    _check_points(points, f)
    return solve(power_matrix(points, f.degree), f.coefficient_vector())


def is_apolar_points(points: Sequence[ProjPoint], f: HomogeneousForm) -> bool:
    """
    Whether the ideal of ``points`` lies in ``f^perp``.

    By the Apolarity Lemma this holds exactly when f is in the span of the
    d-th powers of the linear forms of the points.
    """
    return waring_coefficients(points, f) is not None


def waring_reconstruct(
    points: Sequence[ProjPoint], alphas: Sequence, d: int
) -> HomogeneousForm:
    """Expand ``sum alpha_i l_{P_i}**d``."""
    nvars = points[0].dimension + 1
    total = HomogeneousForm.zero(nvars, d)
    for alpha, point in zip(alphas, points):
        if alpha != 0:
            total = total + HomogeneousForm.linear_power(point.coords, d).scale(alpha)
    return total
