"""Graded pieces of the perp ideal through catalecticant kernels."""
from dataclasses import dataclass
from typing import Sequence, Tuple

from hadamard_star.geometry import ProjPoint, Ring
from hadamard_star.linalg import Matrix, kernel_basis, rank

from .forms import HomogeneousForm, diff_apply, evaluate_monomial, monomials


@dataclass(frozen=True)
class PerpComponent:
    """
    A basis of the degree-``degree`` part of the perp ideal of a form.

    Attributes
    ----------
    degree : int
        The degree e of the operators.
    basis : tuple of HomogeneousForm
        Operators in y spanning the component.
    """

    degree: int
    basis: Tuple[HomogeneousForm, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def catalecticant(f: HomogeneousForm, e: int) -> Matrix:
    """
    Matrix of ``T_e -> S_(d-e)``, ``D -> D f``, in the monomial bases.

    Columns follow :func:`monomials` in degree e, rows in degree d - e.
    """
    columns = []
    for alpha in monomials(f.nvars, e):
        image = diff_apply(HomogeneousForm.monomial(alpha, ring=Ring.T), f)
        columns.append(image.coefficient_vector())
    row_count = len(monomials(f.nvars, f.degree - e))
    return Matrix(
        [[column[i] for column in columns] for i in range(row_count)],
        cols=len(columns),
    )


def catalecticant_rank(f: HomogeneousForm, e: int) -> int:
    return rank(catalecticant(f, e))


def _operators(vectors, nvars: int, e: int) -> Tuple[HomogeneousForm, ...]:
    basis = monomials(nvars, e)
    return tuple(
        HomogeneousForm(dict(zip(basis, vector)), nvars, e, Ring.T) for vector in vectors
    )


def perp_component(f: HomogeneousForm, e: int) -> PerpComponent:
    """
    Degree-e part of ``f^perp = {D in T : D f = 0}``.

    For e > deg f every operator annihilates f and the monomial basis of
    ``T_e`` is returned.
    """
    if e > f.degree:
        return PerpComponent(
            e, tuple(HomogeneousForm.monomial(a, ring=Ring.T) for a in monomials(f.nvars, e))
        )
    return PerpComponent(e, _operators(kernel_basis(catalecticant(f, e)), f.nvars, e))


def vanishing_component(points: Sequence[ProjPoint], e: int) -> Tuple[HomogeneousForm, ...]:
    """
    Degree-e forms in y vanishing at every point (the ideal of the points).

    Computed by interpolation: the kernel of the evaluation matrix whose rows
    are the points and whose columns are the degree-e monomials.
    """
    nvars = points[0].dimension + 1
    basis = monomials(nvars, e)
    evaluation = Matrix(
        [[evaluate_monomial(alpha, p.coords) for alpha in basis] for p in points],
        cols=len(basis),
    )
    return _operators(kernel_basis(evaluation), nvars, e)
