"""Star configurations and their weak/strong Hadamard classification."""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from hadamard_star.exceptions import NotGenerallyLinearError, PreconditionError
from hadamard_star.field import QQ, Field, QuadraticField, field_of, square_free_split
from hadamard_star.geometry import (
    LinearForm,
    ProjPoint,
    coordinate_matrix,
    cremona,
    general_position,
    hadamard_point_hyperplane,
)
from hadamard_star.linalg import Matrix, kernel_basis, rank

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """Nested verdicts: HSC implies WHSC implies a star configuration."""

    NOT_GENERALLY_LINEAR = "NotGenerallyLinear"
    STAR_CONFIG = "StarConfig"
    WHSC = "WHSC"
    HSC = "HSC"

    @property
    def level(self) -> int:
        return list(Verdict).index(self)


@dataclass(frozen=True)
class Flat:
    """
    The flat ``V(L_i : i in indices)``, described by a kernel basis.

    For ``codim == n`` the basis has one vector and ``point`` is defined.
    """

    indices: Tuple[int, ...]
    basis: Tuple[tuple, ...]

    @property
    def point(self) -> Optional[ProjPoint]:
        return ProjPoint(self.basis[0]) if len(self.basis) == 1 else None


@dataclass(frozen=True)
class StarConfig:
    """
    Codimension ``codim`` star configuration of a generally linear family.

    Attributes
    ----------
    forms : tuple of LinearForm
        The defining forms L_1, ..., L_r.
    codim : int
        The codimension c, 1 <= c <= n.
    flats : tuple of Flat
        One flat per c-subset of the forms, in lexicographic order.
    """

    forms: Tuple[LinearForm, ...]
    codim: int
    flats: Tuple[Flat, ...]

    @property
    def dimension(self) -> int:
        return self.forms[0].dimension

    def points(self) -> List[ProjPoint]:
        """The intersection points; only meaningful when ``codim == n``."""
        if self.codim != self.dimension:
            raise PreconditionError(
                f"codimension {self.codim} flats in P^{self.dimension} are not points"
            )
        return [flat.point for flat in self.flats]


@dataclass(frozen=True)
class HSCWitness:
    """
    Evidence that a form family is a strong Hadamard set.

    ``kernel_vector`` is a kernel vector u of the reciprocal-coefficient
    matrix with no zero entry. When every ``u_j / u_0`` has a square root in
    the working field, or (for rational forms) in one quadratic extension
    Q(sqrt(m)), the witness is explicit: ``hyperplane`` is V(a) with
    ``a_j**2 = u_j / u_0`` and ``points[i] * hyperplane == V(L_i)`` with
    every point on the hyperplane. Otherwise the witness exists over C only.
    """

    kernel_vector: tuple
    hyperplane: Optional[LinearForm] = None
    points: Optional[Tuple[ProjPoint, ...]] = None

    @property
    def explicit(self) -> bool:
        return self.hyperplane is not None


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify`."""

    verdict: Verdict
    witness: Optional[HSCWitness] = None
    reciprocal_rank: Optional[int] = None
    config: Optional[StarConfig] = field(default=None, compare=False)
    hsc_route: Optional[str] = None

    @property
    def is_star_config(self) -> bool:
        return self.verdict.level >= Verdict.STAR_CONFIG.level

    @property
    def is_whsc(self) -> bool:
        return self.verdict.level >= Verdict.WHSC.level

    @property
    def is_hsc(self) -> bool:
        return self.verdict is Verdict.HSC


def generally_linear(forms: Sequence[LinearForm]) -> bool:
    """
    Whether the forms are generally linear.

    Any t <= n of them cut a codimension-t flat and no n+1 have a common
    zero; both amount to the minor criterion used for points in general
    position, applied to the coefficient vectors.
    """
    return general_position(forms)


def build_star_config(forms: Sequence[LinearForm], c: int) -> StarConfig:
    """
    Enumerate the codimension-c star configuration of ``forms``.

    Parameters
    ----------
    forms : sequence of LinearForm
        A generally linear family of r >= c forms.
    c : int
        The codimension, 1 <= c <= n.

    Raises
    ------
    PreconditionError
        If c is out of range or there are fewer than c forms.
    NotGenerallyLinearError
        If the forms are not generally linear.
    """
    if not forms:
        raise PreconditionError("a star configuration needs at least one form")
    n = forms[0].dimension
    if not 1 <= c <= n:
        raise PreconditionError(f"codimension {c} outside [1, {n}]")
    if len(forms) < c:
        raise PreconditionError(f"{len(forms)} forms cannot meet in codimension {c}")
    if not generally_linear(forms):
        raise NotGenerallyLinearError("forms are not generally linear")
    flats = []
    for indices in combinations(range(len(forms)), c):
        basis = kernel_basis(coordinate_matrix([forms[i] for i in indices]))
        flats.append(Flat(indices, tuple(tuple(v) for v in basis)))
    return StarConfig(tuple(forms), c, tuple(flats))


def reciprocal_matrix(forms: Sequence[LinearForm]) -> Matrix:
    """Matrix of reciprocal coefficients ``1 / c_j(i)``; forms need full support."""
    if not all(form.has_full_support for form in forms):
        raise PreconditionError("reciprocal matrix needs full-support forms")
    return Matrix([[1 / c for c in form.coeffs] for form in forms])


def _totally_nonzero_combination(basis: List[list]) -> Optional[list]:
    # Along t -> sum t**i * basis[i] each coordinate is a nonzero polynomial of
    # degree < len(basis), so some t in the range below avoids all roots.
    if any(all(v[j] == 0 for v in basis) for j in range(len(basis[0]))):
        return None
    k = len(basis)
    for t in range(len(basis[0]) * max(k - 1, 1) + 1):
        u = [sum((t**i * v[j] for i, v in enumerate(basis)), 0) for j in range(len(basis[0]))]
        if all(x != 0 for x in u):
            return u
    return None


def _square_roots(ratios: list, ctx: Field) -> Optional[list]:
    """
    Square roots of ``ratios`` in ``ctx``, or for rationals in Q(sqrt(m)).

    Over Q every ratio is split as ``s**2 * m_j``; the roots exist in one
    field exactly when a single square-free ``m > 1`` occurs besides 1.
    """
    if ctx != QQ:
        roots = [ctx.sqrt(x) for x in ratios]
        return None if any(root is None for root in roots) else roots
    splits = [square_free_split(x) for x in ratios]
    radicands = {m for _, m in splits} - {1}
    if not radicands:
        return [s for s, _ in splits]
    if len(radicands) > 1 or min(radicands) < 2:
        return None
    ext = QuadraticField(radicands.pop())
    return [ext.coerce(s) if m == 1 else s * ext.generator for s, m in splits]


def hsc_witness(forms: Sequence[LinearForm]) -> Optional[HSCWitness]:
    """
    Look for a hyperplane V(a) and points P_i on it with P_i * V(a) = V(L_i).

    Writing ``P_i = a * R_i`` with R the reciprocal-coefficient matrix, the
    membership ``P_i in V(a)`` reads ``R u = 0`` for ``u_j = a_j**2``. So a
    witness exists over C exactly when the kernel of R contains a vector
    with no zero entry.

    Parameters
    ----------
    forms : sequence of LinearForm
        Full-support, generally linear forms.

    Returns
    -------
    HSCWitness or None
        None when every kernel vector has a zero entry (e.g. trivial kernel).

    Raises
    ------
    PreconditionError
        If a form lacks full support or the family is not generally linear.
    """
    if not generally_linear(forms):
        raise PreconditionError("hsc_witness needs generally linear forms")
    r_matrix = reciprocal_matrix(forms)
    basis = kernel_basis(r_matrix)
    if not basis:
        return None
    u = _totally_nonzero_combination(basis)
    if u is None:
        return None
    ratios = [x / u[0] for x in u]
    ctx = field_of([*ratios, *(c for form in forms for c in form.coeffs)])
    roots = _square_roots(ratios, ctx)
    if roots is None:
        logger.debug("witness %s has no square roots in a single quadratic field", u)
        return HSCWitness(tuple(u))
    hyperplane = LinearForm(roots, forms[0].ring)
    points = tuple(
        ProjPoint([a * x for a, x in zip(roots, row)]) for row in r_matrix
    )
    if __debug__:
        for point, form in zip(points, forms):
            assert hyperplane.contains(point)
            assert hadamard_point_hyperplane(point, hyperplane) == form
    return HSCWitness(tuple(u), hyperplane, points)


def classify(forms: Sequence[LinearForm], codim: Optional[int] = None) -> Classification:
    """
    Classify a form family as star configuration, WHSC or HSC.

    A generally linear family is a WHSC exactly when every form has full
    support, and an HSC when :func:`hsc_witness` finds a witness.

    Parameters
    ----------
    forms : sequence of LinearForm
        The family to classify.
    codim : int, optional
        When given (and there are at least ``codim`` forms) the star
        configuration is built and attached to the result.
    """
    if not generally_linear(forms):
        return Classification(Verdict.NOT_GENERALLY_LINEAR)
    config = None
    if codim is not None and len(forms) >= codim:
        config = build_star_config(forms, codim)
    if not all(form.has_full_support for form in forms):
        return Classification(Verdict.STAR_CONFIG, config=config)
    r_rank = rank(reciprocal_matrix(forms))
    witness = hsc_witness(forms)
    if witness is None:
        return Classification(Verdict.WHSC, reciprocal_rank=r_rank, config=config)
    return Classification(
        Verdict.HSC, witness, reciprocal_rank=r_rank, config=config, hsc_route="kernel"
    )


def whsc_from_data(
    h: LinearForm, points: Sequence[ProjPoint], c: int
) -> Tuple[Classification, bool]:
    """
    Build ``H_j = P_j * V(h)`` and classify, alongside the Cremona criterion.

    The family is a WHSC exactly when the Cremona images of the points are
    in general position; both routes are computed and must agree.

    Parameters
    ----------
    h : LinearForm
        Full-support hyperplane.
    points : sequence of ProjPoint
        Points with no zero coordinate.
    c : int
        Codimension of the star configuration to attach.

    Returns
    -------
    tuple of (Classification, bool)
        The verdict on the forms and whether the Cremona images are in
        general position.

    Raises
    ------
    PreconditionError
        If ``h`` lacks full support or a point has a zero coordinate.
    """
    if not h.has_full_support:
        raise PreconditionError(f"hyperplane {h} meets Delta_0")
    if not points or not all(p.has_full_support for p in points):
        raise PreconditionError("factor points must avoid Delta_{n-1}")
    forms = [hadamard_point_hyperplane(p, h) for p in points]
    classification = classify(forms, codim=c if len(forms) >= c else None)
    sigma_general = general_position([cremona(p) for p in points])
    if __debug__ and classification.is_whsc != sigma_general:
        logger.error(
            "WHSC verdict %s disagrees with Cremona general position %s",
            classification.verdict.value,
            sigma_general,
        )
        raise AssertionError("forms route and Cremona route disagree")
    return classification, sigma_general


def with_verdict(classification: Classification, verdict: Verdict, route: str) -> Classification:
    return replace(classification, verdict=verdict, hsc_route=route)
