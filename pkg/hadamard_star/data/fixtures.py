"""Worked examples replayed in exact arithmetic."""
from fractions import Fraction as F
from itertools import combinations
from typing import List, Optional, Sequence

from hadamard_star.apolarity import (
    HomogeneousForm,
    diff_apply,
    is_apolar_points,
    perp_component,
    waring_coefficients,
    waring_reconstruct,
)
from hadamard_star.exceptions import HadamardStarError
from hadamard_star.field import QuadExt
from hadamard_star.geometry import (
    LinearForm,
    ProjPoint,
    Ring,
    coordinate_matrix,
    cremona,
    general_position,
)
from hadamard_star.linalg import Matrix, determinant, maximal_minors, rank
from hadamard_star.star import (
    Verdict,
    build_star_config,
    classify,
    generally_linear,
    reciprocal_matrix,
    whsc_from_data,
)

from .base import CheckResult, Fixture, FixtureReport

# Four points on a plane of P^3 whose Cremona images are coplanar too. The
# plane is usually quoted with a typo as V(x0 + 2x1 + 3x3 - x4), which names
# five variables; the points satisfy x0 + 2x1 + 3x2 - x3 = 0.
COPLANAR_HYPERPLANE = LinearForm([1, 2, 3, -1])
COPLANAR_POINTS = (
    ProjPoint([1, 2, 3, 14]),
    ProjPoint([1, 1, 1, 6]),
    ProjPoint([-1, 2, -2, -3]),
    ProjPoint([-1, -2, F(190, 33), F(135, 11)]),
)

# The cross term is printed as 7/9 x0 z2 in the source; z2 is read as x2.
TERNARY_QUADRIC = "1/5*x0^2 + x0*x1 + 3*x1^2 + 7/9*x0*x2 + 5/4*x1*x2 + 5/4*x2^2"

QUADRIC_HSC_FORMS = (
    LinearForm([F(13, 4), F(1, 2), F(1, 3)], Ring.T),
    LinearForm([F(-13, 15), F(1, 3), F(1, 6)], Ring.T),
    LinearForm([F(1, 7), F(1, 7), F(1, 5)], Ring.T),
    LinearForm([1, F(1, 3), F(1, 4)], Ring.T),
)

QUADRIC_WHSC_FORMS = (
    LinearForm([1, 3, -2], Ring.T),
    LinearForm([-3, 5, 1], Ring.T),
    LinearForm([F(-1, 2), F(1, 4), 7], Ring.T),
    LinearForm([4, 3, 1], Ring.T),
)

MONOMIAL = "x0*x1*x2"

_ROOT = QuadExt(0, 1, 2641)
MONOMIAL_POINT_A = (
    (_ROOT + 119) / (4 * (_ROOT + 47)),
    2 * (-_ROOT - 59) / (_ROOT + 47),
    QuadExt(2, 0, 2641),
    QuadExt(1, 0, 2641),
)
MONOMIAL_POINT_B = (
    3 * (-_ROOT - 39) / 16,
    QuadExt(5, 0, 2641),
    QuadExt(9, 0, 2641),
    (_ROOT + 11) / 4,
)


def _check(name: str, passed: bool, detail: object = "") -> CheckResult:
    return CheckResult(name, bool(passed), str(detail))


def monomial_configuration_forms(a: Sequence, b: Sequence) -> List[LinearForm]:
    """The forms ``a_i y0 + b_i y1 + y2``."""
    return [LinearForm([x, y, 1], Ring.T) for x, y in zip(a, b)]


def apolarity_equations(a: Sequence, b: Sequence) -> list:
    """
    The four polynomial conditions for the configuration to be apolar to
    x0*x1*x2, one per triple of forms (the omitted index decreasing).

    Each is the sum of ``a_s b_t + a_t b_s`` over pairs s < t of the triple.
    """
    values = []
    for triple in reversed(list(combinations(range(4), 3))):
        values.append(sum((a[s] * b[t] + a[t] * b[s] for s, t in combinations(triple, 2)), 0))
    return values


def generality_minors(a: Sequence, b: Sequence) -> list:
    """Maximal minors of the 4 x 3 coefficient matrix ``[a_i, b_i, 1]``."""
    m = Matrix([[x, y, 1] for x, y in zip(a, b)])
    return [minor for _, minor in maximal_minors(m)]


def reciprocal_minor_expressions(a: Sequence, b: Sequence) -> list:
    """
    The 3 x 3 minors of ``[1/a_i, 1/b_i, 1]`` written out term by term:
    ``1/(a_i b_j) + 1/(a_k b_i) + 1/(a_j b_k) - 1/(a_k b_j) - 1/(a_j b_i) - 1/(a_i b_k)``.
    """
    values = []
    for i, j, k in combinations(range(4), 3):
        values.append(
            1 / (a[i] * b[j])
            + 1 / (a[k] * b[i])
            + 1 / (a[j] * b[k])
            - 1 / (a[k] * b[j])
            - 1 / (a[j] * b[i])
            - 1 / (a[i] * b[k])
        )
    return values


def verify_monomial_configuration(
    a: Optional[Sequence] = None, b: Optional[Sequence] = None
) -> FixtureReport:
    """
    Certify a point (a, b) giving an HSC of four lines apolar to x0*x1*x2.

    Defaults to the published point over Q(sqrt(2641)). Runs, exactly:
    the four apolarity equations, the four generality minors, the four
    reciprocal-minor expressions, the HSC classification and the apolarity
    of the six intersection points. Failures are report entries.

    Parameters
    ----------
    a, b : sequence of scalars, optional
        The coefficients of y0 and y1 in the four forms.

    Returns
    -------
    FixtureReport
        One check per equation, minor and expression, plus two summary checks.
    """
    a = list(MONOMIAL_POINT_A if a is None else a)
    b = list(MONOMIAL_POINT_B if b is None else b)
    report = FixtureReport("monomial-surd-hsc")
    try:
        for idx, value in enumerate(apolarity_equations(a, b), start=1):
            report.checks.append(_check(f"apolarity equation {idx} vanishes", value == 0, value))
        for idx, value in enumerate(generality_minors(a, b), start=1):
            report.checks.append(_check(f"generality minor {idx} nonzero", value != 0, value))
        for idx, value in enumerate(reciprocal_minor_expressions(a, b), start=1):
            report.checks.append(_check(f"reciprocal minor {idx} vanishes", value == 0, value))
        forms = monomial_configuration_forms(a, b)
        result = classify(forms, codim=2)
        report.checks.append(_check("classifies as HSC", result.is_hsc, result.verdict.value))
        if result.config is None:
            report.checks.append(_check("points apolar to x0*x1*x2", False, "no configuration"))
        else:
            monomial = HomogeneousForm.from_text(MONOMIAL)
            points = result.config.points()
            report.checks.append(
                _check("points apolar to x0*x1*x2", is_apolar_points(points, monomial), len(points))
            )
    except (HadamardStarError, ZeroDivisionError) as exc:
        report.checks.append(_check("exact evaluation", False, exc))
    return report


class CoplanarCremonaFixture(Fixture):
    """Points in general position on a plane whose Cremona images are not."""

    name = "coplanar-cremona"

    def build(self):
        return COPLANAR_HYPERPLANE, COPLANAR_POINTS

    def validate(self, data) -> List[CheckResult]:
        h, points = data
        images = [cremona(p) for p in points]
        sigma_det = determinant(coordinate_matrix(images))
        classification, sigma_general = whsc_from_data(h, points, 3)
        return [
            _check("points lie on the plane", all(h.contains(p) for p in points)),
            _check("Cremona determinant vanishes", sigma_det == 0, sigma_det),
            _check("Cremona images not in general position", not general_position(images)),
            _check(
                "general position inside the plane",
                general_position([ProjPoint(p.coords[:3]) for p in points]),
            ),
            _check("not in general position in P^3", not general_position(points)),
            _check(
                "Hadamard family is not a WHSC",
                not classification.is_whsc and not sigma_general,
                classification.verdict.value,
            ),
        ]


class TernaryQuadricFixture(Fixture):
    """Four lines forming an HSC apolar to a ternary quadric."""

    name = "ternary-quadric-hsc"
    forms = QUADRIC_HSC_FORMS
    expected = Verdict.HSC
    expected_rank = 2

    def build(self):
        return list(self.forms), HomogeneousForm.from_text(TERNARY_QUADRIC)

    def validate(self, data) -> List[CheckResult]:
        forms, quadric = data
        result = classify(forms, codim=2)
        r_rank = rank(reciprocal_matrix(forms))
        points = build_star_config(forms, 2).points()
        checks = [
            _check("generally linear", generally_linear(forms)),
            _check(
                f"classifies as {self.expected.value}",
                result.verdict is self.expected,
                result.verdict.value,
            ),
            _check(f"reciprocal rank {self.expected_rank}", r_rank == self.expected_rank, r_rank),
            _check("six intersection points", len(points) == 6, len(points)),
            _check("points apolar to the quadric", is_apolar_points(points, quadric)),
        ]
        alphas = waring_coefficients(points, quadric)
        rebuilt = None if alphas is None else waring_reconstruct(points, alphas, 2)
        checks.append(_check("Waring reconstruction", rebuilt == quadric, rebuilt))
        return checks


class WhscOnlyFixture(TernaryQuadricFixture):
    """Four lines forming a WHSC apolar to the same quadric but no HSC."""

    name = "ternary-quadric-whsc-only"
    forms = QUADRIC_WHSC_FORMS
    expected = Verdict.WHSC
    expected_rank = 3


class MonomialSurdFixture(Fixture):
    """HSC of four lines apolar to x0*x1*x2 at a point over Q(sqrt(2641))."""

    name = "monomial-surd-hsc"

    def build(self):
        return MONOMIAL_POINT_A, MONOMIAL_POINT_B

    def validate(self, data) -> List[CheckResult]:
        return verify_monomial_configuration(*data).checks


class MonomialPerpFixture(Fixture):
    """Low-degree pieces of the perp ideal of x0*x1*x2."""

    name = "monomial-perp"

    def build(self):
        return HomogeneousForm.from_text(MONOMIAL)

    def validate(self, data) -> List[CheckResult]:
        linear = perp_component(data, 1)
        quad = perp_component(data, 2)
        squares = [
            HomogeneousForm.monomial(e, ring=Ring.T) for e in ((2, 0, 0), (0, 2, 0), (0, 0, 2))
        ]
        span = Matrix([g.coefficient_vector() for g in (*quad.basis, *squares)])
        return [
            _check("degree 1 component is zero", linear.dimension == 0, linear.dimension),
            _check("degree 2 component has dimension 3", quad.dimension == 3, quad.dimension),
            _check(
                "basis annihilates the monomial",
                all(diff_apply(g, data).is_zero() for g in quad.basis),
            ),
            _check("spanned by the squares of the variables", rank(span) == 3, rank(span)),
        ]


FIXTURES = (
    CoplanarCremonaFixture,
    TernaryQuadricFixture,
    WhscOnlyFixture,
    MonomialSurdFixture,
    MonomialPerpFixture,
)


def run_all_fixtures() -> List[FixtureReport]:
    """Run every fixture in a fixed order."""
    return [fixture().run() for fixture in FIXTURES]
