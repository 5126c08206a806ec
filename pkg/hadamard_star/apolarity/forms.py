"""Homogeneous polynomials and the differentiation action of T on S."""
import re
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from hadamard_star.exceptions import (
    DimensionMismatchError,
    PreconditionError,
    ScalarParseError,
)
from hadamard_star.geometry import Ring
from hadamard_star.utils import parse_rational

Exponent = Tuple[int, ...]

_VARIABLE = re.compile(r"^(?P<var>[xy])(?P<index>\d+)(?:\^(?P<exp>\d+))?$")


def monomials(nvars: int, degree: int) -> List[Exponent]:
    """Exponent vectors of degree ``degree``, x0^d first (lexicographic, descending)."""
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return result


def multinomial(exps: Sequence[int]) -> int:
    return factorial(sum(exps)) // prod(factorial(e) for e in exps)


class HomogeneousForm:
    """
    Sparse homogeneous polynomial of degree ``degree`` in ``nvars`` variables.

    Parameters
    ----------
    terms : mapping of exponent tuple to scalar
        Coefficients; zero coefficients are dropped.
    nvars : int
        Number of variables, n + 1.
    degree : int, optional
        Required for the zero form, otherwise read off the terms.
    ring : Ring
        S for forms in x, T for differential operators in y.

    Raises
    ------
    DimensionMismatchError
        If an exponent vector has the wrong length or degree.
    """

    __slots__ = ("terms", "nvars", "degree", "ring")

    def __init__(
        self,
        terms: Mapping[Exponent, object],
        nvars: int,
        degree: Optional[int] = None,
        ring: Ring = Ring.S,
    ) -> None:
        clean: Dict[Exponent, object] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DimensionMismatchError(f"bad exponent {exps} for {nvars} variables")
            if degree is None:
                degree = sum(exps)
            if sum(exps) != degree:
                raise DimensionMismatchError(f"exponent {exps} is not of degree {degree}")
            if coeff != 0:
                clean[exps] = Fraction(coeff) if isinstance(coeff, int) else coeff
        if degree is None:
            raise DimensionMismatchError("the zero form needs an explicit degree")
        self.terms = clean
        self.nvars = nvars
        self.degree = degree
        self.ring = ring

    @classmethod
    def zero(cls, nvars: int, degree: int, ring: Ring = Ring.S) -> "HomogeneousForm":
        return cls({}, nvars, degree, ring)

    @classmethod
    def monomial(cls, exps: Exponent, coeff=1, ring: Ring = Ring.S) -> "HomogeneousForm":
        return cls({tuple(exps): coeff}, len(exps), sum(exps), ring)

    @classmethod
    def linear_power(
        cls, coeffs: Sequence, degree: int, ring: Ring = Ring.S
    ) -> "HomogeneousForm":
        """Expansion of ``(c_0 v_0 + ... + c_n v_n)**degree``."""
        terms = {
            exps: multinomial(exps) * prod((c**e for c, e in zip(coeffs, exps)), start=Fraction(1))
            for exps in monomials(len(coeffs), degree)
        }
        return cls(terms, len(coeffs), degree, ring)

    @classmethod
    def from_text(cls, text: str, nvars: Optional[int] = None) -> "HomogeneousForm":
        """
        Parse text such as ``"1/5*x0^2 + x0*x1 - 3*x1^2"``.

        Raises
        ------
        ScalarParseError
            On malformed terms or mixed x/y variables.
        """
        parsed: List[Tuple[Exponent, Fraction]] = []
        rings = set()
        max_index = -1
        raw_terms = [t.strip() for t in text.replace("-", "+-").split("+") if t.strip()]
        if not raw_terms:
            raise ScalarParseError(f"Invalid polynomial {text!r}")
        for raw in raw_terms:
            coeff = Fraction(1)
            if raw.startswith("-"):
                coeff, raw = -coeff, raw[1:].strip()
            powers: Dict[int, int] = {}
            for factor in (f.strip() for f in raw.split("*")):
                match = _VARIABLE.match(factor)
                if match:
                    rings.add(match["var"])
                    index = int(match["index"])
                    max_index = max(max_index, index)
                    powers[index] = powers.get(index, 0) + int(match["exp"] or 1)
                    continue
                try:
                    coeff *= parse_rational(factor)
                except ScalarParseError as exc:
                    raise ScalarParseError(f"Invalid term {raw!r} in {text!r}") from exc
            parsed.append((powers, coeff))
        if len(rings) > 1:
            raise ScalarParseError(f"mixed x and y variables in {text!r}")
        nvars = nvars if nvars is not None else max_index + 1
        if max_index >= nvars or nvars < 1:
            raise ScalarParseError(f"{text!r} uses more than {nvars} variables")
        terms: Dict[Exponent, Fraction] = {}
        for powers, coeff in parsed:
            exps = tuple(powers.get(i, 0) for i in range(nvars))
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        ring = Ring.T if rings == {"y"} else Ring.S
        degrees = {sum(e) for e in terms}
        if len(degrees) != 1:
            raise ScalarParseError(f"{text!r} is not homogeneous")
        return cls(terms, nvars, degrees.pop(), ring)

    @property
    def dimension(self) -> int:
        return self.nvars - 1

    def coefficient(self, exps: Exponent):
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficient_vector(self) -> list:
        """Coefficients in the order of :func:`monomials`."""
        return [self.coefficient(e) for e in monomials(self.nvars, self.degree)]

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "HomogeneousForm") -> None:
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise DimensionMismatchError("forms of different shape")

    def __add__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return HomogeneousForm(terms, self.nvars, self.degree, self.ring)

    def __neg__(self) -> "HomogeneousForm":
        return self.scale(-1)

    def __sub__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        return self + (-other)

    def scale(self, scalar) -> "HomogeneousForm":
        return HomogeneousForm(
            {e: scalar * c for e, c in self.terms.items()}, self.nvars, self.degree, self.ring
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        return (self.nvars, self.degree, self.terms) == (other.nvars, other.degree, other.terms)

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"HomogeneousForm({str(self)!r}, nvars={self.nvars})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        var = self.ring.value
        pieces = []
        for exps in monomials(self.nvars, self.degree):
            if exps not in self.terms:
                continue
            coeff = self.terms[exps]
            factors = [
                f"{var}{i}" if e == 1 else f"{var}{i}^{e}" for i, e in enumerate(exps) if e
            ]
            if coeff != 1 or not factors:
                factors.insert(0, str(coeff) if "sqrt" not in str(coeff) else f"({coeff})")
            pieces.append("*".join(factors))
        return " + ".join(pieces)

    def to_text(self) -> str:
        return str(self)


def _falling(beta: int, alpha: int) -> int:
    return factorial(beta) // factorial(beta - alpha)


def diff_apply(d_op: HomogeneousForm, f: HomogeneousForm) -> HomogeneousForm:
    """
    Apply a differential operator in y to a form in x, with ``y_j = d/dx_j``.

    ``y^alpha`` sends ``x^beta`` to ``prod(beta_i!/(beta_i - alpha_i)!) x^(beta - alpha)``
    when ``alpha <= beta`` and to zero otherwise; the action is extended
    bilinearly.

    Raises
    ------
    PreconditionError
        If the operator is not in the y ring, the form not in the x ring, or
        the operator degree exceeds the form degree.
    DimensionMismatchError
        If the variable counts differ.
    """
    if d_op.ring is not Ring.T or f.ring is not Ring.S:
        raise PreconditionError("differential operators act from T on S")
    if d_op.nvars != f.nvars:
        raise DimensionMismatchError("operator and form have different variable counts")
    if d_op.degree > f.degree:
        raise PreconditionError(
            f"operator of degree {d_op.degree} applied to a form of degree {f.degree}"
        )
    terms: Dict[Exponent, object] = {}
    for alpha, a in d_op.terms.items():
        for beta, b in f.terms.items():
            if any(x > y for x, y in zip(alpha, beta)):
                continue
            gamma = tuple(y - x for x, y in zip(alpha, beta))
            factor = prod(_falling(y, x) for x, y in zip(alpha, beta))
            terms[gamma] = terms.get(gamma, Fraction(0)) + factor * a * b
    return HomogeneousForm(terms, f.nvars, f.degree - d_op.degree, Ring.S)


def evaluate_monomial(exps: Exponent, point: Iterable):
    return prod((c**e for c, e in zip(point, exps)), start=Fraction(1))
