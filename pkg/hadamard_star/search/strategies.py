import logging
import random
from fractions import Fraction
from typing import List, Optional

from hadamard_star.apolarity import HomogeneousForm, is_apolar_points, monomials
from hadamard_star.data.triples import apolar_hsc_expected
from hadamard_star.exceptions import DegenerateInputError, PreconditionError
from hadamard_star.geometry import LinearForm, ProjPoint, Ring, hadamard_point_hyperplane
from hadamard_star.settings import Settings, load_settings
from hadamard_star.star import StarConfig, classify

logger = logging.getLogger(__name__)


class RandomConfigurations:
    """
    Seeded sampler of hyperplanes, points and Hadamard star configurations.

    Coordinates are integers drawn uniformly from [-B, B] with zero
    resampled, so every draw is reproducible from the seed.

    Parameters
    ----------
    seed : int, optional
        Random seed; defaults to the configured one.
    bound : int, optional
        The bound B; defaults to the configured ``sample_bound``.
    settings : Settings, optional
        Settings to take the defaults from; loaded through bestconfig when
        omitted.

    Examples
    --------
    >>> sampler = RandomConfigurations(seed=7)
    >>> h = sampler.random_hyperplane(2)
    >>> points = sampler.random_points_on_hyperplane(h, 4)
    """

    def __init__(
        self,
        seed: Optional[int] = None,
        bound: Optional[int] = None,
        settings: Optional[Settings] = None,
    ) -> None:
        self.settings = settings or load_settings()
        self.seed = self.settings.seed if seed is None else seed
        self.bound = self.settings.sample_bound if bound is None else bound
        self.rng = random.Random(self.seed)

    def nonzero(self) -> Fraction:
        return Fraction(self.rng.randint(1, self.bound) * self.rng.choice((1, -1)))

    def integer(self) -> Fraction:
        return Fraction(self.rng.randint(-self.bound, self.bound))

    def random_hyperplane(self, n: int, ring: Ring = Ring.S) -> LinearForm:
        """A hyperplane of P^n with full support."""
        return LinearForm([self.nonzero() for _ in range(n + 1)], ring)

    def random_generic_points(self, n: int, r: int) -> List[ProjPoint]:
        """r distinct points of P^n with no zero coordinate."""
        points: List[ProjPoint] = []
        while len(points) < r:
            point = ProjPoint([self.nonzero() for _ in range(n + 1)])
            if point not in points:
                points.append(point)
        return points

    def random_points_on_hyperplane(self, h: LinearForm, r: int) -> List[ProjPoint]:
        """
        r distinct points of V(h) with no zero coordinate.

        The first n coordinates are drawn at random and the last one is
        solved from ``p_n = -(a_0 p_0 + ... + a_(n-1) p_(n-1)) / a_n``.
        """
        if h.coeffs[-1] == 0:
            raise DegenerateInputError("last coefficient of the hyperplane is zero")
        points: List[ProjPoint] = []
        while len(points) < r:
            head = [self.nonzero() for _ in range(h.dimension)]
            last = -sum(a * p for a, p in zip(h.coeffs, head)) / h.coeffs[-1]
            if last == 0:
                continue
            point = ProjPoint(head + [last])
            if point not in points:
                points.append(point)
        return points

    def random_form(self, n: int, d: int) -> HomogeneousForm:
        """A form of degree d in n+1 variables with random integer coefficients."""
        return HomogeneousForm(
            {exps: self.integer() for exps in monomials(n + 1, d)}, n + 1, d
        )

    def random_whsc_forms(self, n: int, r: int, ring: Ring = Ring.T) -> List[LinearForm]:
        """``P_i * V(h)`` for generic points; a WHSC with overwhelming probability."""
        h = self.random_hyperplane(n, ring)
        return [hadamard_point_hyperplane(p, h) for p in self.random_generic_points(n, r)]

    def random_hsc_forms(self, n: int, r: int, ring: Ring = Ring.T) -> List[LinearForm]:
        """``P_i * V(h)`` for generic points on V(h); an HSC with overwhelming probability."""
        h = self.random_hyperplane(n, ring)
        return [
            hadamard_point_hyperplane(p, h) for p in self.random_points_on_hyperplane(h, r)
        ]

    def search_apolar_hsc(self, f: HomogeneousForm, r: int, attempts: int) -> Optional[StarConfig]:
        """
        Sample HSCs of r hyperplanes until one is apolar to ``f``.

        Each attempt draws a full-support hyperplane h and r points on it,
        builds the codimension-n configuration of the hyperplanes
        ``P_i * V(h)`` and tests its points against ``f``.

        Returns
        -------
        StarConfig or None
            The first apolar HSC, or None once the budget is spent.
        """
        n, d = f.dimension, f.degree
        if r < n:
            logger.info("%d hyperplanes cannot meet in points of P^%d", r, n)
            return None
        if not apolar_hsc_expected(d, r, n):
            logger.info(
                "no apolar HSC expected for generic forms with (d, r, n) = (%d, %d, %d)",
                d,
                r,
                n,
            )
        for attempt in range(1, attempts + 1):
            forms = self.random_hsc_forms(n, r)
            result = classify(forms, codim=n)
            if not result.is_hsc:
                logger.debug("attempt %d: sampled family is %s", attempt, result.verdict.value)
                continue
            if is_apolar_points(result.config.points(), f):
                logger.debug("attempt %d: apolar HSC found", attempt)
                return result.config
            logger.debug("attempt %d: HSC not apolar", attempt)
        logger.info("no apolar HSC after %d attempts", attempts)
        return None


def random_apolar_hsc(
    f: HomogeneousForm,
    r: int,
    attempts: Optional[int] = None,
    seed: Optional[int] = None,
) -> Optional[StarConfig]:
    """
    Randomized search for an HSC of r hyperplanes apolar to ``f``.

    Parameters
    ----------
    f : HomogeneousForm
        Form of degree d in n+1 variables.
    r : int
        Number of hyperplanes, at least 1.
    attempts : int, optional
        Budget; defaults to the configured value.
    seed : int, optional
        Random seed; defaults to the configured value.

    Raises
    ------
    PreconditionError
        If r is smaller than 1.
    """
    if r < 1:
        raise PreconditionError("r must be at least 1")
    sampler = RandomConfigurations(seed=seed)
    budget = sampler.settings.attempts if attempts is None else attempts
    return sampler.search_apolar_hsc(f, r, budget)
