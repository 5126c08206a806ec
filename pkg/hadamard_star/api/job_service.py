import logging
from typing import Any, Callable, Dict, List, Mapping, Optional

import pandas as pd

from hadamard_star.apolarity import (
    catalecticant_rank,
    is_apolar_points,
    perp_component,
    waring_coefficients,
    waring_reconstruct,
)
from hadamard_star.data.fixtures import run_all_fixtures
from hadamard_star.exceptions import SchemaError
from hadamard_star.field import Field
from hadamard_star.geometry import (
    Ring,
    cremona,
    general_position,
    hadamard_point_hyperplane,
    hadamard_points,
)
from hadamard_star.search import random_apolar_hsc
from hadamard_star.settings import Settings, load_settings
from hadamard_star.star import (
    Classification,
    PointSet,
    build_star_config,
    classify,
    hsc_power_pipeline,
    line_power_condition,
    line_power_determinants,
    line_power_form,
    squarefree_power,
)

from .documents import (
    FORMAT_VERSION_KEY,
    optional_int,
    read_form,
    read_forms,
    read_point,
    read_points,
    read_polynomial,
    read_ring,
    require,
    write_form,
    write_point,
    write_points,
    write_scalars,
)

logger = logging.getLogger(__name__)


class JobService:
    """
    Runs one command on one input document.

    Every command reads its operands from a mapping (points and forms as
    ``"[a : b : c]"`` text, polynomials as text) and returns a mapping of
    the same kind, so an output document can be fed back as input.

    Attributes
    ----------
    __field : Field or None
        Field every input scalar is lifted into; None keeps each scalar in
        the smallest field it is written in.
    __seed : int
        Seed of the randomized search.
    __attempts : int
        Attempt budget of the randomized search.
    """

    COMMANDS = (
        "product",
        "cremona",
        "general-position",
        "classify",
        "star-config",
        "power",
        "perp",
        "apolar",
        "waring",
        "search-ahsc",
        "verify-paper",
        "verify-fixtures",
    )
    FIXTURE_COMMANDS = ("verify-paper", "verify-fixtures")

    def __init__(
        self,
        field: Optional[Field] = None,
        seed: Optional[int] = None,
        attempts: Optional[int] = None,
        settings: Optional[Settings] = None,
    ) -> None:
        """
        Parameters
        ----------
        field : Field, optional
            Field given on the command line.
        seed, attempts : int, optional
            Overrides of the configured search defaults.
        settings : Settings, optional
            Loaded through bestconfig when omitted.
        """
        self.settings = settings or load_settings()
        self.__field = field
        self.__seed = self.settings.seed if seed is None else seed
        self.__attempts = self.settings.attempts if attempts is None else attempts
        self.__handlers: Dict[str, Callable[[Mapping[str, Any]], Dict[str, Any]]] = {
            "product": self.product,
            "cremona": self.cremona,
            "general-position": self.general_position,
            "classify": self.classify,
            "star-config": self.star_config,
            "power": self.power,
            "perp": self.perp,
            "apolar": self.apolar,
            "waring": self.waring,
            "search-ahsc": self.search_ahsc,
            "verify-paper": self.verify_fixtures,
            "verify-fixtures": self.verify_fixtures,
        }

    def run(self, command: str, document: Mapping[str, Any]) -> Dict[str, Any]:
        """
        Executes ``command`` on ``document``.

        Returns
        -------
        dict
            The output document, with ``format_version``, ``command`` and
            the command's own keys; a ``passed`` key decides the exit code.

        Raises
        ------
        SchemaError
            If the command is unknown or the document does not fit it.
        HadamardStarError
            Domain errors of the library, unchanged.
        """
        handler = self.__handlers.get(command)
        if handler is None:
            raise SchemaError(f"unknown command {command!r}")
        logger.debug("running %s", command)
        result = handler(document)
        return {FORMAT_VERSION_KEY: self.settings.format_version, "command": command, **result}

    def product(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        """Hadamard product of two points, or of a point and a hyperplane."""
        if "hyperplane" in document:
            p = read_point(require(document, "point"), self.__field)
            h = read_form(require(document, "hyperplane"), self.__field, read_ring(document))
            return {"hyperplane": write_form(hadamard_point_hyperplane(p, h))}
        points = read_points(document, "points", self.__field)
        if len(points) != 2:
            raise SchemaError("product takes exactly two points")
        return {"point": write_point(hadamard_points(*points))}

    def cremona(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        points = read_points(document, "points", self.__field)
        return {"points": write_points([cremona(p) for p in points])}

    def general_position(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        points = read_points(document, "points", self.__field)
        return {"general_position": general_position(points)}

    def classify(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        """Verdict, reciprocal rank and witness of a form family."""
        forms = read_forms(document, "forms", self.__field, read_ring(document, Ring.T))
        codim = optional_int(document, "codim", None)
        return self._classification(classify(forms, codim=codim))

    def star_config(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        forms = read_forms(document, "forms", self.__field, read_ring(document, Ring.T))
        config = build_star_config(forms, require(document, "codim", int))
        return {
            "codim": config.codim,
            "flats": [
                {"indices": list(flat.indices), "basis": [write_scalars(v) for v in flat.basis]}
                for flat in config.flats
            ],
            "points": write_points(config.points()) if config.codim == config.dimension else [],
        }

    def power(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        """
        Square-free Hadamard power, and the line-power classification when
        a ``line`` with points ``p`` and ``q`` is given.
        """
        xs = PointSet(read_points(document, "points", self.__field))
        r = optional_int(document, "r", xs.dimension)
        output: Dict[str, Any] = {"power": write_points(squarefree_power(xs, r))}
        if "line" in document:
            line = require(document, "line", dict)
            p = read_point(require(line, "p"), self.__field)
            q = read_point(require(line, "q"), self.__field)
            n = xs.dimension
            output.update(
                {
                    "line_power_form": write_form(line_power_form(p, q, n)),
                    "determinants": write_scalars(line_power_determinants(p, q, n)),
                    "condition": line_power_condition(p, q, n),
                    **self._classification(hsc_power_pipeline(xs, p, q)),
                }
            )
        return output

    def perp(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        f = read_polynomial(document)
        e = require(document, "degree", int)
        component = perp_component(f, e)
        output: Dict[str, Any] = {
            "degree": e,
            "dimension": component.dimension,
            "basis": [g.to_text() for g in component.basis],
        }
        if e <= f.degree:
            output["catalecticant_rank"] = catalecticant_rank(f, e)
        return output

    def apolar(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        points = read_points(document, "points", self.__field)
        f = read_polynomial(document, nvars=len(points[0]))
        return {"apolar": is_apolar_points(points, f)}

    def waring(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        points = read_points(document, "points", self.__field)
        f = read_polynomial(document, nvars=len(points[0]))
        alphas = waring_coefficients(points, f)
        if alphas is None:
            return {"coefficients": None, "reconstructs": False}
        return {
            "coefficients": write_scalars(alphas),
            "reconstructs": waring_reconstruct(points, alphas, f.degree) == f,
        }

    def search_ahsc(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        """Randomized search for an HSC apolar to a form."""
        f = read_polynomial(document)
        r = require(document, "r", int)
        seed = optional_int(document, "seed", self.__seed)
        attempts = optional_int(document, "attempts", self.__attempts)
        config = random_apolar_hsc(f, r, attempts=attempts, seed=seed)
        if config is None:
            return {"found": False, "seed": seed, "attempts": attempts}
        return {
            "found": True,
            "seed": seed,
            "attempts": attempts,
            "forms": [write_form(form) for form in config.forms],
            "points": write_points(config.points()),
        }

    def verify_fixtures(self, document: Mapping[str, Any]) -> Dict[str, Any]:
        reports = run_all_fixtures()
        for report in reports:
            logger.info("fixture %s: %s", report.name, "PASS" if report.passed else "FAIL")
        return {
            "passed": all(report.passed for report in reports),
            "fixtures": [
                {
                    "name": report.name,
                    "status": "PASS" if report.passed else "FAIL",
                    "checks": [
                        {"check": c.name, "passed": c.passed, "detail": c.detail}
                        for c in report.checks
                    ],
                }
                for report in reports
            ],
        }

    @staticmethod
    def _classification(result: Classification) -> Dict[str, Any]:
        output: Dict[str, Any] = {
            "verdict": result.verdict.value,
            "rank": result.reciprocal_rank,
            "hsc_route": result.hsc_route,
            "witness": None,
        }
        if result.witness is not None:
            output["witness"] = {
                "kernel_vector": write_scalars(result.witness.kernel_vector),
                "explicit": result.witness.explicit,
                "hyperplane": (
                    write_form(result.witness.hyperplane) if result.witness.explicit else None
                ),
                "points": (
                    write_points(result.witness.points) if result.witness.explicit else None
                ),
            }
        if result.config is not None and result.config.codim == result.config.dimension:
            output["points"] = write_points(result.config.points())
        return output

    @staticmethod
    def to_frame(document: Mapping[str, Any]) -> pd.DataFrame:
        """
        Tabulates an output document.

        The fixture commands give one row per check; any other command is
        flattened into a single row.
        """
        if document.get("command") in JobService.FIXTURE_COMMANDS:
            rows: List[Dict[str, Any]] = [
                {"fixture": fixture["name"], **check}
                for fixture in document["fixtures"]
                for check in fixture["checks"]
            ]
            return pd.DataFrame(rows, columns=["fixture", "check", "passed", "detail"])
        return pd.json_normalize(dict(document))
