from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, List

import pandas as pd

from hadamard_star.exceptions import HadamardStarError


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact check inside a fixture."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class FixtureReport:
    """
    Pass/fail report of a fixture.

    Attributes
    ----------
    name : str
        The fixture name.
    checks : list of CheckResult
        One entry per exact check, in the order they were run.
    """

    name: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(check.passed for check in self.checks)

    def to_frame(self) -> pd.DataFrame:
        """
        Tabulate the checks.

        Returns
        -------
        pd.DataFrame
            Columns ``fixture``, ``check``, ``passed`` and ``detail``.
        """
        return pd.DataFrame(
            [
                {"fixture": self.name, "check": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
            columns=["fixture", "check", "passed", "detail"],
        )


class Fixture(ABC):
    """
    Abstract base class for a worked example replayed in exact arithmetic.

    Subclasses must implement build and validate.

    Methods
    -------
    build()
        Construct the objects the example talks about.
    validate(data)
        Run the exact checks on the built objects.
    run()
        Build, validate and collect a FixtureReport.
    """

    name: str = ""

    @abstractmethod
    def build(self) -> Any:
        """
        Construct the example data.

        Raises
        ------
        NotImplementedError
            If the subclass does not implement this method.
        """
        raise NotImplementedError("The build method must be implemented by subclasses.")

    @abstractmethod
    def validate(self, data: Any) -> List[CheckResult]:
        """
        Check the built data.

        Parameters
        ----------
        data : Any
            Whatever ``build`` returned.

        Raises
        ------
        NotImplementedError
            If the subclass does not implement this method.
        """
        raise NotImplementedError("The validate method must be implemented by subclasses.")

    def run(self) -> FixtureReport:
        """Build and validate; a domain error becomes a failed check."""
        try:
            checks = self.validate(self.build())
        except (HadamardStarError, ZeroDivisionError) as exc:
            checks = [CheckResult("build", False, f"{type(exc).__name__}: {exc}")]
        return FixtureReport(self.name, checks)
