"""Runtime defaults read through bestconfig."""
import logging
from dataclasses import dataclass, fields
from typing import Any, Mapping, Optional

from bestconfig import Config

from hadamard_star.exceptions import ConfigurationError

SECTION = "hadamard_star"


@dataclass(frozen=True)
class Settings:
    """
    Defaults shared by the search strategies and the command line.

    Attributes
    ----------
    sample_bound : int
        Random integer coordinates are drawn from [-B, B] without zero.
    attempts : int
        Default attempt budget of the randomized searches.
    seed : int
        Default random seed.
    log_level : str
        Level name passed to ``logging.basicConfig`` by the CLI.
    format_version : int
        Version of the JSON document schema.
    """

    sample_bound: int = 100
    attempts: int = 20
    seed: int = 0
    log_level: str = "WARNING"
    format_version: int = 1

    def __post_init__(self) -> None:
        for name in ("sample_bound", "attempts", "format_version"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigurationError(f"{name} must be a positive integer, got {value!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigurationError(f"seed must be an integer, got {self.seed!r}")
        if not isinstance(logging.getLevelName(str(self.log_level).upper()), int):
            raise ConfigurationError(f"unknown log level {self.log_level!r}")

    @classmethod
    def from_mapping(cls, values: Optional[Mapping[str, Any]]) -> "Settings":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in (values or {}).items() if k in known})


def load_settings(*sources: str) -> Settings:
    """
    Read the ``hadamard_star`` section through bestconfig.

    Parameters
    ----------
    *sources : str
        Config files to read; by default bestconfig looks for its usual
        file names (``config.json`` among them) from the working directory up.

    Returns
    -------
    Settings
        Defaults overridden by whatever the section provides; a missing
        file or section yields plain defaults.
    """
    try:
        config = Config(*sources)
        section = config.get(SECTION)
    except (OSError, KeyError, ValueError):
        section = None
    if section is not None and not isinstance(section, Mapping):
        raise ConfigurationError(f"section {SECTION!r} must be a mapping")
    return Settings.from_mapping(section)
