"""Module provides the schema definitions for the settings file."""

import logging
from typing import Self

from pydantic import BaseModel, model_validator

from perfect_forests.oracle import (
    DEFAULT_CYCLE_VERTEX_CAP,
    DEFAULT_EDGE_CAP,
    DEFAULT_INDSET_VERTEX_CAP,
    DEFAULT_SAT_VAR_CAP,
    OracleLimits,
)

log: logging.Logger = logging.getLogger(__name__)


class OracleSettings(BaseModel):
    """Represents the caps and parallelism of the brute-force oracles."""

    edge_cap: int = DEFAULT_EDGE_CAP
    cycle_vertex_cap: int = DEFAULT_CYCLE_VERTEX_CAP
    sat_var_cap: int = DEFAULT_SAT_VAR_CAP
    indset_vertex_cap: int = DEFAULT_INDSET_VERTEX_CAP
    jobs: int = 1

    @model_validator(mode="after")
    def positive_caps(self) -> Self:
        """Reject caps and worker counts below one."""
        for name in ("edge_cap", "cycle_vertex_cap", "sat_var_cap", "indset_vertex_cap", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        return self

    def limits(self) -> OracleLimits:
        """Return the caps in the form the oracles take."""
        return OracleLimits(
            edge_cap=self.edge_cap,
            cycle_vertex_cap=self.cycle_vertex_cap,
            sat_var_cap=self.sat_var_cap,
            indset_vertex_cap=self.indset_vertex_cap,
            jobs=self.jobs,
        )


class CertifySettings(BaseModel):
    """
    Represents the settings of a certification run.

    Attributes
    ----------
        seed (int): Seed of the random corpus
        trials (int): Random instances per check
        max_vertices (int): Largest graph drawn

    """

    seed: int = 0
    trials: int = 50
    max_vertices: int = 8

    @model_validator(mode="after")
    def sensible_sizes(self) -> Self:
        """Validate trial count and graph size."""
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.max_vertices < 2:
            raise ValueError(f"max_vertices must be at least 2, got {self.max_vertices}")
        return self


class Settings(BaseModel):
    """Represents the whole settings file."""

    oracle: OracleSettings = OracleSettings()
    certify: CertifySettings = CertifySettings()
