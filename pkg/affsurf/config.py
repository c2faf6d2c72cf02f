"""Run configuration shared by the CLI and the verification suites."""

import os
from typing import Any

from pydantic import BaseModel, Field, field_validator

from .constants import (
    BURN_IN,
    C_THIN,
    DEFAULT_GRID,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOLERANCES,
    OutputFormat,
)

THREADS_ENV = "AFFSURF_THREADS"


class RunConfig(BaseModel):
    """Numerical settings for one run; fixed seed means identical reports."""

    seed: int = Field(default=DEFAULT_SEED, ge=0, description="Root seed of every random stream")
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1, description="Monte Carlo sample count")
    quadrature_grid: int = Field(default=DEFAULT_GRID, ge=64, description="Support-function grid size m")
    tolerances: dict[str, float] = Field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    p_grid: list[float] = Field(default_factory=lambda: [0.5, 1.0, 1.5, 2.0])
    dim: int = Field(default=2, ge=2, description="Ambient dimension for generated bodies")
    output_format: OutputFormat = Field(default=OutputFormat.JSON)
    c_thin: float = Field(default=C_THIN, ge=0.0, description="Thin-shell width constant")
    threads: int = Field(default=1, ge=1, description="Worker threads for independent evaluations")
    chains: int = Field(default=8, ge=1, description="Independent hit-and-run chains")
    burn_in: int = Field(default=BURN_IN, ge=0, description="Chord steps between recorded samples")

    @field_validator("tolerances")
    @classmethod
    def _fill_tolerances(cls, value: dict[str, float]) -> dict[str, float]:
        unknown = set(value) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise ValueError(f"unknown tolerance keys: {sorted(unknown)}")
        if any(v <= 0 for v in value.values()):
            raise ValueError("tolerances must be positive")
        return {**DEFAULT_TOLERANCES, **value}

    def tol(self, key: str) -> float:
        return self.tolerances[key]

    @classmethod
    def from_env(cls, **overrides: Any) -> "RunConfig":
        """Defaults, then AFFSURF_THREADS, then explicit overrides (None values ignored)."""
        values: dict[str, Any] = {}
        raw = os.environ.get(THREADS_ENV, "").strip()
        if raw:
            try:
                values["threads"] = max(1, int(raw))
            except ValueError:
                values["threads"] = 1
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
