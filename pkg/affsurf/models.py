"""Serializable result records."""

import json
import math
from typing import Any

from google_crc32c import Checksum
from pydantic import BaseModel, Field

from .constants import AspMethod, ExtremalKind, Semantics, Severity


NONFINITE = {"inf": math.inf, "-inf": -math.inf, "nan": math.nan}


def _encode_nonfinite(data: Any) -> Any:
    if isinstance(data, float) and not math.isfinite(data):
        return "nan" if math.isnan(data) else ("inf" if data > 0 else "-inf")
    if isinstance(data, dict):
        return {k: _encode_nonfinite(v) for k, v in data.items()}
    if isinstance(data, list | tuple):
        return [_encode_nonfinite(v) for v in data]
    return data


def restore_nonfinite(data: Any) -> Any:
    """Inverse of the canonical encoding: the strings "inf", "-inf" and "nan" become floats."""
    if isinstance(data, str):
        return NONFINITE.get(data, data)
    if isinstance(data, dict):
        return {k: restore_nonfinite(v) for k, v in data.items()}
    if isinstance(data, list):
        return [restore_nonfinite(v) for v in data]
    return data


def canonical_json(data: Any) -> bytes:
    """Sorted-key compact strict JSON; identical inputs give identical bytes.

    Non-finite floats are written as the strings "inf", "-inf" and "nan".
    """
    return json.dumps(_encode_nonfinite(data), sort_keys=True, separators=(",", ":"), allow_nan=False).encode("utf-8")


def fingerprint(data: Any) -> str:
    """crc32c of the canonical JSON encoding, as 8 hex digits."""
    crc = Checksum()
    crc.update(canonical_json(data))
    return crc.digest().hex()


class AspValue(BaseModel):
    """An L_p-affine surface area value and how it was obtained."""

    p: float = Field(..., description="Exponent p, possibly +-inf")
    value: float = Field(..., ge=0.0, description="as_p, +inf for divergent cases")
    method: AspMethod = Field(..., description="Evaluation method")
    error_estimate: float = Field(default=0.0, ge=0.0, description="Absolute error estimate")
    body_id: str = Field(default="", description="Label of the evaluated body")
    divergent: bool = Field(default=False, description="True when value is the flagged +inf")
    reason: str | None = Field(default=None, description="Why the value is infinite or zero by rule")
    seed: int | None = Field(default=None, description="Seed of the Monte Carlo stream, if any")

    @classmethod
    def exact(cls, p: float, value: float, method: AspMethod, **kwargs: Any) -> "AspValue":
        return cls(p=p, value=value, method=method, **kwargs)

    @classmethod
    def infinite(cls, p: float, method: AspMethod, reason: str, **kwargs: Any) -> "AspValue":
        return cls(p=p, value=math.inf, method=method, divergent=True, reason=reason, **kwargs)


class BoundReport(BaseModel):
    """One verified inequality instance lower <= value <= upper."""

    quantity: str = Field(..., description="What is being bounded")
    value: float = Field(..., description="Observed value")
    lower: float | None = Field(default=None, description="Lower bound, if any")
    upper: float | None = Field(default=None, description="Upper bound, if any")
    tolerance: float = Field(default=0.0, ge=0.0, description="Absolute slack allowed on each side")
    passed: bool = Field(..., description="Whether the inequality holds within tolerance")
    severity: Severity = Field(default=Severity.ERROR, description="How a failure is treated")
    witnesses: list[str] = Field(default_factory=list, description="Labels of witness bodies")
    detail: str = Field(default="", description="Free-form context")

    @classmethod
    def check(
        cls,
        quantity: str,
        value: float,
        lower: float | None = None,
        upper: float | None = None,
        tolerance: float = 0.0,
        **kwargs: Any,
    ) -> "BoundReport":
        ok = True
        if lower is not None:
            ok &= value >= lower - tolerance
        if upper is not None:
            ok &= value <= upper + tolerance
        return cls(quantity=quantity, value=value, lower=lower, upper=upper, tolerance=tolerance, passed=ok, **kwargs)

    @property
    def failed(self) -> bool:
        """A failure that counts against the exit code (warnings never do)."""
        return not self.passed and self.severity == Severity.ERROR


class CandidateRecord(BaseModel):
    """One evaluated candidate of an extremal search."""

    index: int = Field(..., ge=0)
    family: str = Field(..., description="Candidate family name")
    parameter: float | None = Field(default=None, description="Family parameter (scale, radius, smoothing)")
    value: float = Field(..., ge=0.0)
    label: str = ""


class ExtremalRecord(BaseModel):
    """Serializable summary of an extremal estimate."""

    kind: ExtremalKind
    p: float
    value: float = Field(..., ge=0.0)
    semantics: Semantics
    witness: str = Field(default="", description="Label of the witness body")
    error_estimate: float = Field(default=0.0, ge=0.0)
    sequence: list[float] = Field(default_factory=list, description="Witness-sequence values for range probes")
    candidates: list[CandidateRecord] = Field(default_factory=list)
    bounds: list[BoundReport] = Field(default_factory=list)


class SteinerFit(BaseModel):
    """Quermassintegrals W_0..W_n recovered from outer parallel volumes."""

    body_id: str = ""
    t_grid: list[float]
    volumes: list[float]
    W: list[float] = Field(..., description="Coefficients W_0..W_n")
    residual: float = Field(..., ge=0.0)
    exact: bool = Field(default=True, description="False when volumes carry quadrature/sampling error")


class Report(BaseModel):
    """Envelope emitted by every CLI command."""

    kind: str = Field(..., description="Command that produced the report")
    schema_version: int = Field(default=1, ge=1)
    payload: dict[str, Any] = Field(default_factory=dict)
    fingerprint: str = Field(default="", description="crc32c of the canonical payload")

    @classmethod
    def create(cls, kind: str, payload: dict[str, Any]) -> "Report":
        return cls(kind=kind, payload=payload, fingerprint=fingerprint(payload))
