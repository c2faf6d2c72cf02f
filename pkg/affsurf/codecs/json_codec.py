"""JSON codec for convex bodies and run reports."""

import json
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel

from ..constants import BodyType, OutputFormat
from ..errors import AffsurfError, InvalidBody, UnsupportedBody
from ..geometry import Ball, ConvexBody, Ellipsoid, HPolytope, SupportBody2D, VPolytope
from ..models import Report, canonical_json, restore_nonfinite
from .base import Codec


def body_to_dict(body: ConvexBody) -> dict[str, Any]:
    """JSON-ready description of a body; arrays become nested lists."""
    if isinstance(body, HPolytope):
        fields = {"type": BodyType.HPOLYTOPE, "normals": body.normals, "offsets": body.offsets}
    elif isinstance(body, VPolytope):
        fields = {"type": BodyType.VPOLYTOPE, "points": body.points}
    elif isinstance(body, Ball):
        fields = {"type": BodyType.BALL, "center": body.center, "radius": body.radius}
    elif isinstance(body, Ellipsoid):
        fields = {"type": BodyType.ELLIPSOID, "center": body.center, "shape": body.shape}
    elif isinstance(body, SupportBody2D):
        fields = {"type": BodyType.SUPPORT2D, "h": body.h}
    else:
        raise UnsupportedBody(f"{type(body).__name__} has no JSON form")
    out = {k: v.tolist() if isinstance(v, np.ndarray) else v for k, v in fields.items()}
    out["type"] = str(out["type"])
    out["label"] = body.label
    return out


def body_from_dict(data: dict[str, Any]) -> ConvexBody:
    """Rebuild a body; the constructors validate shapes, convexity and positivity.

    Bodies are taken as given: nothing is re-centered on load.
    """
    try:
        kind = BodyType(data["type"])
        label = str(data.get("label", ""))
        if kind == BodyType.HPOLYTOPE:
            return HPolytope(np.asarray(data["normals"], dtype=float), np.asarray(data["offsets"], dtype=float), label)
        if kind == BodyType.VPOLYTOPE:
            return VPolytope(np.asarray(data["points"], dtype=float), label)
        if kind == BodyType.BALL:
            return Ball(np.asarray(data["center"], dtype=float), float(data["radius"]), label)
        if kind == BodyType.ELLIPSOID:
            return Ellipsoid(np.asarray(data["center"], dtype=float), np.asarray(data["shape"], dtype=float), label)
        return SupportBody2D.from_values(np.asarray(data["h"], dtype=float), recenter=False, label=label)
    except AffsurfError:
        raise
    except KeyError as exc:
        raise InvalidBody(f"body description is missing field {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise InvalidBody(f"malformed body description: {exc}") from exc


def load_body(path: str | Path) -> ConvexBody:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidBody(f"cannot read body file {path}: {exc}") from exc
    return JSONCodec().decode(text.encode("utf-8"))


def dump_body(body: ConvexBody, path: str | Path) -> None:
    Path(path).write_bytes(JSONCodec().encode(body))


class JSONCodec(Codec):
    """Canonical strict JSON: sorted keys, compact separators, full float precision, "inf" for infinities."""

    format = OutputFormat.JSON

    def encode(self, data: Any) -> bytes:
        """Encode a Report, any pydantic record, a body or plain JSON data."""
        if isinstance(data, BaseModel):
            json_data = data.model_dump()
        elif isinstance(data, HPolytope | VPolytope | Ball | Ellipsoid | SupportBody2D):
            json_data = body_to_dict(data)
        else:
            json_data = data
        return canonical_json(json_data)

    def decode(self, data: bytes) -> Any:
        """Decode to a Report, a body, or plain data, by structure."""
        try:
            decoded = restore_nonfinite(json.loads(data.decode("utf-8")))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise InvalidBody(f"not valid JSON: {exc}") from exc
        if isinstance(decoded, dict) and "kind" in decoded and "schema_version" in decoded:
            return Report(**decoded)
        if isinstance(decoded, dict) and "type" in decoded:
            return body_from_dict(decoded)
        return decoded
