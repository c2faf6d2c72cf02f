"""Report and body codecs, registered by the OutputFormat they write."""

from ..constants import OutputFormat
from .base import Codec
from .csv_codec import CSVCodec
from .json_codec import JSONCodec, body_from_dict, body_to_dict, dump_body, load_body

__all__ = [
    "Codec",
    "CSVCodec",
    "JSONCodec",
    "body_from_dict",
    "body_to_dict",
    "dump_body",
    "load_body",
    "register_codec",
    "get_codec",
    "list_codecs",
]


_CODECS: dict[OutputFormat, type[Codec]] = {}


def register_codec(codec_class: type[Codec]) -> None:
    """Register a codec under its declared format; a later registration replaces an earlier one."""
    _CODECS[codec_class.format] = codec_class


def get_codec(fmt: OutputFormat | int | str) -> Codec:
    """Codec instance for a format given as enum, numeric id or name ("json", "csv")."""
    try:
        key = OutputFormat[fmt.upper()] if isinstance(fmt, str) else OutputFormat(fmt)
    except (KeyError, ValueError):
        raise ValueError(f"Unknown output format: {fmt!r}") from None
    if key not in _CODECS:
        raise ValueError(f"No codec for output format {key.name}")
    return _CODECS[key]()


def list_codecs() -> list[OutputFormat]:
    """Formats with a registered codec, in registration order."""
    return list(_CODECS)


register_codec(JSONCodec)
register_codec(CSVCodec)
