"""Base codec interface for affsurf bodies and reports."""

from abc import ABC, abstractmethod
from typing import Any, ClassVar

from ..constants import OutputFormat


class Codec(ABC):
    """Base interface for affsurf codecs; each encodes one OutputFormat."""

    format: ClassVar[OutputFormat]

    @abstractmethod
    def encode(self, data: Any) -> bytes:
        """Encode data to bytes."""

    @abstractmethod
    def decode(self, data: bytes) -> Any:
        """Decode bytes to data."""
