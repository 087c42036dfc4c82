import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Identification:
    """Top-1 answer of an identifier backend."""

    scientific_name: str
    confidence: float
    backend_id: str

    def __post_init__(self):
        if not self.scientific_name or not self.scientific_name.strip():
            raise ValueError('"scientific_name" must not be empty')
        if not math.isfinite(self.confidence) or not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f'"confidence" must be in [0, 1], got {self.confidence!r}')

    def to_dict(self):
        return {
            "scientific_name": self.scientific_name,
            "confidence": self.confidence,
            "backend_id": self.backend_id,
        }


@dataclass(frozen=True)
class GateResult:
    """Outcome of the confidence gate. A rejection is a normal value."""

    accepted: bool
    name: str
    confidence: float
    threshold: float

    def __bool__(self):
        return self.accepted
