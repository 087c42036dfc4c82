import math
from dataclasses import asdict
from dataclasses import dataclass

#: earliest observation year kept
MIN_YEAR = 2000


@dataclass(frozen=True)
class TaxonMatch:
    usage_key: int
    matched_name: str
    match_type: str
    rank: str = None
    status: str = None

    def __post_init__(self):
        if self.match_type != "NONE" and (self.usage_key is None or self.usage_key <= 0):
            raise ValueError('"usage_key" must be positive for a match')

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class OccurrenceRecord:
    """One geo-referenced human observation."""

    latitude: float
    longitude: float
    year: int
    event_date: str = None
    dataset_source: str = ""
    scientific_name: str = ""
    gbif_id: int = None

    def validate(self):
        if not (math.isfinite(self.latitude) and math.isfinite(self.longitude)):
            raise ValueError("coordinates must be finite")
        if not -90.0 <= self.latitude <= 90.0:
            raise ValueError(f"latitude out of range: {self.latitude}")
        if not -180.0 <= self.longitude <= 180.0:
            raise ValueError(f"longitude out of range: {self.longitude}")
        if self.year is None or self.year < MIN_YEAR:
            raise ValueError(f"year before {MIN_YEAR}: {self.year}")

    @property
    def coordinates(self):
        return self.latitude, self.longitude

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)
