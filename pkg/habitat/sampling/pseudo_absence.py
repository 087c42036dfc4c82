import logging
import math
from dataclasses import asdict
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import EmptyPresences
from .errors import InsufficientLand
from .geometry import buffered_bbox
from .geometry import chord_for_km
from .geometry import haversine_km_many
from .geometry import to_unit_xyz

log = logging.getLogger(__name__)

#: candidate draws allowed per requested pseudo-absence
REJECTION_BUDGET = 100

#: candidates drawn per vectorized round
BATCH_SIZE = 512


@dataclass(frozen=True)
class SamplePoint:
    latitude: float
    longitude: float
    presence: int

    def __post_init__(self):
        if self.presence not in (0, 1):
            raise ValueError('"presence" must be 0 or 1')

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(float(data["latitude"]), float(data["longitude"]), int(data["presence"]))

    @classmethod
    def from_record(cls, record):
        return cls(record.latitude, record.longitude, 1)


class PresenceIndex:
    """Neighbour lookup over presence points. Candidates from the chord
    tree are confirmed with the haversine distance, so the answer agrees
    with a brute-force scan.
    """

    def __init__(self, presences):
        self.lats = np.array([p.latitude for p in presences], dtype=float)
        self.lons = np.array([p.longitude for p in presences], dtype=float)
        self._tree = cKDTree(to_unit_xyz(self.lats, self.lons))

    def any_within(self, lat, lon, km):
        """Whether some presence lies at ``km`` or closer."""
        radius = chord_for_km(km) * (1 + 1e-9) + 1e-12
        idx = self._tree.query_ball_point(to_unit_xyz([lat], [lon])[0], radius)
        if not idx:
            return False
        dist = haversine_km_many(lat, lon, self.lats[idx], self.lons[idx])
        return bool(np.any(dist <= km))


def sample_pseudo_absences(
    presences,
    mask,
    ratio=2.0,
    exclusion_km=5.0,
    rng_seed=0,
    buffer_deg=1.0,
):
    """Draw background points labelled as absences.

    Candidates are uniform in degrees over the buffered bounding box of the
    presences. A candidate survives when it is strictly farther than
    ``exclusion_km`` from every presence and lies on land.

    :return: exactly ``ceil(ratio * len(presences))`` :class:`SamplePoint`
    """
    if not presences:
        raise EmptyPresences()

    bbox = buffered_bbox(presences, buffer_deg)
    target = math.ceil(ratio * len(presences))
    budget = REJECTION_BUDGET * target
    if not mask.intersects_bbox(bbox):
        raise InsufficientLand(target, 0, 0)

    index = PresenceIndex(presences)
    rng = np.random.default_rng(rng_seed)
    points = []
    attempts = 0
    while len(points) < target and attempts < budget:
        size = min(BATCH_SIZE, budget - attempts)
        lats = rng.uniform(bbox.lat_min, bbox.lat_max, size)
        lons = rng.uniform(bbox.lon_min, bbox.lon_max, size)
        on_land = mask.contains_many(lats, lons)
        for lat, lon, land in zip(lats, lons, on_land):
            attempts += 1
            if land and not index.any_within(lat, lon, exclusion_km):
                points.append(SamplePoint(float(lat), float(lon), 0))
                if len(points) == target:
                    break

    if len(points) < target:
        raise InsufficientLand(target, len(points), attempts)

    log.info("Sampled %d pseudo-absences in %d draws", target, attempts)
    return points
