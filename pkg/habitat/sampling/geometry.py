import math
from dataclasses import dataclass

import numpy as np

from .errors import AntimeridianBBox
from .errors import EmptyPresences

#: mean Earth radius in kilometers
EARTH_RADIUS_KM = 6371.0


@dataclass(frozen=True)
class BoundingBox:
    lat_min: float
    lat_max: float
    lon_min: float
    lon_max: float

    def __post_init__(self):
        if not self.lat_min < self.lat_max:
            raise ValueError("lat_min must be below lat_max")
        if not self.lon_min < self.lon_max:
            raise ValueError("lon_min must be below lon_max")
        if self.lat_min < -90.0 or self.lat_max > 90.0:
            raise ValueError("latitude bounds must lie within [-90, 90]")

    def contains(self, lat, lon):
        return self.lat_min <= lat <= self.lat_max and self.lon_min <= lon <= self.lon_max

    @property
    def bounds(self):
        """Shapely ordering: (minx, miny, maxx, maxy)."""
        return self.lon_min, self.lat_min, self.lon_max, self.lat_max

    def to_dict(self):
        return {
            "lat_min": self.lat_min,
            "lat_max": self.lat_max,
            "lon_min": self.lon_min,
            "lon_max": self.lon_max,
        }


def buffered_bbox(presences, buffer_deg=1.0):
    """Bounding box of the presences widened by ``buffer_deg`` on every
    side; latitudes are clamped to the poles.

    :param presences: objects with ``latitude`` and ``longitude``
    """
    if not presences:
        raise EmptyPresences()

    lats = [p.latitude for p in presences]
    lons = [p.longitude for p in presences]
    lat_min = max(min(lats) - buffer_deg, -90.0)
    lat_max = min(max(lats) + buffer_deg, 90.0)
    lon_min = min(lons) - buffer_deg
    lon_max = max(lons) + buffer_deg
    if lon_min < -180.0 or lon_max > 180.0:
        raise AntimeridianBBox()
    return BoundingBox(lat_min, lat_max, lon_min, lon_max)


def haversine_km(a, b):
    """Great-circle distance between two (lat, lon) pairs in degrees."""
    lat1, lon1 = map(math.radians, a)
    lat2, lon2 = map(math.radians, b)
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    h = math.sin(dlat / 2) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2) ** 2
    return 2 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(h)))


def haversine_km_many(lat, lon, lats, lons):
    """Vectorized :func:`haversine_km` from one point to arrays of points."""
    lat1, lon1 = np.radians(lat), np.radians(lon)
    lat2, lon2 = np.radians(lats), np.radians(lons)
    h = (
        np.sin((lat2 - lat1) / 2) ** 2
        + np.cos(lat1) * np.cos(lat2) * np.sin((lon2 - lon1) / 2) ** 2
    )
    return 2 * EARTH_RADIUS_KM * np.arcsin(np.minimum(1.0, np.sqrt(h)))


def to_unit_xyz(lats, lons):
    lat = np.radians(np.asarray(lats, dtype=float))
    lon = np.radians(np.asarray(lons, dtype=float))
    return np.column_stack(
        [np.cos(lat) * np.cos(lon), np.cos(lat) * np.sin(lon), np.sin(lat)]
    )


def chord_for_km(km):
    """Straight-line distance on the unit sphere matching an arc of ``km``."""
    return 2.0 * math.sin(min(km / (2.0 * EARTH_RADIUS_KM), math.pi / 2))
