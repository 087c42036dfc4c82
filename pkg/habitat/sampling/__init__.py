"""habitat.sampling.
~~~~~~~~~~~~~~~~~~

Pseudo-absence background points: buffered bounding box, twice as many
points as presences, an exclusion radius around every presence and a
land mask.
"""

from .errors import AntimeridianBBox
from .errors import EmptyPresences
from .errors import InsufficientLand
from .errors import InvalidLandMask
from .errors import SamplingError
from .geometry import EARTH_RADIUS_KM
from .geometry import BoundingBox
from .geometry import buffered_bbox
from .geometry import haversine_km
from .geometry import haversine_km_many
from .land_mask import LandMask
from .land_mask import point_on_land
from .pseudo_absence import PresenceIndex
from .pseudo_absence import SamplePoint
from .pseudo_absence import sample_pseudo_absences

__all__ = [
    "BoundingBox",
    "LandMask",
    "SamplePoint",
    "PresenceIndex",
    "buffered_bbox",
    "haversine_km",
    "haversine_km_many",
    "point_on_land",
    "sample_pseudo_absences",
    "EARTH_RADIUS_KM",
    "SamplingError",
    "EmptyPresences",
    "InsufficientLand",
    "AntimeridianBBox",
    "InvalidLandMask",
]
