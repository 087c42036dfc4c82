import json
import logging

import numpy as np
import shapely
from shapely.geometry import Point
from shapely.geometry import Polygon
from shapely.geometry import box
from shapely.geometry import shape
from shapely.strtree import STRtree

from .errors import InvalidLandMask

log = logging.getLogger(__name__)


def _close_ring(ring):
    ring = [tuple(map(float, v[:2])) for v in ring]
    if ring and ring[0] != ring[-1]:
        ring.append(ring[0])
    return ring


def _iter_polygons(geometry):
    if geometry.geom_type == "Polygon":
        yield geometry
    elif geometry.geom_type == "MultiPolygon":
        yield from geometry.geoms
    elif geometry.geom_type == "GeometryCollection":
        for geom in geometry.geoms:
            yield from _iter_polygons(geom)


class LandMask:
    """Immutable set of land polygons in WGS84 ``(lon, lat)`` order with an
    STRtree over their bounding boxes. Interior rings are water.
    """

    def __init__(self, polygons):
        self.polygons = tuple(polygons)
        self.bounds = np.array([p.bounds for p in self.polygons]).reshape(-1, 4)
        self._tree = STRtree(self.polygons) if self.polygons else None

    def __len__(self):
        return len(self.polygons)

    @classmethod
    def from_polygons(cls, rings):
        """Build from sequences of ``(lon, lat)`` rings. Each item is either
        an exterior ring or a tuple ``(exterior, [holes...])``.
        """
        polygons = []
        for item in rings:
            if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], list):
                exterior, holes = item
            else:
                exterior, holes = item, []
            polygons.append(Polygon(_close_ring(exterior), [_close_ring(h) for h in holes]))
        return cls(polygons)

    @classmethod
    def from_geojson(cls, path):
        """Load a FeatureCollection, Feature or bare geometry of Polygons and
        MultiPolygons.
        """
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, ValueError) as error:
            raise InvalidLandMask(description=f"cannot read {path}: {error}") from error
        return cls.from_geojson_dict(data)

    @classmethod
    def from_geojson_dict(cls, data):
        kind = data.get("type")
        if kind == "FeatureCollection":
            geometries = [f.get("geometry") for f in data.get("features", [])]
        elif kind == "Feature":
            geometries = [data.get("geometry")]
        else:
            geometries = [data]

        polygons = []
        for geometry in geometries:
            if not geometry:
                continue
            try:
                geom = shape(geometry)
            except (AttributeError, KeyError, TypeError, ValueError) as error:
                raise InvalidLandMask(description=f"invalid geometry: {error}") from error
            polygons.extend(_iter_polygons(geom))
        log.debug("Loaded land mask with %d polygons", len(polygons))
        return cls(polygons)

    def intersects_bbox(self, bbox):
        if not self.polygons:
            return False
        return len(self._tree.query(box(*bbox.bounds), predicate="intersects")) > 0

    def contains(self, lat, lon):
        """Edge and vertex points count as land."""
        if not self.polygons:
            return False
        hits = self._tree.query(Point(lon, lat), predicate="covered_by")
        return len(hits) > 0

    def contains_many(self, lats, lons):
        """Vectorized :meth:`contains`; returns a boolean array."""
        lats = np.asarray(lats, dtype=float)
        rv = np.zeros(lats.shape, dtype=bool)
        if not self.polygons or not lats.size:
            return rv
        points = shapely.points(np.asarray(lons, dtype=float), lats)
        idx, _ = self._tree.query(points, predicate="covered_by")
        rv[np.unique(idx)] = True
        return rv


def point_on_land(p, mask):
    """Whether ``p = (lat, lon)`` falls on a land polygon of ``mask``."""
    lat, lon = p
    return mask.contains(lat, lon)
