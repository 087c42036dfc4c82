import logging
import math
import os
from dataclasses import dataclass

import numpy as np

from habitat.common.errors import MissingInput

from .errors import GridMismatch
from .raster import load_raster
from .variables import BIO_VARIABLES

log = logging.getLogger(__name__)

#: WorldClim 2.1 file naming at 2.5 arc-minutes
DEFAULT_PATTERN = "wc2.1_2.5m_bio_{i}.tif"


@dataclass(frozen=True)
class BioclimVector:
    """BIO1..BIO19 at one point, in WorldClim units."""

    bio: tuple

    def __post_init__(self):
        if len(self.bio) != len(BIO_VARIABLES):
            raise ValueError(f"expected {len(BIO_VARIABLES)} values, got {len(self.bio)}")
        if not all(math.isfinite(v) for v in self.bio):
            raise ValueError("bioclimatic values must be finite")

    def __getitem__(self, name):
        return self.bio[BIO_VARIABLES.index(name)]

    def to_dict(self):
        return dict(zip(BIO_VARIABLES, self.bio))


def load_bioclim(climate_dir, pattern=DEFAULT_PATTERN):
    """Load the 19 bioclimatic layers of ``climate_dir`` in BIO order."""
    if not os.path.isdir(climate_dir):
        raise MissingInput(climate_dir, "climate directory")
    paths = [os.path.join(climate_dir, pattern.format(i=i)) for i in range(1, 20)]
    rasters = []
    for path in paths:
        log.debug("Loading %s", path)
        rasters.append(load_raster(path))
    return rasters


def check_grids(rasters):
    if len(rasters) != len(BIO_VARIABLES):
        raise GridMismatch(description=f"expected 19 rasters, got {len(rasters)}")
    reference = rasters[0].geotransform
    for i, grid in enumerate(rasters[1:], 2):
        if grid.geotransform != reference:
            raise GridMismatch(
                description=f"BIO{i} grid {grid.geotransform} differs from BIO1 {reference}"
            )


def extract_features(points, rasters):
    """Sample every raster at every point.

    A point is kept iff all 19 values are present; points outside the
    raster extent count as missing. Output order follows input order.

    :return: ``(list of (point, BioclimVector), dropped_count)``
    """
    check_grids(rasters)
    if not points:
        return [], 0

    lats = np.array([p.latitude for p in points], dtype=float)
    lons = np.array([p.longitude for p in points], dtype=float)
    rows, cols = rasters[0].cell_indices(lats, lons)
    inside = rows >= 0

    table = np.full((len(points), len(rasters)), np.nan)
    keep = inside.copy()
    for j, grid in enumerate(rasters):
        values = grid.values[rows[inside], cols[inside]].astype(float)
        column = np.full(len(points), np.nan)
        column[inside] = values
        keep &= ~grid.is_nodata(column)
        table[:, j] = column

    kept = [
        (point, BioclimVector(tuple(float(v) for v in table[i])))
        for i, point in enumerate(points)
        if keep[i]
    ]
    dropped = len(points) - len(kept)
    if dropped:
        log.info("Dropped %d of %d points on missing climate cells", dropped, len(points))
    return kept, dropped
