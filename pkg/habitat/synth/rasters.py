import logging
import os

import numpy as np

from habitat.climate.extract import DEFAULT_PATTERN
from habitat.climate.raster import RasterGrid
from habitat.climate.raster import write_ascii_grid
from habitat.climate.raster import write_geotiff

from .generate import spawn_rng

log = logging.getLogger(__name__)

NODATA = -9999.0

#: (bio, parent, weight) links planted between layers
LAYER_LINKS = (
    (6, 11, 0.8),
    (1, 11, 0.6),
    (7, 10, 0.7),
    (5, 10, 0.5),
    (18, 12, 0.5),
)


def synthetic_layers(bounds, cell_size=0.05, seed=0):
    """19 analytic bioclimatic layers over ``bounds = (lon_min, lat_min,
    lon_max, lat_max)``: a latitude gradient on BIO10/BIO11/BIO12, a few
    planted linear links between layers and independent cell noise.

    :return: list of :class:`RasterGrid` in BIO order
    """
    lon_min, lat_min, lon_max, lat_max = bounds
    ncols = int(round((lon_max - lon_min) / cell_size))
    nrows = int(round((lat_max - lat_min) / cell_size))
    rng = spawn_rng(seed, 0)

    lat_centres = lat_max - (np.arange(nrows) + 0.5) * cell_size
    gradient = np.repeat(((lat_centres - lat_centres.mean()) / 2.0)[:, None], ncols, axis=1)

    layers = {i: rng.standard_normal((nrows, ncols)) for i in range(1, 20)}
    layers[10] = layers[10] - gradient
    layers[11] = layers[11] - 1.5 * gradient
    layers[12] = layers[12] + gradient
    for bio, parent, weight in LAYER_LINKS:
        layers[bio] = layers[bio] + weight * layers[parent]

    return [
        RasterGrid(
            ncols=ncols,
            nrows=nrows,
            x_origin=lon_min,
            y_origin=lat_max,
            cell_size=cell_size,
            nodata=NODATA,
            values=layers[i].astype("float32"),
        )
        for i in range(1, 20)
    ]


def write_synthetic_rasters(
    directory, bounds, cell_size=0.05, seed=0, pattern=DEFAULT_PATTERN, ascii=False
):
    """Write :func:`synthetic_layers` as files named by ``pattern``."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, grid in enumerate(synthetic_layers(bounds, cell_size, seed), 1):
        path = os.path.join(directory, pattern.format(i=i))
        if ascii:
            write_ascii_grid(path, grid)
        else:
            write_geotiff(path, grid)
        paths.append(path)
    log.info("Wrote %d synthetic rasters to %s", len(paths), directory)
    return paths
