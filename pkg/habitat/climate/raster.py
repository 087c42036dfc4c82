"""habitat.climate.raster.
~~~~~~~~~~~~~~~~~~~~~~~~

Single-band rasters in WGS84: GeoTIFF (Float32 or Int16, uncompressed or
DEFLATE) read through rasterio, and ESRI ASCII grids for small fixtures.
"""

import logging
import math
import os
from dataclasses import dataclass

import numpy as np
import rasterio
from rasterio.errors import RasterioError
from rasterio.transform import from_origin

from habitat.common.errors import MissingInput

from .errors import CorruptFile
from .errors import OutOfExtent
from .errors import UnsupportedFormat

log = logging.getLogger(__name__)

SUPPORTED_DTYPES = ("float32", "int16")
SUPPORTED_COMPRESSION = (None, "deflate")
ASCII_EXTENSIONS = (".asc", ".txt", ".grd")


@dataclass(frozen=True, eq=False)
class RasterGrid:
    """North-up grid; ``(x_origin, y_origin)`` is the upper-left corner and
    ``values`` has shape ``(nrows, ncols)``.
    """

    ncols: int
    nrows: int
    x_origin: float
    y_origin: float
    cell_size: float
    nodata: float
    values: np.ndarray

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError('"cell_size" must be positive')
        if self.values.shape != (self.nrows, self.ncols):
            raise ValueError("values do not match ncols x nrows")

    @property
    def geotransform(self):
        return (self.ncols, self.nrows, self.x_origin, self.y_origin, self.cell_size)

    def is_nodata(self, value):
        value = np.asarray(value, dtype=float)
        if self.nodata is None or math.isnan(self.nodata):
            return np.isnan(value)
        return np.isnan(value) | (value == self.nodata)

    def cell_index(self, lat, lon):
        """Return ``(row, col)`` of the cell holding the point."""
        col = math.floor((lon - self.x_origin) / self.cell_size)
        row = math.floor((self.y_origin - lat) / self.cell_size)
        if not (0 <= col < self.ncols and 0 <= row < self.nrows):
            raise OutOfExtent(lat, lon)
        return row, col

    def cell_indices(self, lats, lons):
        """Vectorized :meth:`cell_index`; out-of-extent cells are -1."""
        cols = np.floor((np.asarray(lons, dtype=float) - self.x_origin) / self.cell_size)
        rows = np.floor((self.y_origin - np.asarray(lats, dtype=float)) / self.cell_size)
        inside = (cols >= 0) & (cols < self.ncols) & (rows >= 0) & (rows < self.nrows)
        rows = np.where(inside, rows, -1).astype(int)
        cols = np.where(inside, cols, -1).astype(int)
        return rows, cols


def value_at(grid, lat, lon):
    """Nearest-cell value; may equal ``grid.nodata``."""
    row, col = grid.cell_index(lat, lon)
    return float(grid.values[row, col])


def load_raster(path):
    path = os.fspath(path)
    if not os.path.exists(path):
        raise MissingInput(path, "raster")
    if path.lower().endswith(ASCII_EXTENSIONS):
        return load_ascii_grid(path)
    return load_geotiff(path)


def load_geotiff(path):
    try:
        with rasterio.open(path) as src:
            if src.count != 1:
                raise UnsupportedFormat(description=f"{path} has {src.count} bands")
            dtype = src.dtypes[0]
            if dtype not in SUPPORTED_DTYPES:
                raise UnsupportedFormat(description=f"{path} has data type {dtype}")
            compression = src.compression.value.lower() if src.compression else None
            if compression not in SUPPORTED_COMPRESSION:
                raise UnsupportedFormat(description=f"{path} uses {compression} compression")

            t = src.transform
            if t.b != 0 or t.d != 0 or not math.isclose(t.a, -t.e, rel_tol=1e-9):
                raise UnsupportedFormat(description=f"{path} is not a north-up square grid")
            values = src.read(1)
            nodata = src.nodata
    except RasterioError as error:
        raise CorruptFile(description=f"cannot read {path}: {error}") from error

    return RasterGrid(
        ncols=values.shape[1],
        nrows=values.shape[0],
        x_origin=t.c,
        y_origin=t.f,
        cell_size=t.a,
        nodata=float("nan") if nodata is None else float(nodata),
        values=values,
    )


ASCII_HEADER_KEYS = {
    "ncols",
    "nrows",
    "xllcorner",
    "yllcorner",
    "xllcenter",
    "yllcenter",
    "cellsize",
    "nodata_value",
}


def load_ascii_grid(path):
    """Read an ESRI ASCII grid. ``*llcenter`` headers are shifted to the
    corner convention.
    """
    header = {}
    try:
        with open(path, encoding="ascii") as f:
            lines = f.read().splitlines()
    except (OSError, UnicodeDecodeError) as error:
        raise CorruptFile(description=f"cannot read {path}: {error}") from error

    body_start = 0
    for i, line in enumerate(lines):
        parts = line.split()
        if len(parts) == 2 and parts[0].lower() in ASCII_HEADER_KEYS:
            header[parts[0].lower()] = parts[1]
            body_start = i + 1
        else:
            break

    try:
        ncols = int(header["ncols"])
        nrows = int(header["nrows"])
        cell_size = float(header["cellsize"])
        nodata = float(header.get("nodata_value", "-9999"))
        if "xllcorner" in header:
            x_origin = float(header["xllcorner"])
        else:
            x_origin = float(header["xllcenter"]) - cell_size / 2
        if "yllcorner" in header:
            y_lower = float(header["yllcorner"])
        else:
            y_lower = float(header["yllcenter"]) - cell_size / 2
    except (KeyError, ValueError) as error:
        raise CorruptFile(description=f"invalid ASCII grid header in {path}") from error

    try:
        values = np.array(" ".join(lines[body_start:]).split(), dtype=float)
    except ValueError as error:
        raise CorruptFile(description=f"non-numeric cell in {path}") from error
    if values.size != ncols * nrows:
        raise CorruptFile(
            description=f"{path} holds {values.size} cells, expected {ncols * nrows}"
        )

    return RasterGrid(
        ncols=ncols,
        nrows=nrows,
        x_origin=x_origin,
        y_origin=y_lower + nrows * cell_size,
        cell_size=cell_size,
        nodata=nodata,
        values=values.reshape(nrows, ncols),
    )


def write_geotiff(path, grid, dtype="float32", compress="deflate"):
    """Write ``grid`` as a single-band GeoTIFF in EPSG:4326."""
    if dtype not in SUPPORTED_DTYPES:
        raise UnsupportedFormat(description=f"cannot write data type {dtype}")
    options = {}
    if compress:
        options["compress"] = compress
    nodata = None if grid.nodata is None or math.isnan(grid.nodata) else grid.nodata
    with rasterio.open(
        path,
        "w",
        driver="GTiff",
        height=grid.nrows,
        width=grid.ncols,
        count=1,
        dtype=dtype,
        crs="EPSG:4326",
        transform=from_origin(grid.x_origin, grid.y_origin, grid.cell_size, grid.cell_size),
        nodata=nodata,
        **options,
    ) as dst:
        dst.write(np.asarray(grid.values, dtype=dtype), 1)


def write_ascii_grid(path, grid):
    nodata = -9999.0 if grid.nodata is None or math.isnan(grid.nodata) else grid.nodata
    values = np.where(np.isnan(grid.values), nodata, grid.values)
    with open(path, "w", encoding="ascii") as f:
        f.write(f"ncols {grid.ncols}\n")
        f.write(f"nrows {grid.nrows}\n")
        f.write(f"xllcorner {grid.x_origin!r}\n")
        f.write(f"yllcorner {grid.y_origin - grid.nrows * grid.cell_size!r}\n")
        f.write(f"cellsize {grid.cell_size!r}\n")
        f.write(f"NODATA_value {nodata!r}\n")
        for row in values:
            f.write(" ".join(repr(float(v)) for v in row) + "\n")
