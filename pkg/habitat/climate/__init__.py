"""habitat.climate.
~~~~~~~~~~~~~~~~~

Bioclimatic feature extraction from WorldClim rasters by nearest-cell
lookup.
"""

from .errors import ClimateError
from .errors import CorruptFile
from .errors import GridMismatch
from .errors import OutOfExtent
from .errors import UnsupportedFormat
from .extract import DEFAULT_PATTERN
from .extract import BioclimVector
from .extract import check_grids
from .extract import extract_features
from .extract import load_bioclim
from .raster import RasterGrid
from .raster import load_ascii_grid
from .raster import load_geotiff
from .raster import load_raster
from .raster import value_at
from .raster import write_ascii_grid
from .raster import write_geotiff
from .variables import BIO_LONG_NAMES
from .variables import BIO_UNITS
from .variables import BIO_VARIABLES
from .variables import long_name
from .variables import normalize_variable

__all__ = [
    "RasterGrid",
    "BioclimVector",
    "load_raster",
    "load_geotiff",
    "load_ascii_grid",
    "write_geotiff",
    "write_ascii_grid",
    "value_at",
    "extract_features",
    "check_grids",
    "load_bioclim",
    "DEFAULT_PATTERN",
    "BIO_VARIABLES",
    "BIO_LONG_NAMES",
    "BIO_UNITS",
    "long_name",
    "normalize_variable",
    "ClimateError",
    "UnsupportedFormat",
    "CorruptFile",
    "OutOfExtent",
    "GridMismatch",
]
