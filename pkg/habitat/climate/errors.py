from habitat.common.errors import UpstreamDataError


class ClimateError(UpstreamDataError):
    error = "climate_error"


class UnsupportedFormat(ClimateError):
    error = "unsupported_format"


class CorruptFile(ClimateError):
    error = "corrupt_file"


class OutOfExtent(ClimateError):
    error = "out_of_extent"

    def __init__(self, lat, lon):
        self.lat = lat
        self.lon = lon
        super().__init__(description=f"point ({lat}, {lon}) is outside the raster")


class GridMismatch(ClimateError):
    error = "grid_mismatch"
