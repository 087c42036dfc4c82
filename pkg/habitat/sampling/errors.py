from habitat.common.errors import ConfigError
from habitat.common.errors import UpstreamDataError


class SamplingError(UpstreamDataError):
    error = "sampling_error"


class EmptyPresences(SamplingError):
    error = "empty_presences"
    description = "At least one presence record is required."


class InsufficientLand(SamplingError):
    error = "insufficient_land"

    def __init__(self, target, accepted, attempts):
        self.target = target
        self.accepted = accepted
        self.attempts = attempts
        description = (
            f"only {accepted} of {target} pseudo-absences found "
            f"after {attempts} candidate draws"
        )
        super().__init__(description=description)


class AntimeridianBBox(SamplingError):
    error = "antimeridian_bbox"
    description = "Buffered region crosses the antimeridian, which is not supported."


class InvalidLandMask(ConfigError):
    error = "invalid_land_mask"
