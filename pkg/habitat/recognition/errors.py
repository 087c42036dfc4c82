from habitat.common.errors import UpstreamDataError


class RecognitionError(UpstreamDataError):
    error = "recognition_error"


class BackendUnavailable(RecognitionError):
    error = "backend_unavailable"


class MalformedResponse(RecognitionError):
    error = "malformed_response"


class EmptyImageError(RecognitionError):
    error = "empty_image"
    description = "Image must not be empty."
