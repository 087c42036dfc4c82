import logging

from .errors import EmptyImageError
from .models import GateResult

log = logging.getLogger(__name__)

#: identifications at or below this confidence are not passed on
DEFAULT_THRESHOLD = 0.80


def identify(image, backend, content_type="image/jpeg"):
    """Resolve image bytes to the backend's top-1 identification, unchanged."""
    if not image:
        raise EmptyImageError()
    identification = backend.identify(image, content_type=content_type)
    log.info(
        "Identified %s (confidence %.3f) via %s",
        identification.scientific_name,
        identification.confidence,
        identification.backend_id,
    )
    return identification


def gate(identification, threshold=DEFAULT_THRESHOLD):
    """Accept the identification iff its confidence is strictly above
    ``threshold``.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f'"threshold" must be in [0, 1], got {threshold!r}')
    accepted = identification.confidence > threshold
    if not accepted:
        log.warning(
            "Rejected %s: confidence %.3f is not above %.2f",
            identification.scientific_name,
            identification.confidence,
            threshold,
        )
    return GateResult(
        accepted=accepted,
        name=identification.scientific_name,
        confidence=identification.confidence,
        threshold=threshold,
    )


def guess_content_type(path):
    if str(path).lower().endswith(".png"):
        return "image/png"
    return "image/jpeg"
