"""habitat.recognition.
~~~~~~~~~~~~~~~~~~~~~

Resolve an input image to a scientific species name through a pluggable
identifier backend, and gate the answer on its confidence.
"""

from .backends import BACKENDS_REGISTRY
from .backends import FixtureBackend
from .backends import IdentifierBackend
from .backends import RemoteBackend
from .backends import create_backend
from .backends import parse_identification
from .backends import register_backend
from .errors import BackendUnavailable
from .errors import EmptyImageError
from .errors import MalformedResponse
from .errors import RecognitionError
from .identify import DEFAULT_THRESHOLD
from .identify import gate
from .identify import guess_content_type
from .identify import identify
from .models import GateResult
from .models import Identification

__all__ = [
    "Identification",
    "GateResult",
    "IdentifierBackend",
    "RemoteBackend",
    "FixtureBackend",
    "BACKENDS_REGISTRY",
    "register_backend",
    "create_backend",
    "parse_identification",
    "identify",
    "gate",
    "guess_content_type",
    "DEFAULT_THRESHOLD",
    "RecognitionError",
    "BackendUnavailable",
    "MalformedResponse",
    "EmptyImageError",
]
