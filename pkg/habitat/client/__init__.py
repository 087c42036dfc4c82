from .cache import ResponseCache
from .errors import CacheMissError
from .errors import NetworkError
from .session import HabitatSession

__all__ = [
    "HabitatSession",
    "ResponseCache",
    "NetworkError",
    "CacheMissError",
]
