import json
import logging

from habitat.client import HabitatSession
from habitat.client import NetworkError
from habitat.common.encoding import sha256_hex
from habitat.common.urls import join_url

from .errors import BackendUnavailable
from .errors import MalformedResponse
from .models import Identification

log = logging.getLogger(__name__)


class IdentifierBackend:
    """Interface for species identifier backends. A backend maps raw image
    bytes to its top-1 :class:`Identification`.
    """

    name = None

    def identify(self, image, content_type="image/jpeg"):
        """Return the top-1 identification for ``image``.

        :param image: raw image bytes
        :param content_type: media type of the image
        :return: Identification
        """
        raise NotImplementedError()


def parse_identification(data, backend_id):
    """Validate a backend JSON answer against the identify contract."""
    if not isinstance(data, dict):
        raise MalformedResponse(description="response must be a JSON object")
    for key in ("scientific_name", "confidence"):
        if key not in data:
            raise MalformedResponse(description=f'response is missing "{key}"')

    name = data["scientific_name"]
    confidence = data["confidence"]
    if not isinstance(name, str) or isinstance(confidence, bool):
        raise MalformedResponse(description="invalid field types")
    if not isinstance(confidence, (int, float)):
        raise MalformedResponse(description='"confidence" must be a number')
    try:
        return Identification(name, float(confidence), backend_id)
    except ValueError as error:
        raise MalformedResponse(description=str(error)) from error


class RemoteBackend(IdentifierBackend):
    """Identifier hosted behind ``POST {backend_url}/identify``.

    :param backend_url: base URL of the identifier service.
    :param session: optional :class:`HabitatSession` to reuse.
    """

    name = "remote"

    def __init__(self, backend_url, session=None, timeout=10, retries=2):
        self.backend_url = backend_url
        self.timeout = timeout
        self.retries = retries
        self._session = session

    def _get_session(self):
        if self._session is not None:
            return self._session
        return HabitatSession(default_timeout=self.timeout, max_attempts=self.retries + 1)

    def identify(self, image, content_type="image/jpeg"):
        url = join_url(self.backend_url, "identify")
        session = self._get_session()
        try:
            resp = session.post(url, data=image, headers={"Content-Type": content_type})
        except NetworkError as error:
            raise BackendUnavailable(description=error.description) from error
        finally:
            if self._session is None:
                session.close()

        if resp.status_code >= 400:
            raise BackendUnavailable(description=f"HTTP {resp.status_code} from {url}")
        try:
            data = resp.json()
        except ValueError as error:
            raise MalformedResponse(description="response is not JSON") from error
        return parse_identification(data, self.backend_url)


class FixtureBackend(IdentifierBackend):
    """Hermetic backend answering from a map keyed by the SHA-256 of the
    image content.
    """

    name = "fixture"

    def __init__(self, mapping, backend_id="fixture"):
        self.mapping = dict(mapping)
        self.backend_id = backend_id

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as f:
            return cls(json.load(f), backend_id=f"fixture:{path}")

    def identify(self, image, content_type="image/jpeg"):
        key = sha256_hex(image)
        data = self.mapping.get(key)
        if data is None:
            raise MalformedResponse(description=f"no fixture entry for image {key[:12]}")
        return parse_identification(data, self.backend_id)


BACKENDS_REGISTRY = {}


def register_backend(backend_cls):
    if not backend_cls.name:
        raise ValueError(f"Invalid identifier backend, {backend_cls!r}")
    BACKENDS_REGISTRY[backend_cls.name] = backend_cls


def create_backend(name, *args, **kwargs):
    if name not in BACKENDS_REGISTRY:
        raise ValueError(f'Unknown identifier backend "{name}"')
    return BACKENDS_REGISTRY[name](*args, **kwargs)


register_backend(RemoteBackend)
register_backend(FixtureBackend)
