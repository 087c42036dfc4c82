import logging
import time

from requests import Session
from requests.exceptions import ConnectionError as RequestsConnectionError
from requests.exceptions import Timeout

from habitat.consts import default_user_agent

from .errors import NetworkError

log = logging.getLogger(__name__)

REQUESTS_SESSION_KWARGS = [
    "proxies",
    "hooks",
    "verify",
    "cert",
    "max_redirects",
    "trust_env",
]


def update_session_configure(session, kwargs):
    for k in REQUESTS_SESSION_KWARGS:
        if k in kwargs:
            setattr(session, k, kwargs.pop(k))


class HabitatSession(Session):
    """Construct a requests session that retries transient failures.

    :param default_timeout: timeout in seconds applied to every request
        which does not set its own.
    :param max_attempts: total attempts for one request, first try included.
    :param backoff: delay before the second attempt, doubled each retry.
    :param user_agent: value of the ``User-Agent`` header.
    """

    #: HTTP status codes worth another attempt
    RETRY_STATUS_CODES = frozenset(range(500, 600))

    def __init__(
        self,
        default_timeout=10,
        max_attempts=3,
        backoff=1.0,
        user_agent=None,
        sleep=time.sleep,
        **kwargs,
    ):
        super().__init__()
        self.default_timeout = default_timeout
        self.max_attempts = max_attempts
        self.backoff = backoff
        self._sleep = sleep
        self.headers["User-Agent"] = user_agent or default_user_agent
        update_session_configure(self, kwargs)

    def request(self, method, url, **kwargs):
        """Send request, retrying on connection errors, timeouts and 5xx
        responses. Other 4xx responses are returned to the caller.
        """
        if self.default_timeout:
            kwargs.setdefault("timeout", self.default_timeout)

        delay = self.backoff
        for attempt in range(1, self.max_attempts + 1):
            try:
                resp = super().request(method, url, **kwargs)
            except (RequestsConnectionError, Timeout) as error:
                reason = str(error) or error.__class__.__name__
                status_code = None
            else:
                if resp.status_code not in self.RETRY_STATUS_CODES:
                    return resp
                reason = f"HTTP {resp.status_code}"
                status_code = resp.status_code

            if attempt == self.max_attempts:
                raise NetworkError(url, reason, status_code)

            log.debug("Retry %s %s in %.1fs (%s)", method, url, delay, reason)
            self._sleep(delay)
            delay *= 2

    def get_json(self, url, **kwargs):
        resp = self.get(url, **kwargs)
        if resp.status_code >= 400:
            raise NetworkError(url, f"HTTP {resp.status_code}", resp.status_code)
        try:
            return resp.json()
        except ValueError as error:
            raise NetworkError(url, "response is not JSON") from error
