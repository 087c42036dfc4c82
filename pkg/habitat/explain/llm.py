"""habitat.explain.llm.
~~~~~~~~~~~~~~~~~~~~~

LLM-enhanced explanations through an OpenAI-style chat completions
endpoint. Any failure falls back to the rule text.
"""

import logging
import os
import re
from dataclasses import dataclass

from requests import RequestException
from requests.auth import AuthBase

from habitat.client import HabitatSession
from habitat.client import NetworkError
from habitat.common.urls import join_url

from .errors import LlmMalformed
from .errors import LlmUnavailable
from .rules import resolve_long_name

log = logging.getLogger(__name__)

DEFAULT_MODEL = "llama-3.3-70b"

#: constraint sentences embedded verbatim in every prompt
GROUNDING_CONSTRAINT = (
    "Ensure the explanation is realistic, grounded in ecological reasoning, "
    "and free from vague generalizations"
)
MECHANISM_INSTRUCTION = (
    "Write 1 sentence explaining the most likely ecological mechanism "
    "behind the causal influence"
)

ITEM_PATTERN = re.compile(r"^\s*(\d+)[.)]\s+(.+?)\s*$")
SUMMARY_PATTERN = re.compile(r"^\s*Summary:\s*(.+?)\s*$", re.IGNORECASE)


class BearerAuth(AuthBase):
    """Attach ``Authorization: Bearer <key>`` to the request."""

    def __init__(self, api_key):
        self.api_key = api_key

    def __call__(self, req):
        req.headers["Authorization"] = f"Bearer {self.api_key}"
        return req


@dataclass
class LlmConfig:
    base_url: str = None
    model: str = DEFAULT_MODEL
    api_key: str = None
    temperature: float = 0.2
    timeout: float = 30
    retries: int = 1

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        return cls(
            base_url=environ.get("HABITAT_LLM_BASE_URL") or None,
            model=environ.get("HABITAT_LLM_MODEL") or DEFAULT_MODEL,
            api_key=environ.get("HABITAT_LLM_API_KEY") or None,
        )

    @property
    def enabled(self):
        return bool(self.base_url and self.api_key)

    def __repr__(self):
        # never leak the key
        return f"LlmConfig(base_url={self.base_url!r}, model={self.model!r})"


@dataclass
class LlmAnswer:
    items: list
    summary: str = None


def build_messages(estimates, species):
    rows = ["| # | Variable | Long name | ATE | 95% CI |", "|---|---|---|---|---|"]
    for i, est in enumerate(estimates, 1):
        lo, hi = est.ci95
        rows.append(
            f"| {i} | {est.treatment} | {resolve_long_name(est.treatment)} "
            f"| {est.ate:+.3f} | [{lo:+.3f}, {hi:+.3f}] |"
        )
    system = (
        "You are an ecologist explaining species distribution drivers to "
        "non-specialists. " + GROUNDING_CONSTRAINT + "."
    )
    user = "\n".join(
        [
            f"Species: {species}",
            "Average treatment effects of climate variables on the probability "
            "of presence (high versus low values):",
            "",
            *rows,
            "",
            f"For each variable, in the order of the table: {MECHANISM_INSTRUCTION}.",
            f"Answer as a numbered list with exactly {len(estimates)} items "
            "formatted '1. <sentence>', then one final line "
            "'Summary: <one paragraph on the habitat preference>'.",
        ]
    )
    return [{"role": "system", "content": system}, {"role": "user", "content": user}]


def parse_answer(content, expected):
    items = {}
    summary = None
    for line in content.splitlines():
        m = ITEM_PATTERN.match(line)
        if m:
            items[int(m.group(1))] = m.group(2)
            continue
        m = SUMMARY_PATTERN.match(line)
        if m:
            summary = m.group(1)
    if sorted(items) != list(range(1, expected + 1)):
        raise LlmMalformed(
            description=f"expected {expected} numbered items, got {len(items)}"
        )
    return LlmAnswer([items[i] for i in range(1, expected + 1)], summary)


class LlmClient:
    def __init__(self, config, session=None):
        self.config = config
        self._session = session

    def _get_session(self):
        if self._session is not None:
            return self._session
        return HabitatSession(
            default_timeout=self.config.timeout,
            max_attempts=self.config.retries + 1,
        )

    def complete(self, estimates, species):
        """One chat completion for all ``estimates`` of ``species``."""
        url = join_url(self.config.base_url, "chat/completions")
        payload = {
            "model": self.config.model,
            "temperature": self.config.temperature,
            "messages": build_messages(estimates, species),
        }
        session = self._get_session()
        try:
            resp = session.post(url, json=payload, auth=BearerAuth(self.config.api_key))
        except (NetworkError, RequestException) as error:
            raise LlmUnavailable(description=str(error)) from error
        finally:
            if self._session is None:
                session.close()

        if resp.status_code >= 400:
            raise LlmUnavailable(description=f"HTTP {resp.status_code} from {url}")
        try:
            content = resp.json()["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as error:
            raise LlmMalformed(description="not a chat completion response") from error
        if not isinstance(content, str):
            raise LlmMalformed(description="message content is not text")
        return parse_answer(content, len(estimates))


def request_llm(estimates, species, config, session=None):
    """Return an :class:`LlmAnswer`, or None when the LLM is disabled or
    failed.
    """
    if not estimates or config is None or not config.enabled:
        return None
    try:
        return LlmClient(config, session).complete(estimates, species)
    except (LlmUnavailable, LlmMalformed) as error:
        log.warning("LLM explanations skipped, using rule text only: %s", error)
        return None


def render_llm(estimates, species, config, session=None):
    """One optional LLM sentence per estimate, in order."""
    answer = request_llm(estimates, species, config, session)
    if answer is None:
        return [None] * len(estimates)
    return list(answer.items)
