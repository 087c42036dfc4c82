"""habitat.explain.
~~~~~~~~~~~~~~~~~

Plain-language explanations of causal estimates: fixed rule templates per
effect band, optionally augmented by an LLM with constrained prompts.
"""

from .bands import EFFECT_BANDS
from .bands import EffectBand
from .bands import band_for
from .bands import get_band
from .errors import ExplainError
from .errors import LlmMalformed
from .errors import LlmUnavailable
from .errors import OutOfRange
from .errors import UnknownVariable
from .explain import explain_effects
from .llm import GROUNDING_CONSTRAINT
from .llm import MECHANISM_INSTRUCTION
from .llm import BearerAuth
from .llm import LlmAnswer
from .llm import LlmClient
from .llm import LlmConfig
from .llm import build_messages
from .llm import parse_answer
from .llm import render_llm
from .llm import request_llm
from .models import SOURCE_LLM
from .models import SOURCE_RULE
from .models import Explanation
from .rules import render_rule
from .rules import rule_explanation
from .rules import summarize_rules

__all__ = [
    "EffectBand",
    "EFFECT_BANDS",
    "Explanation",
    "band_for",
    "get_band",
    "render_rule",
    "rule_explanation",
    "summarize_rules",
    "render_llm",
    "request_llm",
    "explain_effects",
    "LlmConfig",
    "LlmClient",
    "LlmAnswer",
    "BearerAuth",
    "build_messages",
    "parse_answer",
    "GROUNDING_CONSTRAINT",
    "MECHANISM_INSTRUCTION",
    "SOURCE_RULE",
    "SOURCE_LLM",
    "ExplainError",
    "OutOfRange",
    "UnknownVariable",
    "LlmUnavailable",
    "LlmMalformed",
]
