import logging

from .llm import request_llm
from .models import SOURCE_LLM
from .rules import rule_explanation
from .rules import summarize_rules

log = logging.getLogger(__name__)


def explain_effects(estimates, species, llm_config=None, session=None):
    """Rule explanations for every estimate, augmented with LLM sentences
    when available.

    :return: ``(explanations, summary)`` where summary holds ``rule`` and
        ``llm`` paragraphs
    """
    explanations = [rule_explanation(est, species) for est in estimates]
    answer = request_llm(estimates, species, llm_config, session)
    summary = {"rule": summarize_rules(explanations, species), "llm": None}
    if answer is not None:
        for explanation, text in zip(explanations, answer.items):
            explanation.llm_text = text
            explanation.source = SOURCE_LLM
        summary["llm"] = answer.summary
    log.info(
        "Explained %d effects for %s (%s)",
        len(explanations),
        species,
        "rule and llm" if answer else "rule only",
    )
    return explanations, summary
