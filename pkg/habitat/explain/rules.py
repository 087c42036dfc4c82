from habitat.climate.variables import long_name

from .bands import band_for
from .errors import UnknownVariable
from .models import SOURCE_RULE
from .models import Explanation


def resolve_long_name(variable):
    try:
        return long_name(variable)
    except KeyError as error:
        raise UnknownVariable(variable) from error


def render_rule(est, species):
    """Fill the band template of ``est.ate`` with the variable's long name
    and the species.
    """
    name = resolve_long_name(est.treatment)
    return band_for(est.ate).template.format(BIO=name, SP=species)


def rule_explanation(est, species):
    return Explanation(
        variable=est.treatment,
        long_name=resolve_long_name(est.treatment),
        rule_text=render_rule(est, species),
        ate=est.ate,
        band=band_for(est.ate).label,
        source=SOURCE_RULE,
    )


def summarize_rules(explanations, species):
    """Species-level paragraph built from the non-negligible rule sentences,
    strongest effects first.
    """
    ranked = sorted(explanations, key=lambda e: -abs(e.ate))
    sentences = [e.rule_text for e in ranked if e.band != "negligible"]
    if not sentences:
        return f"No climate variable shows a clear effect on {species} presence."
    return " ".join(sentences)
