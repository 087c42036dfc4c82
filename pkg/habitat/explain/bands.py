"""Effect bands partitioning ``[-1, 1]``. Each band is a half-open or
closed interval with its own sentence template.
"""

import math
from dataclasses import dataclass

from .errors import OutOfRange


@dataclass(frozen=True)
class EffectBand:
    label: str
    lower: float
    upper: float
    lower_closed: bool
    upper_closed: bool
    template: str

    def contains(self, ate):
        if self.lower_closed:
            above = ate >= self.lower
        else:
            above = ate > self.lower
        if self.upper_closed:
            below = ate <= self.upper
        else:
            below = ate < self.upper
        return above and below

    @property
    def sign(self):
        if self.lower >= 0 and self.upper > 0:
            return 1
        if self.upper <= 0 and self.lower < 0:
            return -1
        return 0


EFFECT_BANDS = (
    EffectBand(
        "strong+",
        0.1,
        1.0,
        True,
        True,
        "High {BIO} strongly promotes {SP} presence. "
        "This likely reflects a core habitat requirement.",
    ),
    EffectBand(
        "moderate+",
        0.05,
        0.1,
        True,
        False,
        "High {BIO} moderately promotes {SP} presence.",
    ),
    EffectBand(
        "weak+",
        0.0,
        0.05,
        False,
        False,
        "{BIO} has a weak positive effect and slightly promotes {SP} presence.",
    ),
    EffectBand(
        "negligible",
        0.0,
        0.0,
        True,
        True,
        "{BIO} has a negligible effect on {SP} presence.",
    ),
    EffectBand(
        "weak-",
        -0.05,
        0.0,
        False,
        False,
        "{BIO} has a weak negative effect.",
    ),
    EffectBand(
        "moderate-",
        -0.1,
        -0.05,
        False,
        True,
        "High {BIO} moderately suppresses {SP} presence, a negative effect "
        "suggesting sensitivity to this variable.",
    ),
    EffectBand(
        "strong-",
        -1.0,
        -0.1,
        True,
        True,
        "High {BIO} imposes a strong negative constraint on {SP} presence.",
    ),
)


def band_for(ate):
    """Return the one :class:`EffectBand` holding ``ate``."""
    if not isinstance(ate, (int, float)) or math.isnan(ate) or not -1.0 <= ate <= 1.0:
        raise OutOfRange(ate)
    for band in EFFECT_BANDS:
        if band.contains(ate):
            return band
    raise OutOfRange(ate)


def get_band(label):
    for band in EFFECT_BANDS:
        if band.label == label:
            return band
    raise KeyError(label)
