"""habitat.inference.
~~~~~~~~~~~~~~~~~~~

Treatment selection, backdoor identification on the learned climate
graph, and stratified propensity score estimates of the average effect of
a climate variable on presence.
"""

from .errors import AllStrataDropped
from .errors import BackdoorViolation
from .errors import ConstantOutcome
from .errors import InferenceError
from .errors import NoVariation
from .errors import Separation
from .errors import TooFewSamples
from .errors import UnknownNode
from .estimators import assign_strata
from .estimators import binarize
from .estimators import estimate_effects
from .estimators import naive_difference
from .estimators import stratified_ate
from .graph import backdoor_adjustment_set
from .graph import d_separated
from .graph import with_outcome
from .models import CausalEstimate
from .models import CausalQuery
from .models import LabeledSamples
from .propensity import LogisticFit
from .propensity import fit_logistic
from .propensity import fit_propensity
from .treatments import point_biserial
from .treatments import rank_variables
from .treatments import select_treatments

__all__ = [
    "LabeledSamples",
    "CausalQuery",
    "CausalEstimate",
    "LogisticFit",
    "select_treatments",
    "rank_variables",
    "point_biserial",
    "d_separated",
    "with_outcome",
    "backdoor_adjustment_set",
    "fit_logistic",
    "fit_propensity",
    "binarize",
    "assign_strata",
    "naive_difference",
    "stratified_ate",
    "estimate_effects",
    "InferenceError",
    "ConstantOutcome",
    "UnknownNode",
    "BackdoorViolation",
    "NoVariation",
    "Separation",
    "AllStrataDropped",
    "TooFewSamples",
]
