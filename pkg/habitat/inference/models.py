import math
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field

import numpy as np

from habitat.consts import OUTCOME

from .errors import ConstantOutcome


@dataclass(eq=False)
class LabeledSamples:
    """Feature matrix with a binary presence label per row."""

    X: np.ndarray
    column_names: list
    presence: np.ndarray

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=float)
        self.presence = np.asarray(self.presence).astype(int)
        if self.X.shape != (len(self.presence), len(self.column_names)):
            raise ValueError("features, names and labels do not line up")
        if not np.isin(self.presence, (0, 1)).all():
            raise ValueError("presence must be binary")

    @property
    def n(self):
        return self.X.shape[0]

    def column(self, name):
        return self.X[:, self.column_names.index(name)]

    def columns(self, names):
        idx = [self.column_names.index(name) for name in names]
        return self.X[:, idx]

    def check_outcome(self):
        if self.presence.min() == self.presence.max():
            raise ConstantOutcome()

    def take(self, rows):
        return LabeledSamples(self.X[rows], list(self.column_names), self.presence[rows])


@dataclass(frozen=True)
class CausalQuery:
    treatment: str
    adjustment_set: tuple
    outcome: str = OUTCOME

    def __post_init__(self):
        if self.treatment in self.adjustment_set:
            raise ValueError("treatment must not be in the adjustment set")
        if self.outcome in self.adjustment_set:
            raise ValueError("outcome must not be in the adjustment set")


@dataclass
class CausalEstimate:
    """Effect of moving ``treatment`` from its lower to its upper half on
    the probability of presence.
    """

    treatment: str
    ate: float
    se: float
    ci95: tuple
    n_strata_used: int
    n_dropped: int
    naive_diff: float
    adjustment_set: tuple = ()
    #: set when propensity fitting separated and the naive contrast was used
    fallback: bool = False
    strata: list = field(default_factory=list)

    def __post_init__(self):
        if not -1.0 <= self.ate <= 1.0:
            raise ValueError(f"ate out of range: {self.ate}")
        lo, hi = self.ci95
        if not lo <= self.ate <= hi:
            raise ValueError("ci95 must contain ate")

    def to_dict(self):
        data = asdict(self)
        data["ci95"] = list(self.ci95)
        data["adjustment_set"] = list(self.adjustment_set)
        if math.isnan(self.se):
            data["se"] = None
        return data

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        data["ci95"] = tuple(data["ci95"])
        data["adjustment_set"] = tuple(data.get("adjustment_set", ()))
        if data.get("se") is None:
            data["se"] = float("nan")
        return cls(**data)
