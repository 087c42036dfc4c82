import logging
from dataclasses import dataclass
from dataclasses import field

import networkx as nx
import numpy as np

from .errors import DegenerateData

log = logging.getLogger(__name__)


@dataclass(eq=False)
class DataMatrix:
    """``n x d`` samples with one named column per variable."""

    X: np.ndarray
    column_names: list

    def __post_init__(self):
        self.X = np.asarray(self.X, dtype=float)
        if self.X.ndim != 2:
            raise DegenerateData(description="data must be a 2-dimensional matrix")
        if self.X.shape[1] != len(self.column_names):
            raise DegenerateData(description="column names do not match data width")
        if not np.all(np.isfinite(self.X)):
            raise DegenerateData(description="data contains non-finite entries")
        if self.n <= self.d:
            log.warning("Only %d samples for %d variables", self.n, self.d)

    @property
    def n(self):
        return self.X.shape[0]

    @property
    def d(self):
        return self.X.shape[1]

    def column(self, name):
        return self.X[:, self.column_names.index(name)]

    def permute(self, order):
        order = list(order)
        return DataMatrix(self.X[:, order], [self.column_names[i] for i in order])


@dataclass
class NotearsConfig:
    """Settings for linear NOTEARS. ``lambda1`` is the L1 strength."""

    lambda1: float = 0.1
    w_threshold: float = 0.3
    rho_init: float = 1.0
    rho_max: float = 1e16
    h_tol: float = 1e-8
    max_dual_iters: int = 100
    max_inner_iters: int = 15000
    center_only: bool = True
    threshold_step: float = 0.05
    gtol: float = 1e-6

    def __post_init__(self):
        for key in ("lambda1", "w_threshold", "rho_init", "rho_max", "h_tol", "gtol"):
            if getattr(self, key) <= 0:
                raise ValueError(f'"{key}" must be positive')
        if self.max_dual_iters < 1 or self.max_inner_iters < 1:
            raise ValueError("iteration limits must be positive")
        if self.h_tol >= 1e-2:
            raise ValueError('"h_tol" must be small')

    @classmethod
    def from_dict(cls, data):
        return cls(**{k: v for k, v in (data or {}).items() if k in cls.__dataclass_fields__})

    def to_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass(eq=False)
class WeightedDag:
    """``W[i, j]`` is the weight of edge ``i -> j``."""

    W: np.ndarray
    column_names: list
    threshold_used: float = 0.0
    #: one record per outer iteration of the optimizer
    history: list = field(default_factory=list)

    def __post_init__(self):
        self.W = np.asarray(self.W, dtype=float)
        d = len(self.column_names)
        if self.W.shape != (d, d):
            raise ValueError(f"W has shape {self.W.shape}, expected {(d, d)}")
        if np.any(np.diag(self.W) != 0):
            raise ValueError("W must have a zero diagonal")

    @property
    def d(self):
        return self.W.shape[0]

    def support(self):
        return self.W != 0

    def edges(self):
        """Edges as ``(i, j, weight)`` ordered by source then target."""
        rows, cols = np.nonzero(self.W)
        return [(int(i), int(j), float(self.W[i, j])) for i, j in zip(rows, cols)]

    def parents(self, j):
        return [int(i) for i in np.nonzero(self.W[:, j])[0]]

    def to_networkx(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.column_names)
        for i, j, w in self.edges():
            graph.add_edge(self.column_names[i], self.column_names[j], weight=w)
        return graph

    def to_json(self):
        return {
            "variables": list(self.column_names),
            "edges": [{"from": i, "to": j, "weight": w} for i, j, w in self.edges()],
            "threshold": self.threshold_used,
        }

    @classmethod
    def from_json(cls, data):
        names = list(data["variables"])
        W = np.zeros((len(names), len(names)))
        for edge in data["edges"]:
            W[edge["from"], edge["to"]] = edge["weight"]
        return cls(W, names, float(data.get("threshold", 0.0)))

    def to_dot(self, name="habitat"):
        lines = [f"digraph {name} {{"]
        for var in self.column_names:
            lines.append(f'  "{var}";')
        for i, j, w in self.edges():
            src, dst = self.column_names[i], self.column_names[j]
            lines.append(f'  "{src}" -> "{dst}" [label="{w:.3f}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def structural_hamming_distance(a, b):
    """Edge insertions, deletions and reversals turning support ``a`` into
    ``b``; a reversed edge counts once.
    """
    a = np.asarray(a) != 0
    b = np.asarray(b) != 0
    diff = a != b
    # a reversal shows up at (i, j) and (j, i); count it once
    reversed_ = diff & diff.T & (a != a.T) & (b != b.T)
    return int(diff.sum() - reversed_.sum() // 2)
