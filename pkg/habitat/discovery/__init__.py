"""habitat.discovery.
~~~~~~~~~~~~~~~~~~~

Learn a weighted DAG among the bioclimatic variables with linear NOTEARS.
"""

from .acyclicity import acyclicity_h
from .acyclicity import least_squares_loss
from .errors import CycleDetected
from .errors import DegenerateData
from .errors import DidNotConverge
from .errors import DiscoveryError
from .errors import NonSquare
from .graph import find_cycle
from .graph import is_acyclic
from .graph import topological_order
from .models import DataMatrix
from .models import NotearsConfig
from .models import WeightedDag
from .models import structural_hamming_distance
from .notears import LEARNERS_REGISTRY
from .notears import LinearNotears
from .notears import StructureLearner
from .notears import create_learner
from .notears import notears_fit
from .notears import preprocess
from .notears import register_learner
from .notears import threshold_to_dag

__all__ = [
    "DataMatrix",
    "WeightedDag",
    "NotearsConfig",
    "StructureLearner",
    "LinearNotears",
    "LEARNERS_REGISTRY",
    "register_learner",
    "create_learner",
    "notears_fit",
    "preprocess",
    "threshold_to_dag",
    "acyclicity_h",
    "least_squares_loss",
    "topological_order",
    "find_cycle",
    "is_acyclic",
    "structural_hamming_distance",
    "DiscoveryError",
    "NonSquare",
    "DegenerateData",
    "DidNotConverge",
    "CycleDetected",
]
