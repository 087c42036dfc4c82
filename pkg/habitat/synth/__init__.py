"""habitat.synth.
~~~~~~~~~~~~~~~

Synthetic ground truth: linear SEMs with known DAGs, presence models with
planted effects, a Monte-Carlo interventional oracle and a benchmark
harness for structure learning and effect estimation.
"""

from .benchmark import BenchmarkResult
from .benchmark import TrialResult
from .benchmark import run_benchmark
from .benchmark import run_trial
from .errors import InvalidSyntheticSpec
from .generate import SyntheticModel
from .generate import build_model
from .generate import generate_presence
from .generate import generate_sem
from .models import SyntheticSpec
from .oracle import conditional_halves
from .oracle import oracle_ate
from .oracle import split_halves
from .rasters import synthetic_layers
from .rasters import write_synthetic_rasters

__all__ = [
    "SyntheticSpec",
    "SyntheticModel",
    "build_model",
    "generate_sem",
    "generate_presence",
    "oracle_ate",
    "conditional_halves",
    "split_halves",
    "run_benchmark",
    "run_trial",
    "BenchmarkResult",
    "TrialResult",
    "synthetic_layers",
    "write_synthetic_rasters",
    "InvalidSyntheticSpec",
]
