"""habitat.pipeline.
~~~~~~~~~~~~~~~~~~

End-to-end orchestration: configuration, per-stage artefacts, the analysis
dataset and the final report.
"""

from .config import PipelineConfig
from .dataset import DATASET_COLUMNS
from .dataset import export_dataset
from .dataset import import_dataset
from .dataset import to_samples
from .errors import DatasetError
from .errors import InvalidReport
from .errors import MissingArtefact
from .errors import PipelineError
from .errors import SpeciesRejected
from .report import HabitatReport
from .report import render_markdown
from .report import validate_report
from .report import write_report
from .runner import STAGES
from .runner import PipelineRunner
from .runner import run

__all__ = [
    "PipelineConfig",
    "PipelineRunner",
    "STAGES",
    "run",
    "HabitatReport",
    "render_markdown",
    "validate_report",
    "write_report",
    "DATASET_COLUMNS",
    "export_dataset",
    "import_dataset",
    "to_samples",
    "PipelineError",
    "MissingArtefact",
    "SpeciesRejected",
    "DatasetError",
    "InvalidReport",
]
