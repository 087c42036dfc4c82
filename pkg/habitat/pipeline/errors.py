from habitat.common.errors import ConfigError
from habitat.common.errors import UpstreamDataError


class PipelineError(ConfigError):
    error = "pipeline_error"


class MissingArtefact(PipelineError):
    """A stage was started on its own but an earlier stage has not written
    its output yet.
    """

    error = "missing_artefact"

    def __init__(self, path, stage):
        self.path = path
        self.stage = stage
        super().__init__(description=f'{path} not found, run the "{stage}" stage first')


class SpeciesRejected(UpstreamDataError):
    error = "species_rejected"

    def __init__(self, gate_result):
        self.gate_result = gate_result
        super().__init__(
            description=(
                f"{gate_result.name} identified with confidence "
                f"{gate_result.confidence:.3f}, not above {gate_result.threshold:.2f}"
            )
        )


class DatasetError(UpstreamDataError):
    error = "dataset_error"


class InvalidReport(PipelineError):
    error = "invalid_report"
