from habitat.common.errors import ConfigError
from habitat.common.errors import HabitatError
from habitat.common.errors import NumericalError
from habitat.common.errors import UpstreamDataError


class ExplainError(HabitatError):
    error = "explain_error"


class OutOfRange(ExplainError, NumericalError):
    error = "out_of_range"

    def __init__(self, ate):
        self.ate = ate
        super().__init__(description=f"ATE {ate!r} is outside [-1, 1]")


class UnknownVariable(ExplainError, ConfigError):
    error = "unknown_variable"

    def __init__(self, name):
        self.name = name
        super().__init__(description=f'no long name for variable "{name}"')


class LlmUnavailable(ExplainError, UpstreamDataError):
    error = "llm_unavailable"


class LlmMalformed(ExplainError, UpstreamDataError):
    error = "llm_malformed"
