class HabitatError(Exception):
    """Base Exception for all errors in habitat."""

    #: short-string error code
    error = None
    #: long-string to describe this error
    description = ""
    #: process exit code used by the command line
    exit_code = 1

    def __init__(self, error=None, description=None):
        if error is not None:
            self.error = error
        if description is not None:
            self.description = description

        message = f"{self.error}: {self.description}"
        super().__init__(message)

    def __repr__(self):
        return f'<{self.__class__.__name__} "{self.error}">'


class ConfigError(HabitatError):
    error = "config_error"
    exit_code = 2


class UpstreamDataError(HabitatError):
    """Remote services or input files did not deliver usable data."""

    error = "upstream_data_error"
    exit_code = 3


class NumericalError(HabitatError):
    error = "numerical_error"
    exit_code = 4


class InvalidConfigError(ConfigError):
    error = "invalid_config"

    def __init__(self, key, reason):
        self.key = key
        super().__init__(description=f'"{key}" {reason}')


class MissingInput(ConfigError):
    error = "missing_input"

    def __init__(self, path, kind="input file"):
        self.path = path
        super().__init__(description=f"{kind} {path} does not exist")


class StageError(HabitatError):
    """Raised by the pipeline runner with the failing stage attached. The
    original exception stays available as ``__cause__``.
    """

    error = "stage_failed"

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        if hasattr(cause, "exit_code"):
            self.exit_code = cause.exit_code
        elif isinstance(cause, OSError):
            self.exit_code = ConfigError.exit_code
        super().__init__(description=f"[{stage}] {cause}")
