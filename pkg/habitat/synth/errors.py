from habitat.common.errors import ConfigError


class InvalidSyntheticSpec(ConfigError):
    error = "invalid_synthetic_spec"
