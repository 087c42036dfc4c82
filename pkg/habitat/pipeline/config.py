"""habitat.pipeline.config.
~~~~~~~~~~~~~~~~~~~~~~~~~

Run configuration. Values are resolved as defaults, then the JSON config
file, then command line flags. LLM credentials never live here, they are
read from the environment.
"""

import json
import numbers
import os

from habitat.climate.extract import DEFAULT_PATTERN
from habitat.common.encoding import canonical_json
from habitat.common.encoding import sha256_hex
from habitat.common.errors import ConfigError
from habitat.common.errors import InvalidConfigError
from habitat.discovery import LEARNERS_REGISTRY
from habitat.discovery import NotearsConfig
from habitat.recognition import BACKENDS_REGISTRY
from habitat.recognition.identify import DEFAULT_THRESHOLD

#: keys that change where or how a run executes but not its results
RUNTIME_KEYS = ("cache_dir", "offline")

SECRET_KEYS = ("api_key", "llm_api_key", "token", "password")

DEFAULTS = {
    "species_name": None,
    "image_path": None,
    "cache_dir": ".habitat-cache",
    "climate_dir": None,
    "climate_pattern": DEFAULT_PATTERN,
    "land_mask_path": None,
    "seed": 0,
    "max_records": 1000,
    "year_to": None,
    "ratio": 2.0,
    "exclusion_km": 5.0,
    "buffer_deg": 1.0,
    "k_treatments": 5,
    "n_strata": 5,
    "bootstrap": 200,
    "confidence_threshold": DEFAULT_THRESHOLD,
    "identify_backend": "remote",
    "identify_url": None,
    "identify_fixture": None,
    "learner": "notears-linear",
    "notears": {},
    "llm_enabled": True,
    "offline": False,
}


def _is_number(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def _is_integer(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


class PipelineConfig(dict):
    """Validated pipeline settings with attribute access to every
    registered key.
    """

    REGISTRY_KEYS = list(DEFAULTS)

    def __init__(self, *args, **kwargs):
        super().__init__(DEFAULTS)
        self.update(*args, **kwargs)

    @classmethod
    def load(cls, path=None, overrides=None):
        """Build a config from ``path`` (JSON) and ``overrides``; keys set
        to None in ``overrides`` are ignored.
        """
        data = {}
        if path:
            data.update(read_config_file(path))
        for key, value in (overrides or {}).items():
            if value is not None:
                data[key] = value
        config = cls(data)
        config.validate()
        return config

    def validate_keys(self):
        for key in self:
            if key.lower() in SECRET_KEYS:
                raise InvalidConfigError(
                    key, "must not be stored in config, set HABITAT_LLM_API_KEY instead"
                )
            if key not in self.REGISTRY_KEYS:
                raise InvalidConfigError(key, "is not a known setting")

    def validate_species_name(self):
        name = self.get("species_name")
        image = self.get("image_path")
        if bool(name) == bool(image):
            raise InvalidConfigError(
                "species_name", 'exactly one of "species_name" and "image_path" must be set'
            )
        if name is not None and not isinstance(name, str):
            raise InvalidConfigError("species_name", "must be a string")

    def validate_image_path(self):
        path = self.get("image_path")
        if path and not isinstance(path, str):
            raise InvalidConfigError("image_path", "must be a path")

    def validate_cache_dir(self):
        if not self.get("cache_dir"):
            raise InvalidConfigError("cache_dir", "is required")

    def validate_climate_dir(self):
        _check_optional_path(self, "climate_dir")

    def validate_climate_pattern(self):
        pattern = self.get("climate_pattern")
        if not isinstance(pattern, str) or "{i}" not in pattern:
            raise InvalidConfigError("climate_pattern", 'must contain "{i}"')

    def validate_land_mask_path(self):
        _check_optional_path(self, "land_mask_path")

    def validate_seed(self):
        seed = self.get("seed")
        if not _is_integer(seed) or seed < 0:
            raise InvalidConfigError("seed", "must be a non-negative integer")

    def validate_max_records(self):
        _check_positive_int(self, "max_records")

    def validate_year_to(self):
        year = self.get("year_to")
        if year is not None and (not _is_integer(year) or year < 2000):
            raise InvalidConfigError("year_to", "must be a year from 2000 on")

    def validate_ratio(self):
        _check_positive(self, "ratio")

    def validate_exclusion_km(self):
        _check_positive(self, "exclusion_km")

    def validate_buffer_deg(self):
        _check_positive(self, "buffer_deg")

    def validate_k_treatments(self):
        k = self.get("k_treatments")
        if not _is_integer(k) or not 1 <= k <= 19:
            raise InvalidConfigError("k_treatments", "must be an integer in [1, 19]")

    def validate_n_strata(self):
        _check_positive_int(self, "n_strata")

    def validate_bootstrap(self):
        value = self.get("bootstrap")
        if not _is_integer(value) or value < 0:
            raise InvalidConfigError("bootstrap", "must be a non-negative integer")

    def validate_confidence_threshold(self):
        value = self.get("confidence_threshold")
        if not _is_number(value) or not 0.0 <= value <= 1.0:
            raise InvalidConfigError("confidence_threshold", "must be in [0, 1]")

    def validate_identify_backend(self):
        name = self.get("identify_backend")
        if name not in BACKENDS_REGISTRY:
            raise InvalidConfigError(
                "identify_backend", f"must be one of {sorted(BACKENDS_REGISTRY)}"
            )
        if self.get("image_path") and name == "fixture" and not self.get("identify_fixture"):
            raise InvalidConfigError("identify_fixture", "is required by the fixture backend")

    def validate_identify_url(self):
        url = self.get("identify_url")
        if url and not (isinstance(url, str) and url.startswith(("http://", "https://"))):
            raise InvalidConfigError("identify_url", "must be an http(s) URL")

    def validate_identify_fixture(self):
        _check_optional_path(self, "identify_fixture")

    def validate_learner(self):
        if self.get("learner") not in LEARNERS_REGISTRY:
            raise InvalidConfigError("learner", f"must be one of {sorted(LEARNERS_REGISTRY)}")

    def validate_notears(self):
        settings = self.get("notears")
        if not isinstance(settings, dict):
            raise InvalidConfigError("notears", "must be an object")
        unknown = set(settings) - set(NotearsConfig.__dataclass_fields__)
        if unknown:
            raise InvalidConfigError("notears", f"has unknown settings {sorted(unknown)}")
        try:
            NotearsConfig.from_dict(settings)
        except (TypeError, ValueError) as error:
            raise InvalidConfigError("notears", str(error)) from error

    def validate_llm_enabled(self):
        if not isinstance(self.get("llm_enabled"), bool):
            raise InvalidConfigError("llm_enabled", "must be true or false")

    def validate_offline(self):
        if not isinstance(self.get("offline"), bool):
            raise InvalidConfigError("offline", "must be true or false")

    def validate(self):
        """Validate all settings."""
        self.validate_keys()
        for key in self.REGISTRY_KEYS:
            object.__getattribute__(self, f"validate_{key}")()

    def __getattr__(self, key):
        try:
            return object.__getattribute__(self, key)
        except AttributeError as error:
            if key in self.REGISTRY_KEYS:
                return self.get(key)
            raise error

    @property
    def notears_config(self):
        return NotearsConfig.from_dict(self.get("notears"))

    def hashable(self):
        return {k: v for k, v in self.items() if k not in RUNTIME_KEYS}

    @property
    def config_hash(self):
        """SHA-256 of the canonical settings followed by the seed."""
        return sha256_hex(canonical_json(self.hashable()) + f":{self.seed}")

    @property
    def run_id(self):
        return self.config_hash[:12]

    @property
    def run_dir(self):
        return os.path.join(self.cache_dir, "runs", self.run_id)


def read_config_file(path):
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except OSError as error:
        raise ConfigError(description=f"cannot read config file {path}: {error}") from error
    except ValueError as error:
        raise ConfigError(description=f"config file {path} is not valid JSON: {error}") from error
    if not isinstance(data, dict):
        raise ConfigError(description=f"config file {path} must hold a JSON object")
    return data


def _check_positive(config, key):
    value = config.get(key)
    if not _is_number(value) or not value > 0:
        raise InvalidConfigError(key, "must be a positive number")


def _check_positive_int(config, key):
    value = config.get(key)
    if not _is_integer(value) or value < 1:
        raise InvalidConfigError(key, "must be a positive integer")


def _check_optional_path(config, key):
    value = config.get(key)
    if value is not None and not isinstance(value, str):
        raise InvalidConfigError(key, "must be a path")
