import json
import math
from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace

from .errors import InvalidSyntheticSpec


@dataclass(frozen=True)
class SyntheticSpec:
    """Ground truth for one synthetic problem.

    ``presence_coeffs`` maps a column name (``x0``, ``x1``, ...) or index
    to its logistic coefficient. ``forced_edges`` lists ``(i, j, weight)``
    edges that are always present, on top of the random ones.
    """

    d: int
    expected_edges: float = 0.0
    weight_range: tuple = (0.5, 2.0)
    noise_sigma_range: tuple = (1.0, 1.0)
    n: int = 1000
    presence_coeffs: dict = field(default_factory=dict)
    intercept: float = 0.0
    seed: int = 0
    forced_edges: tuple = ()
    #: explicit noise scale per variable, overrides ``noise_sigma_range``
    noise_sigmas: tuple = ()

    def __post_init__(self):
        if self.d < 2:
            raise InvalidSyntheticSpec(description='"d" must be at least 2')
        if self.n < 10:
            raise InvalidSyntheticSpec(description='"n" must be at least 10')
        lo, hi = self.weight_range
        if lo < 0.5 or hi < lo:
            raise InvalidSyntheticSpec(description=f"invalid weight range {self.weight_range}")
        s_lo, s_hi = self.noise_sigma_range
        if s_lo <= 0 or s_hi < s_lo:
            raise InvalidSyntheticSpec(
                description=f"invalid noise sigma range {self.noise_sigma_range}"
            )
        if not 0 <= self.expected_edges <= self.max_edges:
            raise InvalidSyntheticSpec(
                description=f'"expected_edges" must be in [0, {self.max_edges}]'
            )
        for key in self.presence_coeffs:
            self.column_index(key)
        if self.noise_sigmas and (
            len(self.noise_sigmas) != self.d or min(self.noise_sigmas) <= 0
        ):
            raise InvalidSyntheticSpec(description="noise_sigmas needs d positive values")
        for i, j, _ in self.forced_edges:
            if not (0 <= i < self.d and 0 <= j < self.d) or i == j:
                raise InvalidSyntheticSpec(description=f"invalid forced edge {i} -> {j}")

    @property
    def max_edges(self):
        return math.comb(self.d, 2)

    @property
    def column_names(self):
        return [f"x{i}" for i in range(self.d)]

    def column_index(self, key):
        if isinstance(key, int):
            index = key
        elif isinstance(key, str) and key in self.column_names:
            index = self.column_names.index(key)
        else:
            raise InvalidSyntheticSpec(description=f"unknown variable {key!r}")
        if not 0 <= index < self.d:
            raise InvalidSyntheticSpec(description=f"unknown variable {key!r}")
        return index

    def with_seed(self, seed):
        return replace(self, seed=seed)

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        for key in ("weight_range", "noise_sigma_range", "noise_sigmas"):
            if key in data:
                data[key] = tuple(data[key])
        if "forced_edges" in data:
            data["forced_edges"] = tuple(tuple(edge) for edge in data["forced_edges"])
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise InvalidSyntheticSpec(description=f"unknown keys: {sorted(unknown)}")
        try:
            return cls(**data)
        except TypeError as error:
            raise InvalidSyntheticSpec(description=str(error)) from error

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, ValueError) as error:
            raise InvalidSyntheticSpec(description=f"cannot read {path}: {error}") from error
        return cls.from_dict(data)
