"""
Run configuration: tolerances, seed and output options
"""

import copy
import os
from dataclasses import dataclass, field, asdict
from typing import Any, Dict

from ..utils.errors import ConfigurationError

TOLERANCE_FLOOR = 1e-13
MAX_KMAX = 32
OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class ToleranceConfig:
    """All floating tolerances of the toolkit in one record"""
    root: float = 1e-10
    ode: float = 1e-10
    cluster: float = 1e-9
    rank: float = 1e-9

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not value >= TOLERANCE_FLOOR:
                raise ConfigurationError(f"Tolerance '{name}'={value} below floor {TOLERANCE_FLOOR}")

    def scaled(self, factor: float) -> "ToleranceConfig":
        """Copy with every tolerance multiplied by factor (floored)"""
        return ToleranceConfig(**{k: max(v * factor, TOLERANCE_FLOOR) for k, v in asdict(self).items()})


@dataclass
class RunConfig:
    """Application settings container"""
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    seed: int = 42
    kmax: int = 8
    assume_small: bool = False
    output_format: str = "text"
    threads: int = 1
    debug: bool = False

    def __post_init__(self):
        """Initialize settings from environment variables"""
        self.debug = self.debug or os.getenv("TOPOGALOIS_DEBUG", "false").lower() == "true"
        self.output_format = os.getenv("TOPOGALOIS_FORMAT", self.output_format)
        self.seed = int(os.getenv("TOPOGALOIS_SEED", self.seed))
        self.threads = int(os.getenv("TOPOGALOIS_THREADS", self.threads))
        self.validate()

    def validate(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigurationError(f"Seed {self.seed} is not a 64-bit unsigned integer")
        if not 1 <= self.kmax <= MAX_KMAX:
            raise ConfigurationError(f"kmax must lie in [1, {MAX_KMAX}], got {self.kmax}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"Unknown output format {self.output_format!r}")
        if self.threads < 1:
            raise ConfigurationError("threads must be at least 1")

    def apply_overrides(self, **values: Any) -> "RunConfig":
        """Set explicitly supplied values (None means not supplied) after the environment was read"""
        for name, value in values.items():
            if not hasattr(self, name):
                raise ConfigurationError(f"Unknown setting {name!r}")
            if value is not None:
                setattr(self, name, value)
        self.validate()
        return self

    def scaled(self, factor: float) -> "RunConfig":
        """Copy with all tolerances multiplied by factor"""
        clone = copy.copy(self)
        clone.tolerances = self.tolerances.scaled(factor)
        return clone

    @property
    def is_json(self) -> bool:
        """Check if machine-readable output is requested"""
        return self.output_format == "json"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tolerances": asdict(self.tolerances),
            "seed": self.seed,
            "kmax": self.kmax,
            "assume_small": self.assume_small,
            "format": self.output_format,
        }
