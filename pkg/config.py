"""Configuration for the satellite quantum repeater rate simulator."""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv

TOOL_NAME = "satrep"
TOOL_VERSION = "1.0.0"

SPEED_OF_LIGHT = 299_792_458.0  # m/s
SECONDS_PER_DAY = 86_400.0

# Config fields that enter evaluation after scenario resolution
REPLAY_FIELDS = (
    "earth_radius_m",
    "earth_gm",
    "sidereal_day_s",
    "far_field_factor",
    "quad_abs_tol",
    "nesting_candidates",
    "mc_block_size",
)


@dataclass
class Config:
    """Configuration for satrep runs."""

    # Earth model
    earth_radius_m: float = 6_371.0e3
    earth_gm: float = 3.986004418e14  # m^3/s^2
    sidereal_day_s: float = 86_164.1

    # Geometry sampling
    step_s: float = 10.0
    min_elevation_deg: float = 10.0

    # Diffraction
    far_field_factor: float = 1.0  # slant >= factor * D_tx^2 / lambda
    quad_abs_tol: float = 1e-6

    # Repeater defaults
    nesting_candidates: tuple = (2, 3)

    # Monte Carlo
    mc_trials: int = 20_000
    mc_seed: int = 20_240_601
    mc_block_size: int = 1_024

    # Sweep / output
    workers: int = 1
    output_dir: Path = field(default_factory=lambda: Path("results"))

    # Shipped data
    data_dir: Path = field(
        default_factory=lambda: Path(__file__).parent / "knowledge" / "data"
    )
    atmosphere_csv: str = "atmosphere_calibrated.csv"

    @property
    def atmosphere_path(self) -> Path:
        return self.data_dir / self.atmosphere_csv

    @classmethod
    def from_env(cls, env_file: Optional[Path] = None) -> "Config":
        """Build a config honouring SATREP_* environment overrides (.env supported)."""
        load_dotenv(env_file)
        config = cls()
        if "SATREP_WORKERS" in os.environ:
            config.workers = int(os.environ["SATREP_WORKERS"])
        if "SATREP_OUT_DIR" in os.environ:
            config.output_dir = Path(os.environ["SATREP_OUT_DIR"])
        if "SATREP_STEP_S" in os.environ:
            config.step_s = float(os.environ["SATREP_STEP_S"])
        if "SATREP_MIN_ELEVATION_DEG" in os.environ:
            config.min_elevation_deg = float(os.environ["SATREP_MIN_ELEVATION_DEG"])
        return config

    def numerics(self) -> Dict[str, Any]:
        """Settings that change computed values; manifests record these."""
        values = {name: getattr(self, name) for name in REPLAY_FIELDS}
        values["nesting_candidates"] = list(self.nesting_candidates)
        return values

    def with_numerics(self, recorded: Mapping[str, Any]) -> "Config":
        """Copy of this config with the numerics a manifest recorded."""
        values = {name: recorded[name] for name in REPLAY_FIELDS if name in recorded}
        if "nesting_candidates" in values:
            values["nesting_candidates"] = tuple(values["nesting_candidates"])
        return replace(self, **values)


# Global default configuration
_default_config: Optional[Config] = None


def get_config() -> Config:
    """Get the default configuration."""
    global _default_config
    if _default_config is None:
        _default_config = Config()
    return _default_config


def set_config(config: Config) -> None:
    """Set the default configuration."""
    global _default_config
    _default_config = config
