"""Scenario file loading (TOML or YAML) and sweep-axis handling."""

import logging
import math
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from config import Config
from errors import ConfigurationError, UsageError
from parser.scenario import KM_ALIASES, Scenario, resolve_scenario

logger = logging.getLogger(__name__)

# Axis name -> (scenario key, multiplier from CLI units)
SWEEP_AXES: Dict[str, tuple] = {
    "ground_distance": ("total_ground_distance_m", 1e3),
    "altitude": ("satellite_altitude_m", 1e3),
    "eta_s": ("eta_source", 1.0),
    "eta_q": ("eta_qnd", 1.0),
    "eta_w": ("eta_mem_write", 1.0),
    "eta_r": ("eta_mem_read", 1.0),
    "eta_d": ("eta_detector", 1.0),
}


def load_scenario_data(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a flat scenario mapping from .toml, .yaml or .yml."""
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"scenario file not found: {path}")
    suffix = path.suffix.lower()
    try:
        if suffix == ".toml":
            with open(path, "rb") as f:
                data = tomllib.load(f)
        elif suffix in (".yaml", ".yml"):
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        else:
            raise ConfigurationError(f"unsupported scenario format {suffix!r} (use .toml or .yaml)")
    except (tomllib.TOMLDecodeError, yaml.YAMLError) as e:
        raise ConfigurationError(f"cannot parse {path}: {e}") from e

    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must contain a key/value mapping")
    nested = [key for key, value in data.items() if isinstance(value, (dict, list))]
    if nested:
        raise ConfigurationError(f"{path}: scenario keys must be flat, nested: {', '.join(nested)}")
    return data


def load_scenario(
    path: Union[str, Path],
    overrides: Optional[Dict[str, Any]] = None,
    config: Optional[Config] = None,
) -> Scenario:
    """Load, apply command-line overrides and resolve a scenario file."""
    data = load_scenario_data(path)
    if overrides:
        data.update({k: v for k, v in overrides.items() if v is not None})
    scenario = resolve_scenario(data, config)
    logger.info(f"Loaded {scenario.mode} scenario from {path}")
    return scenario


def axis_grid(start: float, stop: float, step: float) -> List[float]:
    """Inclusive arithmetic grid; an empty grid is a usage error."""
    if step <= 0 or stop < start or not all(map(math.isfinite, (start, stop, step))):
        raise UsageError(f"empty sweep grid: from {start} to {stop} step {step}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def check_axis(axis: str) -> None:
    if axis not in SWEEP_AXES:
        raise UsageError(f"unknown sweep axis {axis!r}; choose from {', '.join(SWEEP_AXES)}")


def apply_axis(raw: Dict[str, Any], axis: str, value: float) -> Dict[str, Any]:
    """Copy of raw scenario data with one sweep point applied (CLI units)."""
    check_axis(axis)
    key, scale = SWEEP_AXES[axis]
    data = {k: v for k, v in raw.items() if KM_ALIASES.get(k) != key}
    data[key] = value * scale
    return data
