"""Loader for zenith-transmittance tables (CSV: wavelength_nm,zenith_transmittance)."""

import logging
import math
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from config import Config, get_config
from errors import ConfigurationError
from linkbudget.atmosphere import AtmosphereModel

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ["wavelength_nm", "zenith_transmittance"]

# Shipped table: realistic rural sea-level values, not a radiative-transfer run
CALIBRATED_LABEL = "calibrated, not MODTRAN"


def load_atmosphere_table(
    path: Union[str, Path],
    airmass_cap_elevation_rad: float = math.radians(10.0),
    label: Optional[str] = None,
) -> AtmosphereModel:
    """Read a zenith-transmittance CSV into an AtmosphereModel."""
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"atmosphere table not found: {path}")
    try:
        frame = pd.read_csv(path, encoding="utf-8")
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise ConfigurationError(f"cannot read atmosphere table {path}: {e}") from e

    if list(frame.columns) != REQUIRED_COLUMNS:
        raise ConfigurationError(
            f"atmosphere table {path} must have header {','.join(REQUIRED_COLUMNS)}, "
            f"got {','.join(map(str, frame.columns))}"
        )
    if frame.empty:
        raise ConfigurationError(f"atmosphere table {path} is empty")

    frame = frame.sort_values("wavelength_nm")
    logger.debug(f"Loaded {len(frame)} atmosphere rows from {path}")
    return AtmosphereModel(
        wavelengths_m=tuple(float(v) / 1e9 for v in frame["wavelength_nm"]),
        zenith_transmittance=tuple(float(v) for v in frame["zenith_transmittance"]),
        airmass_cap_elevation_rad=airmass_cap_elevation_rad,
        label=label or path.name,
    )


def load_atmosphere(
    name_or_path: str,
    airmass_cap_elevation_rad: float = math.radians(10.0),
    config: Optional[Config] = None,
) -> AtmosphereModel:
    """Resolve a preset name ("calibrated", "vacuum") or a CSV path."""
    config = config or get_config()
    if name_or_path == "calibrated":
        return load_atmosphere_table(
            config.atmosphere_path, airmass_cap_elevation_rad, label=CALIBRATED_LABEL
        )
    if name_or_path == "vacuum":
        model = AtmosphereModel.uniform(1.0, label="vacuum")
        return AtmosphereModel(
            model.wavelengths_m, model.zenith_transmittance, airmass_cap_elevation_rad, model.label
        )
    return load_atmosphere_table(name_or_path, airmass_cap_elevation_rad)
