"""Shipped data tables and parameter presets."""

from .atmosphere_loader import CALIBRATED_LABEL, load_atmosphere, load_atmosphere_table
from .presets import (
    CHANNEL_PRESETS,
    MODE_DEFAULTS,
    SATELLITE_OPTICS_LOSS_DB,
    direct_channel_preset,
    get_channel_preset,
)

__all__ = [
    "CALIBRATED_LABEL",
    "load_atmosphere",
    "load_atmosphere_table",
    "CHANNEL_PRESETS",
    "MODE_DEFAULTS",
    "SATELLITE_OPTICS_LOSS_DB",
    "direct_channel_preset",
    "get_channel_preset",
]
