"""Background light scaling and false-coincidence error fractions."""

from .background import (
    BACKGROUND_PRESETS,
    DAYLIGHT_SPECTRAL_RADIANCE,
    BackgroundEnvironment,
    CoincidenceModel,
    Regime,
    background_rate,
    false_coincidence_error_fraction,
    get_background_preset,
    hz_to_wavelength_width,
    wavelength_width_to_hz,
)

__all__ = [
    "BACKGROUND_PRESETS",
    "DAYLIGHT_SPECTRAL_RADIANCE",
    "BackgroundEnvironment",
    "CoincidenceModel",
    "Regime",
    "background_rate",
    "false_coincidence_error_fraction",
    "get_background_preset",
    "hz_to_wavelength_width",
    "wavelength_width_to_hz",
]
