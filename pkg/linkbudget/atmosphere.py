"""Zenith-table atmosphere with secant airmass."""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from errors import ConfigurationError


@dataclass(frozen=True)
class AtmosphereModel:
    """Zenith transmittance table, linearly interpolated in wavelength.

    The airmass 1/sin(elevation) is capped at its value at airmass_cap_elevation_rad;
    a cap elevation of 0 leaves it uncapped.
    """

    wavelengths_m: Tuple[float, ...]
    zenith_transmittance: Tuple[float, ...]
    airmass_cap_elevation_rad: float = math.radians(10.0)
    label: str = "custom"

    def __post_init__(self):
        if len(self.wavelengths_m) == 0:
            raise ConfigurationError("atmosphere table is empty")
        if len(self.wavelengths_m) != len(self.zenith_transmittance):
            raise ConfigurationError("atmosphere table columns differ in length")
        if any(b <= a for a, b in zip(self.wavelengths_m, self.wavelengths_m[1:])):
            raise ConfigurationError("atmosphere table must be sorted by wavelength")
        for wl, t in zip(self.wavelengths_m, self.zenith_transmittance):
            if not 0.0 < t <= 1.0:
                raise ConfigurationError(
                    f"zenith transmittance {t} at {wl * 1e9:.1f} nm outside (0, 1]"
                )
        if not 0.0 <= self.airmass_cap_elevation_rad <= math.pi / 2:
            raise ConfigurationError("airmass cap elevation must be in [0, pi/2]")

    @classmethod
    def uniform(cls, transmittance: float, label: str = "uniform") -> "AtmosphereModel":
        """Wavelength-independent table; 1.0 gives a lossless atmosphere."""
        return cls(wavelengths_m=(500e-9,), zenith_transmittance=(transmittance,), label=label)

    def covers(self, wavelength_m: float) -> bool:
        return self.wavelengths_m[0] <= wavelength_m <= self.wavelengths_m[-1]

    def zenith_at(self, wavelength_m: float) -> float:
        """Interpolated zenith transmittance, clamped to the table ends."""
        return float(np.interp(wavelength_m, self.wavelengths_m, self.zenith_transmittance))

    def airmass(self, elevation_rad: float) -> float:
        secant = 1.0 / math.sin(elevation_rad)
        if self.airmass_cap_elevation_rad == 0.0:
            return secant
        return min(secant, 1.0 / math.sin(self.airmass_cap_elevation_rad))


def atmospheric_transmittance(model: AtmosphereModel, wavelength_m: float, elevation_rad: float) -> float:
    """T_zenith(lambda) ** airmass(elevation)."""
    if elevation_rad <= 0.0:
        raise ValueError(f"elevation must be > 0, got {elevation_rad}")
    return model.zenith_at(wavelength_m) ** model.airmass(elevation_rad)
