"""Background light and false-coincidence errors.

Background counts are scaled linearly from a measured reference receiver:
collecting area (diameter squared), filter bandwidth and field-of-view solid
angle (fov squared).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from config import SPEED_OF_LIGHT

logger = logging.getLogger(__name__)

# Daylight sky radiance, photons/s/m^2/um/sr. Documentation only; rates use the presets.
DAYLIGHT_SPECTRAL_RADIANCE = 1e22


class Regime(Enum):
    DAY = "day"
    NIGHT = "night"
    NONE = "none"


def wavelength_width_to_hz(width_m: float, wavelength_m: float) -> float:
    """delta_nu = c * delta_lambda / lambda^2."""
    return SPEED_OF_LIGHT * width_m / wavelength_m**2


def hz_to_wavelength_width(width_hz: float, wavelength_m: float) -> float:
    """delta_lambda = lambda^2 * delta_nu / c."""
    return wavelength_m**2 * width_hz / SPEED_OF_LIGHT


@dataclass(frozen=True)
class BackgroundEnvironment:
    """Reference background count rate and the receiver it was quoted for.

    The reference filter is given either in Hz or as a wavelength width;
    a wavelength width is converted at the channel wavelength.
    """

    reference_rate_hz: float
    rx_diameter_m: float
    fov_rad: float
    filter_bw_hz: Optional[float] = None
    filter_bw_m: Optional[float] = None
    regime: Regime = Regime.DAY

    def __post_init__(self):
        if self.reference_rate_hz < 0:
            raise ValueError("reference_rate_hz must be >= 0")
        if self.rx_diameter_m <= 0 or self.fov_rad <= 0:
            raise ValueError("reference receiver diameter and fov must be > 0")
        if (self.filter_bw_hz is None) == (self.filter_bw_m is None):
            raise ValueError("give exactly one of filter_bw_hz, filter_bw_m")
        width = self.filter_bw_hz if self.filter_bw_hz is not None else self.filter_bw_m
        if width <= 0:
            raise ValueError("reference filter bandwidth must be > 0")

    def reference_bandwidth_hz(self, wavelength_m: Optional[float] = None) -> float:
        if self.filter_bw_hz is not None:
            return self.filter_bw_hz
        if wavelength_m is None:
            raise ValueError("wavelength needed to convert a wavelength-width filter")
        return wavelength_width_to_hz(self.filter_bw_m, wavelength_m)


BACKGROUND_PRESETS: Dict[str, BackgroundEnvironment] = {
    "day": BackgroundEnvironment(
        reference_rate_hz=100.0,
        rx_diameter_m=1.0,
        fov_rad=10e-6,
        filter_bw_hz=10e6,
        regime=Regime.DAY,
    ),
    "night": BackgroundEnvironment(
        reference_rate_hz=100.0,
        rx_diameter_m=1.0,
        fov_rad=50e-6,
        filter_bw_m=1e-9,
        regime=Regime.NIGHT,
    ),
    "none": BackgroundEnvironment(
        reference_rate_hz=0.0,
        rx_diameter_m=1.0,
        fov_rad=10e-6,
        filter_bw_hz=10e6,
        regime=Regime.NONE,
    ),
}


def get_background_preset(name: str) -> BackgroundEnvironment:
    try:
        return BACKGROUND_PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown background preset {name!r}; choose from {', '.join(BACKGROUND_PRESETS)}"
        ) from None


def background_rate(
    env: BackgroundEnvironment,
    rx_diameter_m: float,
    filter_bw_hz: float,
    fov_rad: float,
    wavelength_m: Optional[float] = None,
) -> float:
    """Background counts/s for a receiver, scaled from the reference."""
    if rx_diameter_m <= 0 or filter_bw_hz <= 0 or fov_rad <= 0:
        raise ValueError("receiver diameter, filter bandwidth and fov must be > 0")
    area_ratio = (rx_diameter_m / env.rx_diameter_m) ** 2
    bandwidth_ratio = filter_bw_hz / env.reference_bandwidth_hz(wavelength_m)
    solid_angle_ratio = (fov_rad / env.fov_rad) ** 2
    return env.reference_rate_hz * area_ratio * bandwidth_ratio * solid_angle_ratio


@dataclass(frozen=True)
class CoincidenceModel:
    coincidence_window_s: float
    source_rate_hz: float
    eta_single_max: float

    def __post_init__(self):
        if self.coincidence_window_s <= 0:
            raise ValueError("coincidence_window_s must be > 0")
        if self.source_rate_hz <= 0:
            raise ValueError("source_rate_hz must be > 0")
        if not 0.0 <= self.eta_single_max <= 1.0:
            raise ValueError("eta_single_max must be in [0, 1]")

    @classmethod
    def for_source(cls, source_rate_hz: float, eta_single_max: float) -> "CoincidenceModel":
        """Coincidence window set to the inverse source rate."""
        return cls(1.0 / source_rate_hz, source_rate_hz, eta_single_max)


def false_coincidence_error_fraction(
    coinc: CoincidenceModel,
    noise_rate_hz: float,
    eta2_at_peak: float,
    both_stations: bool = True,
) -> float:
    """Share of heralded coincidences caused by a background photon.

    P_noise * P_single over (that + P_pair), with P_noise = R_noise*T,
    P_single = R_s*eta1_max*T and P_pair = R_s*eta2*T. The noise term is
    doubled when either station can supply the background photon.
    """
    if noise_rate_hz < 0 or eta2_at_peak < 0:
        raise ValueError("rates must be >= 0")
    window = coinc.coincidence_window_s
    p_noise = noise_rate_hz * window
    p_single = coinc.source_rate_hz * coinc.eta_single_max * window
    false = p_noise * p_single * (2.0 if both_stations else 1.0)
    p_pair = coinc.source_rate_hz * eta2_at_peak * window
    if p_pair == 0.0:
        return 0.0 if false == 0.0 else 1.0
    return false / (false + p_pair)
