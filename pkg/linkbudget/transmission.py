"""Single-arm and two-photon transmission over a flyby, plus the fiber baseline."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import trapezoid

from config import Config, get_config
from errors import EmptyWindowError
from linkbudget.atmosphere import AtmosphereModel, atmospheric_transmittance
from linkbudget.diffraction import fraction_from_db, loss_db, pointing_smeared_fraction
from orbital.geometry import EarthModel, GeometrySample, GroundStation, OrbitSpec, orbital_period
from orbital.passes import PassWindow, link_geometry_at

logger = logging.getLogger(__name__)

FIBER_ATTENUATION_DB_PER_KM = 0.15


@dataclass(frozen=True)
class OpticalChannel:
    """One satellite-to-ground downlink arm."""

    wavelength_m: float
    tx_aperture_m: float
    rx_aperture_m: float
    pointing_sigma_rad: float = 0.0
    excess_loss_db: float = 0.0

    def __post_init__(self):
        for name in ("wavelength_m", "tx_aperture_m", "rx_aperture_m"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if self.pointing_sigma_rad < 0:
            raise ValueError("pointing_sigma_rad must be >= 0")
        if self.excess_loss_db < 0:
            raise ValueError("excess_loss_db must be >= 0")


@dataclass(frozen=True, eq=False)
class TransmissionProfile:
    """Per-arm and combined transmission sampled across one pass window."""

    t_s: np.ndarray
    eta1_a: np.ndarray
    eta1_b: np.ndarray
    eta2: np.ndarray
    window: PassWindow

    def __post_init__(self):
        arrays = (self.t_s, self.eta1_a, self.eta1_b, self.eta2)
        if len({len(a) for a in arrays}) != 1:
            raise ValueError("profile arrays differ in length")
        for arr in arrays[1:]:
            if np.any(arr < 0.0) or np.any(arr > 1.0):
                raise ValueError("transmission outside [0, 1]")

    def __len__(self) -> int:
        return len(self.t_s)


@dataclass(frozen=True)
class ProfileSummary:
    """Flyby-level quantities derived from a TransmissionProfile."""

    t_fb_s: float
    integral_eta2_s: float
    p0_avg: float
    eta1_max: float
    peak_eta2: float

    @property
    def peak_loss_db(self) -> float:
        """Smallest two-photon loss over the window."""
        return loss_db(self.peak_eta2)

    def to_dict(self) -> dict:
        return {
            "T_FB_s": self.t_fb_s,
            "integral_eta2_s": self.integral_eta2_s,
            "P0_avg": self.p0_avg,
            "eta1_max": self.eta1_max,
            "peak_eta2": self.peak_eta2,
            "peak_loss_db": self.peak_loss_db,
        }


def single_photon_transmission(
    channel: OpticalChannel,
    model: AtmosphereModel,
    geom: GeometrySample,
    arm: str,
    config: Optional[Config] = None,
) -> float:
    """eta1 = pointing-smeared diffraction * atmosphere * excess optics loss."""
    slant, elevation = geom.arm(arm)
    if elevation <= 0.0:
        return 0.0
    config = config or get_config()
    diffraction = pointing_smeared_fraction(
        channel, slant, abs_tol=config.quad_abs_tol, far_field_factor=config.far_field_factor
    )
    atmosphere = atmospheric_transmittance(model, channel.wavelength_m, elevation)
    return diffraction * atmosphere * fraction_from_db(channel.excess_loss_db)


def profile_times(window: PassWindow, step_s: float) -> np.ndarray:
    """Sample instants from window start at step_s, closing on the window end."""
    times = np.arange(window.t_start_s, window.t_end_s, step_s, dtype=float)
    if len(times) == 0 or window.t_end_s - times[-1] > 1e-9:
        times = np.append(times, window.t_end_s)
    return times


def two_photon_profile(
    station_a: GroundStation,
    station_b: GroundStation,
    orbit: OrbitSpec,
    earth: EarthModel,
    channel: OpticalChannel,
    model: AtmosphereModel,
    window: Optional[PassWindow],
    step_s: float,
    config: Optional[Config] = None,
) -> Tuple[TransmissionProfile, ProfileSummary]:
    """Sample both arms over a window and derive P0_avg, eta1_max and T_FB."""
    if window is None:
        raise EmptyWindowError("no mutual visibility")
    config = config or get_config()

    if orbital_period(orbit, earth).stationary:
        # Constant geometry: the trapezoid over two edge samples is exact
        times = np.array([window.t_start_s, window.t_end_s])
    else:
        times = profile_times(window, step_s)

    eta1_a = np.empty(len(times))
    eta1_b = np.empty(len(times))
    for i, t in enumerate(times):
        geom = link_geometry_at(station_a, station_b, orbit, earth, float(t))
        eta1_a[i] = single_photon_transmission(channel, model, geom, "A", config)
        eta1_b[i] = single_photon_transmission(channel, model, geom, "B", config)
    eta2 = eta1_a * eta1_b

    profile = TransmissionProfile(times, eta1_a, eta1_b, eta2, window)
    integral = float(trapezoid(eta2, times))
    summary = ProfileSummary(
        t_fb_s=window.duration_s,
        integral_eta2_s=integral,
        p0_avg=integral / window.duration_s,
        eta1_max=float(max(eta1_a.max(), eta1_b.max())),
        peak_eta2=float(eta2.max()),
    )
    logger.debug(
        f"Profile: {len(times)} samples, T_FB={summary.t_fb_s:.1f} s, "
        f"P0_avg={summary.p0_avg:.3e}, peak loss {summary.peak_loss_db:.2f} dB"
    )
    return profile, summary


def fiber_loss_db(distance_m: float, atten_db_per_km: float = FIBER_ATTENUATION_DB_PER_KM) -> float:
    if distance_m < 0:
        raise ValueError(f"distance must be >= 0, got {distance_m}")
    return atten_db_per_km * (distance_m / 1000.0)


def fiber_transmission(distance_m: float, atten_db_per_km: float = FIBER_ATTENUATION_DB_PER_KM) -> float:
    """10^(-atten * km / 10)."""
    return fraction_from_db(fiber_loss_db(distance_m, atten_db_per_km))
