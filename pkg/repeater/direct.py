"""Baselines: direct two-photon downlink from one satellite, and plain fiber."""

import logging
import math
from typing import Optional, Tuple

from config import SECONDS_PER_DAY, Config
from linkbudget.atmosphere import AtmosphereModel
from linkbudget.transmission import (
    OpticalChannel,
    ProfileSummary,
    fiber_transmission,
    two_photon_profile,
)
from orbital.geometry import Direction, EarthModel, orbital_period
from orbital.passes import (
    find_pass_windows,
    flybys_per_day,
    link_orbit,
    link_stations,
    representative_window,
)
from repeater.rates import LinkMode, RateResult

logger = logging.getLogger(__name__)

DIRECT_SOURCE_RATE_HZ = 1e9


def direct_rate_from_profile(
    summary: Optional[ProfileSummary],
    flybys: float,
    source_rate_hz: float,
    distance_m: float,
    altitude_m: float,
) -> RateResult:
    """pairs/day = R_s * integral(eta2 dt) per pass * passes per day."""
    inputs = {
        "source_rate_hz": source_rate_hz,
        "total_ground_distance_m": distance_m,
        "satellite_altitude_m": altitude_m,
    }
    if summary is None:
        return RateResult(
            mode=LinkMode.DIRECT,
            pairs_per_day=0.0,
            pairs_per_flyby=0.0,
            flybys_per_day=0.0,
            t_fb_s=0.0,
            p0_avg=0.0,
            n_links=1,
            inputs=inputs,
        )
    per_flyby = source_rate_hz * summary.integral_eta2_s
    inputs["eta1_max"] = summary.eta1_max
    return RateResult(
        mode=LinkMode.DIRECT,
        pairs_per_day=per_flyby * flybys,
        pairs_per_flyby=per_flyby,
        flybys_per_day=flybys,
        t_fb_s=summary.t_fb_s,
        p0_avg=summary.p0_avg,
        n_links=1,
        inputs=inputs,
    )


def direct_transmission_rate(
    distance_m: float,
    altitude_m: float,
    channel: OpticalChannel,
    model: AtmosphereModel,
    earth: EarthModel,
    source_rate_hz: float = DIRECT_SOURCE_RATE_HZ,
    step_s: float = 10.0,
    min_elevation_rad: float = math.radians(10.0),
    direction: Direction = Direction.COUNTER_ROTATING,
    config: Optional[Config] = None,
) -> Tuple[RateResult, Optional[ProfileSummary]]:
    """Direct-transmission rate integrated over 24 h of passes."""
    station_a, station_b = link_stations(distance_m, earth, min_elevation_rad)
    orbit = link_orbit(altitude_m, direction, earth)
    periods = orbital_period(orbit, earth)
    horizon = SECONDS_PER_DAY if periods.stationary else periods.synodic_s
    windows = find_pass_windows(station_a, station_b, orbit, earth, horizon, step_s)
    if not windows:
        logger.info(f"No mutual visibility at {distance_m / 1e3:.0f} km from h={altitude_m / 1e3:.0f} km")
        return direct_rate_from_profile(None, 0.0, source_rate_hz, distance_m, altitude_m), None
    window = representative_window(windows, None if periods.stationary else periods.synodic_s)
    _, summary = two_photon_profile(station_a, station_b, orbit, earth, channel, model, window, step_s, config)
    flybys = flybys_per_day(windows, orbit, earth)
    return direct_rate_from_profile(summary, flybys, source_rate_hz, distance_m, altitude_m), summary


def fiber_rate(distance_m: float, source_rate_hz: float = DIRECT_SOURCE_RATE_HZ) -> RateResult:
    """Midpoint pair source, both photons through fiber: R_s * 86400 * 10^(-0.15 L_km / 10)."""
    eta = fiber_transmission(distance_m)
    return RateResult(
        mode=LinkMode.FIBER,
        pairs_per_day=source_rate_hz * SECONDS_PER_DAY * eta,
        p0_avg=eta,
        n_links=1,
        inputs={"source_rate_hz": source_rate_hz, "total_ground_distance_m": distance_m},
    )


def time_to_first_pair_s(result: RateResult) -> float:
    """Mean waiting time for one distributed pair; inf for a zero rate."""
    if result.pairs_per_day <= 0.0:
        return math.inf
    return SECONDS_PER_DAY / result.pairs_per_day
