"""Mutual-visibility windows for one elementary link or one direct link."""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq

from config import SECONDS_PER_DAY
from orbital.geometry import (
    Direction,
    EarthModel,
    GeometrySample,
    GroundStation,
    OrbitSpec,
    TWO_PI,
    elevation_and_range,
    ground_track_rate,
    orbital_period,
    subsatellite_angle,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PassWindow:
    """Interval of simultaneous visibility from both stations."""

    t_start_s: float
    t_end_s: float

    def __post_init__(self):
        if not self.t_end_s > self.t_start_s:
            raise ValueError(
                f"t_end_s ({self.t_end_s}) must be > t_start_s ({self.t_start_s})"
            )

    @property
    def duration_s(self) -> float:
        """Flyby time T_FB."""
        return self.t_end_s - self.t_start_s


def link_stations(
    ground_distance_m: float, earth: EarthModel, min_elevation_rad: float
) -> Tuple[GroundStation, GroundStation]:
    """Two stations straddling longitude 0, ground_distance_m apart."""
    half = ground_distance_m / (2.0 * earth.radius_m)
    return (
        GroundStation(math.fmod(TWO_PI - half, TWO_PI), min_elevation_rad),
        GroundStation(math.fmod(half, TWO_PI), min_elevation_rad),
    )


def chain_stations(
    total_distance_m: float, nesting_n: int, earth: EarthModel, min_elevation_rad: float
) -> List[GroundStation]:
    """The 2^n + 1 equally spaced stations of a repeater chain."""
    links = 2**nesting_n
    start = -total_distance_m / (2.0 * earth.radius_m)
    spacing = total_distance_m / links / earth.radius_m
    return [
        GroundStation(float(np.mod(start + k * spacing, TWO_PI)), min_elevation_rad)
        for k in range(links + 1)
    ]


def link_orbit(altitude_m: float, direction: Direction, earth: EarthModel) -> OrbitSpec:
    """Orbit phased so the sub-satellite point crosses longitude 0 at t = synodic/2.

    Stationary ground tracks sit above longitude 0 permanently.
    """
    base = OrbitSpec(altitude_m=altitude_m, direction=direction)
    if ground_track_rate(base, earth) == 0.0:
        return base
    return OrbitSpec(altitude_m=altitude_m, direction=direction, phase0_rad=math.pi)


def link_geometry_at(
    station_a: GroundStation,
    station_b: GroundStation,
    orbit: OrbitSpec,
    earth: EarthModel,
    t: float,
) -> GeometrySample:
    """Geometry of both arms at time t."""
    angle = subsatellite_angle(orbit, earth, t)
    elev_a, slant_a = elevation_and_range(station_a, angle, orbit.altitude_m, earth)
    elev_b, slant_b = elevation_and_range(station_b, angle, orbit.altitude_m, earth)
    return GeometrySample(
        t_s=float(t),
        slant_range_a_m=float(slant_a),
        slant_range_b_m=float(slant_b),
        elevation_a_rad=float(elev_a),
        elevation_b_rad=float(elev_b),
    )


def _visibility_margin(
    station_a: GroundStation,
    station_b: GroundStation,
    orbit: OrbitSpec,
    earth: EarthModel,
    t,
):
    """min over stations of (elevation - cutoff); >= 0 means mutually visible."""
    angle = subsatellite_angle(orbit, earth, t)
    elev_a, _ = elevation_and_range(station_a, angle, orbit.altitude_m, earth)
    elev_b, _ = elevation_and_range(station_b, angle, orbit.altitude_m, earth)
    return np.minimum(
        np.asarray(elev_a) - station_a.min_elevation_rad,
        np.asarray(elev_b) - station_b.min_elevation_rad,
    )


def find_pass_windows(
    station_a: GroundStation,
    station_b: GroundStation,
    orbit: OrbitSpec,
    earth: EarthModel,
    horizon_s: float,
    step_s: float,
) -> List[PassWindow]:
    """Maximal intervals in [0, horizon_s] with both elevations above cutoff.

    Visibility is sampled every step_s; each boundary is then refined by
    root bracketing between the straddling samples.
    """
    if step_s <= 0:
        raise ValueError(f"step_s must be > 0, got {step_s}")
    periods = orbital_period(orbit, earth)
    if not periods.stationary and horizon_s < periods.synodic_s * (1.0 - 1e-12):
        raise ValueError(
            f"horizon_s ({horizon_s:.1f}) shorter than synodic period ({periods.synodic_s:.1f})"
        )

    if periods.stationary:
        margin = float(_visibility_margin(station_a, station_b, orbit, earth, 0.0))
        return [PassWindow(0.0, float(horizon_s))] if margin >= 0 else []

    n_steps = int(math.floor(horizon_s / step_s))
    times = np.arange(n_steps + 1, dtype=float) * step_s
    if times[-1] < horizon_s:
        times = np.append(times, float(horizon_s))
    margin = _visibility_margin(station_a, station_b, orbit, earth, times)
    visible = margin >= 0.0
    if not visible.any():
        return []

    def f(t: float) -> float:
        return float(_visibility_margin(station_a, station_b, orbit, earth, t))

    edges = np.diff(np.concatenate(([0], visible.astype(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1) - 1
    last = len(times) - 1

    windows = []
    for i0, i1 in zip(starts, ends):
        t_start = times[i0] if i0 == 0 else brentq(f, times[i0 - 1], times[i0], xtol=1e-6)
        t_end = times[i1] if i1 == last else brentq(f, times[i1], times[i1 + 1], xtol=1e-6)
        if t_end > t_start:
            windows.append(PassWindow(float(t_start), float(t_end)))
    logger.debug(f"Found {len(windows)} window(s) over {horizon_s:.0f} s")
    return windows


def merge_wrapped_windows(windows: Sequence[PassWindow], period_s: float) -> List[PassWindow]:
    """Join a pass split across the period edge into one window ending past period_s."""
    windows = list(windows)
    if (
        len(windows) >= 2
        and windows[0].t_start_s == 0.0
        and math.isclose(windows[-1].t_end_s, period_s, rel_tol=0.0, abs_tol=1e-6)
    ):
        joined = PassWindow(windows[-1].t_start_s, windows[0].t_end_s + period_s)
        return windows[1:-1] + [joined]
    return windows


def windows_per_period(windows: Sequence[PassWindow], period_s: float) -> int:
    """Distinct passes in one period; a pass split across the period edge counts once."""
    return len(merge_wrapped_windows(windows, period_s))


def flybys_per_day(windows: Sequence[PassWindow], orbit: OrbitSpec, earth: EarthModel) -> float:
    """Mean number of passes per 86 400 s.

    Windows must come from a search over exactly one synodic period (or one
    day for a stationary ground track, which counts as one continuous contact).
    """
    periods = orbital_period(orbit, earth)
    if periods.stationary:
        return 1.0 if windows else 0.0
    return windows_per_period(windows, periods.synodic_s) * SECONDS_PER_DAY / periods.synodic_s


def representative_window(windows: Sequence[PassWindow], period_s: Optional[float] = None) -> PassWindow:
    """Longest window; the link-centred pass for a midpoint-phased orbit.

    With period_s, fragments of a pass split across the period edge are
    joined first, so the full pass competes rather than its halves.
    """
    if period_s is not None:
        windows = merge_wrapped_windows(windows, period_s)
    return max(windows, key=lambda w: w.duration_s)
