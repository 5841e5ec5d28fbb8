"""Circular equatorial orbit geometry.

Angles live on the equatorial great circle and are measured eastward, in the
direction of Earth's rotation, in the rotating Earth frame. A counter-rotating
satellite therefore has a negative ground-frame angular rate.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

import numpy as np

from config import Config, get_config

ArrayLike = Union[float, np.ndarray]

TWO_PI = 2.0 * math.pi

# Relative ground-track rate below which an orbit counts as stationary
STATIONARY_RATE_TOL = 1e-9


class Direction(Enum):
    """Orbital direction relative to Earth's rotation."""

    CO_ROTATING = "co-rotating"
    COUNTER_ROTATING = "counter-rotating"


@dataclass(frozen=True)
class EarthModel:
    """Spherical, non-perturbing Earth."""

    radius_m: float = 6_371.0e3
    mu_m3s2: float = 3.986004418e14
    rotation_period_s: float = 86_164.1

    def __post_init__(self):
        for name in ("radius_m", "mu_m3s2", "rotation_period_s"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")

    @property
    def rotation_rate(self) -> float:
        """Sidereal angular rate omega_E in rad/s."""
        return TWO_PI / self.rotation_period_s

    @classmethod
    def from_config(cls, config: Optional[Config] = None) -> "EarthModel":
        config = config or get_config()
        return cls(
            radius_m=config.earth_radius_m,
            mu_m3s2=config.earth_gm,
            rotation_period_s=config.sidereal_day_s,
        )


@dataclass(frozen=True)
class OrbitSpec:
    """Circular equatorial orbit."""

    altitude_m: float
    direction: Direction = Direction.COUNTER_ROTATING
    phase0_rad: float = 0.0

    def __post_init__(self):
        if self.altitude_m <= 0:
            raise ValueError(f"altitude_m must be > 0, got {self.altitude_m}")
        if not 0.0 <= self.phase0_rad < TWO_PI:
            raise ValueError(f"phase0_rad must be in [0, 2pi), got {self.phase0_rad}")


@dataclass(frozen=True)
class GroundStation:
    """Station on the equatorial great circle."""

    longitude_rad: float
    min_elevation_rad: float = math.radians(10.0)

    def __post_init__(self):
        if not 0.0 <= self.min_elevation_rad < math.pi / 2:
            raise ValueError(
                f"min_elevation_rad must be in [0, pi/2), got {self.min_elevation_rad}"
            )


@dataclass(frozen=True)
class GeometrySample:
    """Elevation and slant range at both stations of a link at one instant."""

    t_s: float
    slant_range_a_m: float
    slant_range_b_m: float
    elevation_a_rad: float
    elevation_b_rad: float

    def arm(self, which: str) -> Tuple[float, float]:
        """Return (slant_range_m, elevation_rad) for arm "A" or "B"."""
        if which == "A":
            return self.slant_range_a_m, self.elevation_a_rad
        if which == "B":
            return self.slant_range_b_m, self.elevation_b_rad
        raise ValueError(f"arm must be 'A' or 'B', got {which!r}")


@dataclass(frozen=True)
class OrbitalPeriods:
    """Absolute and ground-frame (synodic) periods.

    synodic_s is math.inf for a stationary ground track.
    """

    absolute_s: float
    synodic_s: float

    @property
    def stationary(self) -> bool:
        return math.isinf(self.synodic_s)


def mean_motion(altitude_m: float, earth: EarthModel) -> float:
    """Inertial angular rate omega = sqrt(GM / (R_e + h)^3)."""
    radius = earth.radius_m + altitude_m
    return math.sqrt(earth.mu_m3s2 / radius**3)


def ground_track_rate(orbit: OrbitSpec, earth: EarthModel) -> float:
    """Signed angular rate of the sub-satellite point in the Earth frame (rad/s).

    Returns exactly 0.0 for a stationary ground track.
    """
    omega = mean_motion(orbit.altitude_m, earth)
    omega_e = earth.rotation_rate
    if orbit.direction is Direction.CO_ROTATING:
        rate = omega - omega_e
        if abs(rate) <= STATIONARY_RATE_TOL * omega_e:
            return 0.0
        return rate
    return -(omega + omega_e)


def orbital_period(orbit: OrbitSpec, earth: EarthModel) -> OrbitalPeriods:
    """Absolute period 2pi/omega and synodic period 2pi/|omega -+ omega_E|."""
    omega = mean_motion(orbit.altitude_m, earth)
    rate = ground_track_rate(orbit, earth)
    synodic = math.inf if rate == 0.0 else TWO_PI / abs(rate)
    return OrbitalPeriods(absolute_s=TWO_PI / omega, synodic_s=synodic)


def geostationary_altitude(earth: EarthModel) -> float:
    """Altitude whose mean motion equals the sidereal rotation rate."""
    radius = (earth.mu_m3s2 / earth.rotation_rate**2) ** (1.0 / 3.0)
    return radius - earth.radius_m


def subsatellite_angle(orbit: OrbitSpec, earth: EarthModel, t: ArrayLike) -> ArrayLike:
    """Sub-satellite longitude in the rotating Earth frame, in [0, 2pi)."""
    rate = ground_track_rate(orbit, earth)
    return np.mod(orbit.phase0_rad + rate * np.asarray(t, dtype=float), TWO_PI)


def central_angle(a: ArrayLike, b: ArrayLike) -> ArrayLike:
    """Unsigned angular separation on the great circle, in [0, pi]."""
    delta = np.mod(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), TWO_PI)
    return np.minimum(delta, TWO_PI - delta)


def elevation_and_range(
    station: GroundStation,
    subsat_angle: ArrayLike,
    altitude_m: float,
    earth: EarthModel,
) -> Tuple[ArrayLike, ArrayLike]:
    """Elevation (rad) and slant range (m) of the satellite seen from a station."""
    r_e = earth.radius_m
    r_s = r_e + altitude_m
    cos_delta = np.cos(central_angle(station.longitude_rad, subsat_angle))
    slant = np.sqrt(r_e**2 + r_s**2 - 2.0 * r_e * r_s * cos_delta)
    sin_elev = np.clip((r_s * cos_delta - r_e) / slant, -1.0, 1.0)
    elevation = np.arcsin(sin_elev)
    if np.ndim(elevation) == 0:
        return float(elevation), float(slant)
    return elevation, slant


def horizon_angle(altitude_m: float, earth: EarthModel, min_elevation_rad: float = 0.0) -> float:
    """Largest station to sub-satellite central angle with elevation >= cutoff."""
    r_e = earth.radius_m
    ratio = r_e * math.cos(min_elevation_rad) / (r_e + altitude_m)
    return math.acos(ratio) - min_elevation_rad


def max_mutual_visibility_distance(
    altitude_m: float, earth: EarthModel, min_elevation_rad: float = 0.0
) -> float:
    """Largest ground distance over which two stations can see one satellite."""
    return 2.0 * earth.radius_m * horizon_angle(altitude_m, earth, min_elevation_rad)
