"""Circular equatorial orbits, station geometry and pass windows."""

from .geometry import (
    Direction,
    EarthModel,
    GeometrySample,
    GroundStation,
    OrbitalPeriods,
    OrbitSpec,
    central_angle,
    elevation_and_range,
    geostationary_altitude,
    ground_track_rate,
    horizon_angle,
    max_mutual_visibility_distance,
    mean_motion,
    orbital_period,
    subsatellite_angle,
)
from .passes import (
    PassWindow,
    chain_stations,
    find_pass_windows,
    flybys_per_day,
    link_geometry_at,
    link_orbit,
    link_stations,
    merge_wrapped_windows,
    representative_window,
    windows_per_period,
)

__all__ = [
    # Geometry
    "Direction",
    "EarthModel",
    "GeometrySample",
    "GroundStation",
    "OrbitalPeriods",
    "OrbitSpec",
    "central_angle",
    "elevation_and_range",
    "geostationary_altitude",
    "ground_track_rate",
    "horizon_angle",
    "max_mutual_visibility_distance",
    "mean_motion",
    "orbital_period",
    "subsatellite_angle",
    # Passes
    "PassWindow",
    "chain_stations",
    "find_pass_windows",
    "flybys_per_day",
    "link_geometry_at",
    "link_orbit",
    "link_stations",
    "merge_wrapped_windows",
    "representative_window",
    "windows_per_period",
]
