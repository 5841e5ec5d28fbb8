"""Stage 0: orbit and mutual-visibility windows."""

from typing import List

from config import SECONDS_PER_DAY
from engines.base import Flag, PipelineStage, ScenarioContext, Severity, Stage
from orbital.geometry import max_mutual_visibility_distance, orbital_period
from orbital.passes import find_pass_windows, flybys_per_day, link_orbit, link_stations


class OrbitEngine(PipelineStage):
    """
    Stage 0: place the stations of one representative link and find its passes.

    Flags:
    - OR-001: No mutual visibility at this link length
    - OR-002: Stationary ground track (continuous contact)
    """

    @property
    def stage_type(self) -> Stage:
        return Stage.ORBIT

    def run(self, context: ScenarioContext) -> List[Flag]:
        scenario = context.scenario
        if scenario.mode == "fiber":
            return []

        earth = context.earth
        link_length = context.link_length_m
        stations = link_stations(link_length, earth, scenario.min_elevation_rad)
        orbit = link_orbit(scenario.satellite_altitude_m, scenario.orbit_direction, earth)
        periods = orbital_period(orbit, earth)
        horizon = SECONDS_PER_DAY if periods.stationary else periods.synodic_s
        windows = find_pass_windows(stations[0], stations[1], orbit, earth, horizon, scenario.step_s)

        context.stations = stations
        context.orbit = orbit
        context.windows = windows
        context.flybys_per_day = flybys_per_day(windows, orbit, earth)

        flags = []
        if not windows:
            reach = max_mutual_visibility_distance(
                scenario.satellite_altitude_m, earth, scenario.min_elevation_rad
            )
            flags.append(
                self.flag(
                    Severity.WARNING,
                    "OR-001",
                    "No mutual visibility",
                    value=f"{link_length / 1e3:.0f} km link",
                    expected=f"<= {reach / 1e3:.0f} km",
                )
            )
        if periods.stationary:
            flags.append(
                self.flag(Severity.INFO, "OR-002", "Stationary ground track, contact counted as continuous")
            )
        return flags
