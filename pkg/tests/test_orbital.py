"""Tests for orbit geometry and mutual-visibility windows."""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from orbital.geometry import (
    Direction,
    EarthModel,
    GroundStation,
    OrbitSpec,
    TWO_PI,
    elevation_and_range,
    geostationary_altitude,
    ground_track_rate,
    horizon_angle,
    max_mutual_visibility_distance,
    mean_motion,
    orbital_period,
    subsatellite_angle,
)
from orbital.passes import (
    PassWindow,
    chain_stations,
    find_pass_windows,
    flybys_per_day,
    link_orbit,
    link_stations,
    merge_wrapped_windows,
    representative_window,
    windows_per_period,
)


@pytest.fixture
def earth():
    return EarthModel()


class TestPeriods:
    """Kepler periods and the ground-frame (synodic) period."""

    def test_leo500_absolute_period(self, earth):
        periods = orbital_period(OrbitSpec(altitude_m=500e3), earth)
        assert periods.absolute_s == pytest.approx(5669.0, abs=2.0)

    def test_leo500_synodic_period(self, earth):
        periods = orbital_period(OrbitSpec(altitude_m=500e3, direction=Direction.COUNTER_ROTATING), earth)
        assert periods.synodic_s == pytest.approx(5319.0, abs=2.0)
        # 1/T_syn = 1/T_abs + 1/T_earth for a counter-rotating orbit
        expected = 1.0 / (1.0 / periods.absolute_s + 1.0 / earth.rotation_period_s)
        assert periods.synodic_s == pytest.approx(expected, rel=1e-12)

    def test_co_rotating_synodic_is_longer(self, earth):
        co = orbital_period(OrbitSpec(altitude_m=1000e3, direction=Direction.CO_ROTATING), earth)
        counter = orbital_period(OrbitSpec(altitude_m=1000e3, direction=Direction.COUNTER_ROTATING), earth)
        assert co.synodic_s > co.absolute_s > counter.synodic_s

    def test_geostationary_altitude(self, earth):
        assert geostationary_altitude(earth) == pytest.approx(35_793e3, abs=20e3)

    def test_geostationary_is_stationary(self, earth):
        orbit = OrbitSpec(altitude_m=geostationary_altitude(earth), direction=Direction.CO_ROTATING)
        assert ground_track_rate(orbit, earth) == 0.0
        periods = orbital_period(orbit, earth)
        assert periods.stationary
        assert periods.absolute_s == pytest.approx(earth.rotation_period_s, rel=1e-9)

    def test_mean_motion_decreases_with_altitude(self, earth):
        assert mean_motion(500e3, earth) > mean_motion(1000e3, earth) > mean_motion(1500e3, earth)


class TestGeometry:
    """Sub-satellite angle, elevation and slant range."""

    def test_subsatellite_angle_wraps(self, earth):
        orbit = OrbitSpec(altitude_m=1000e3, phase0_rad=0.1)
        angles = subsatellite_angle(orbit, earth, np.linspace(0.0, 20_000.0, 101))
        assert np.all(angles >= 0.0)
        assert np.all(angles < 2.0 * math.pi)

    def test_counter_rotating_moves_westward(self, earth):
        orbit = OrbitSpec(altitude_m=1000e3, phase0_rad=1.0)
        assert subsatellite_angle(orbit, earth, 10.0) < 1.0

    def test_zenith_overhead(self, earth):
        station = GroundStation(0.0)
        elevation, slant = elevation_and_range(station, 0.0, 1000e3, earth)
        assert elevation == pytest.approx(math.pi / 2)
        assert slant == pytest.approx(1000e3)

    def test_elevation_zero_at_horizon(self, earth):
        station = GroundStation(0.0, 0.0)
        delta = horizon_angle(1000e3, earth, 0.0)
        elevation, slant = elevation_and_range(station, delta, 1000e3, earth)
        assert elevation == pytest.approx(0.0, abs=1e-9)
        r_e, r_s = earth.radius_m, earth.radius_m + 1000e3
        assert slant == pytest.approx(math.sqrt(r_s**2 - r_e**2), rel=1e-9)

    def test_horizon_distance_leo1000(self, earth):
        assert earth.radius_m * horizon_angle(1000e3, earth) == pytest.approx(3358e3, abs=2e3)

    def test_geo_mutual_visibility_reach(self, earth):
        geo = geostationary_altitude(earth)
        reach = max_mutual_visibility_distance(geo, earth, math.radians(10.0))
        assert reach == pytest.approx(15_888e3, abs=10e3)

    def test_station_elevation_invariant(self):
        with pytest.raises(ValueError):
            GroundStation(0.0, math.pi / 2)


class TestPassWindows:
    """Window search and flyby counting."""

    def test_co_located_stations_closed_form(self, earth):
        station = GroundStation(0.0, 0.0)
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        periods = orbital_period(orbit, earth)
        windows = find_pass_windows(station, station, orbit, earth, periods.synodic_s, 10.0)
        assert len(windows) == 1
        rate = mean_motion(1000e3, earth) + earth.rotation_rate
        expected = 2.0 * math.acos(earth.radius_m / (earth.radius_m + 1000e3)) / rate
        assert windows[0].duration_s == pytest.approx(expected, abs=1e-3)

    def test_link_window_centred_mid_period(self, earth):
        a, b = link_stations(2000e3, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        synodic = orbital_period(orbit, earth).synodic_s
        windows = find_pass_windows(a, b, orbit, earth, synodic, 10.0)
        assert len(windows) == 1
        window = windows[0]
        assert (window.t_start_s + window.t_end_s) / 2.0 == pytest.approx(synodic / 2.0, abs=1e-3)

        rate = mean_motion(1000e3, earth) + earth.rotation_rate
        half = 1000e3 / earth.radius_m
        expected = 2.0 * (horizon_angle(1000e3, earth, math.radians(10.0)) - half) / rate
        assert window.duration_s == pytest.approx(expected, abs=1e-3)

    def test_window_edges_at_cutoff(self, earth):
        cutoff = math.radians(10.0)
        a, b = link_stations(2000e3, earth, cutoff)
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        synodic = orbital_period(orbit, earth).synodic_s
        window = find_pass_windows(a, b, orbit, earth, synodic, 10.0)[0]
        angle = subsatellite_angle(orbit, earth, window.t_start_s)
        elevations = [elevation_and_range(s, angle, 1000e3, earth)[0] for s in (a, b)]
        assert min(elevations) == pytest.approx(cutoff, abs=1e-6)

    def test_no_window_beyond_reach(self, earth):
        a, b = link_stations(8000e3, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        synodic = orbital_period(orbit, earth).synodic_s
        assert find_pass_windows(a, b, orbit, earth, synodic, 10.0) == []

    def test_horizon_shorter_than_period_rejected(self, earth):
        a, b = link_stations(2000e3, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        with pytest.raises(ValueError):
            find_pass_windows(a, b, orbit, earth, 100.0, 10.0)

    def test_nonpositive_step_rejected(self, earth):
        a, b = link_stations(2000e3, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        with pytest.raises(ValueError):
            find_pass_windows(a, b, orbit, earth, 1e5, 0.0)

    def test_flybys_per_day(self, earth):
        a, b = link_stations(2000e3, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        synodic = orbital_period(orbit, earth).synodic_s
        windows = find_pass_windows(a, b, orbit, earth, synodic, 10.0)
        assert flybys_per_day(windows, orbit, earth) == pytest.approx(86_400.0 / synodic)

    def test_stationary_continuous_contact(self, earth):
        geo = geostationary_altitude(earth)
        a, b = link_stations(8000e3, earth, math.radians(10.0))
        orbit = link_orbit(geo, Direction.CO_ROTATING, earth)
        windows = find_pass_windows(a, b, orbit, earth, 86_400.0, 10.0)
        assert windows == [PassWindow(0.0, 86_400.0)]
        assert flybys_per_day(windows, orbit, earth) == 1.0

    def test_stationary_out_of_reach(self, earth):
        geo = geostationary_altitude(earth)
        a, b = link_stations(20_000e3, earth, math.radians(10.0))
        orbit = link_orbit(geo, Direction.CO_ROTATING, earth)
        windows = find_pass_windows(a, b, orbit, earth, 86_400.0, 10.0)
        assert windows == []
        assert flybys_per_day(windows, orbit, earth) == 0.0

    def test_split_pass_counted_once(self):
        windows = [PassWindow(0.0, 100.0), PassWindow(900.0, 1000.0)]
        assert windows_per_period(windows, 1000.0) == 1
        assert merge_wrapped_windows(windows, 1000.0) == [PassWindow(900.0, 1100.0)]
        assert representative_window(windows, 1000.0) == PassWindow(900.0, 1100.0)

    def test_split_pass_beats_shorter_whole_pass(self):
        windows = [PassWindow(0.0, 100.0), PassWindow(400.0, 550.0), PassWindow(900.0, 1000.0)]
        assert windows_per_period(windows, 1000.0) == 2
        assert representative_window(windows) == PassWindow(400.0, 550.0)
        assert representative_window(windows, 1000.0) == PassWindow(900.0, 1100.0)

    def test_unsplit_windows_untouched(self):
        windows = [PassWindow(10.0, 100.0), PassWindow(900.0, 1000.0)]
        assert merge_wrapped_windows(windows, 1000.0) == windows

    def test_invalid_window(self):
        with pytest.raises(ValueError):
            PassWindow(10.0, 10.0)


class TestPassInvariants:
    """Window search symmetries and step-size independence."""

    @pytest.fixture
    def link(self, earth):
        a, b = link_stations(2000e3, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        return a, b, orbit, orbital_period(orbit, earth).synodic_s

    @staticmethod
    def rotated(station, delta):
        return GroundStation((station.longitude_rad + delta) % TWO_PI, station.min_elevation_rad)

    def test_station_swap_symmetric(self, earth, link):
        a, b, orbit, synodic = link
        forward = find_pass_windows(a, b, orbit, earth, synodic, 10.0)
        backward = find_pass_windows(b, a, orbit, earth, synodic, 10.0)
        assert len(forward) == len(backward) == 1
        assert backward[0].t_start_s == pytest.approx(forward[0].t_start_s, abs=1e-6)
        assert backward[0].t_end_s == pytest.approx(forward[0].t_end_s, abs=1e-6)

    @pytest.mark.parametrize("delta", [0.5, 1.0, math.pi, 4.0])
    def test_visible_time_invariant_under_rotation(self, earth, link, delta):
        a, b, orbit, synodic = link
        reference = sum(w.duration_s for w in find_pass_windows(a, b, orbit, earth, synodic, 10.0))
        windows = find_pass_windows(self.rotated(a, delta), self.rotated(b, delta), orbit, earth, synodic, 10.0)
        assert sum(w.duration_s for w in windows) == pytest.approx(reference, abs=1e-3)
        assert windows_per_period(windows, synodic) == 1

    def test_pass_across_period_edge_keeps_full_duration(self, earth, link):
        a, b, orbit, synodic = link
        reference = find_pass_windows(a, b, orbit, earth, synodic, 10.0)[0]
        # Half a turn puts the pass centre on t = 0
        windows = find_pass_windows(self.rotated(a, math.pi), self.rotated(b, math.pi), orbit, earth, synodic, 10.0)
        assert len(windows) == 2
        window = representative_window(windows, synodic)
        assert window.duration_s == pytest.approx(reference.duration_s, abs=1e-3)
        assert window.t_end_s > synodic
        assert flybys_per_day(windows, orbit, earth) == pytest.approx(86_400.0 / synodic)

    @pytest.mark.parametrize("distance_m", [500e3, 2000e3, 4000e3])
    def test_edges_stable_under_step_refinement(self, earth, distance_m):
        a, b = link_stations(distance_m, earth, math.radians(10.0))
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        synodic = orbital_period(orbit, earth).synodic_s
        coarse = find_pass_windows(a, b, orbit, earth, synodic, 10.0)
        fine = find_pass_windows(a, b, orbit, earth, synodic, 1.0)
        assert len(coarse) == len(fine) == 1
        assert abs(coarse[0].t_start_s - fine[0].t_start_s) < 10.0
        assert abs(coarse[0].t_end_s - fine[0].t_end_s) < 10.0


class TestStations:
    def test_link_stations_spacing(self, earth):
        a, b = link_stations(2000e3, earth, 0.0)
        separation = (b.longitude_rad - a.longitude_rad) % (2.0 * math.pi)
        assert separation * earth.radius_m == pytest.approx(2000e3)

    def test_chain_stations(self, earth):
        stations = chain_stations(20_000e3, 3, earth, math.radians(10.0))
        assert len(stations) == 9
        gaps = [
            ((s2.longitude_rad - s1.longitude_rad) % (2.0 * math.pi)) * earth.radius_m
            for s1, s2 in zip(stations, stations[1:])
        ]
        assert gaps == pytest.approx([2500e3] * 8)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
