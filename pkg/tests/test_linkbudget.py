"""Tests for diffraction, pointing jitter, atmosphere and transmission profiles."""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from scipy import integrate, signal, special

from config import Config
from errors import ConfigurationError, EmptyWindowError, FarFieldViolationError
from knowledge.atmosphere_loader import CALIBRATED_LABEL, load_atmosphere, load_atmosphere_table
from knowledge.presets import get_channel_preset
from linkbudget.atmosphere import AtmosphereModel, atmospheric_transmittance
from linkbudget.diffraction import (
    airy_collection_fraction,
    encircled_energy,
    fraction_from_db,
    fresnel_distance,
    loss_db,
    pointing_smeared_fraction,
)
from linkbudget.transmission import (
    OpticalChannel,
    fiber_loss_db,
    fiber_transmission,
    single_photon_transmission,
    two_photon_profile,
)
from orbital.geometry import Direction, EarthModel, GeometrySample, orbital_period
from orbital.passes import (
    find_pass_windows,
    link_geometry_at,
    link_orbit,
    link_stations,
    representative_window,
)


def grid_smeared_fraction(channel: OpticalChannel, slant_m: float, cell_m: float = 0.01) -> float:
    """Brute-force 2-D oracle: Airy intensity times the jitter-smeared aperture on a grid."""
    rx_radius = channel.rx_aperture_m / 2.0
    spread = channel.pointing_sigma_rad * slant_m
    half = rx_radius + 6.0 * spread
    n = int(math.ceil(half / cell_m))
    axis = (np.arange(-n, n + 1)) * cell_m
    x, y = np.meshgrid(axis, axis, indexing="ij")
    r = np.hypot(x, y)

    # Airy intensity per unit area for unit transmitted power
    v = math.pi * channel.tx_aperture_m * r / (channel.wavelength_m * slant_m)
    safe = np.where(v == 0.0, 1.0, v)
    shape = np.where(v == 0.0, 1.0, (2.0 * special.j1(safe) / safe) ** 2)
    peak = math.pi * channel.tx_aperture_m**2 / (4.0 * channel.wavelength_m**2 * slant_m**2)
    intensity = peak * shape

    # Aperture with anti-aliased edge, smeared by the jitter density
    aperture = np.clip((rx_radius - r) / cell_m + 0.5, 0.0, 1.0)
    kernel = np.exp(-(x**2 + y**2) / (2.0 * spread**2))
    kernel /= kernel.sum()
    smeared = signal.fftconvolve(aperture, kernel, mode="same")
    return float(np.sum(intensity * smeared) * cell_m**2)


class TestDiffraction:
    """Far-field Airy collection and pointing-jitter smearing."""

    def test_first_null_encircled_energy(self):
        wavelength, tx, slant = 580e-9, 0.5, 1414e3
        rx_radius = 1.22 * wavelength * slant / tx
        value = airy_collection_fraction(wavelength, tx, 2.0 * rx_radius, slant)
        assert value == pytest.approx(0.838, abs=1e-3)

    def test_first_null_radial_integration(self):
        first_null = special.jn_zeros(1, 1)[0]
        radial, _ = integrate.quad(lambda u: 2.0 * special.j1(u) ** 2 / u, 0.0, first_null)
        assert encircled_energy(first_null) == pytest.approx(radial, abs=1e-6)
        assert radial == pytest.approx(0.838, abs=1e-3)

    def test_encircled_energy_limits(self):
        assert encircled_energy(0.0) == 0.0
        assert encircled_energy(1e4) == pytest.approx(1.0, abs=1e-3)

    def test_encircled_energy_monotone(self):
        values = [encircled_energy(x) for x in np.linspace(0.0, 3.8, 50)]
        assert values == sorted(values)

    def test_far_field_violation(self):
        limit = fresnel_distance(580e-9, 0.5, 1.0)
        assert limit == pytest.approx(0.25 / 580e-9)
        with pytest.raises(FarFieldViolationError) as excinfo:
            airy_collection_fraction(580e-9, 0.5, 1.0, 0.5 * limit, far_field_factor=1.0)
        assert excinfo.value.fresnel_distance_m == pytest.approx(limit)

    def test_zero_sigma_matches_airy(self):
        channel = OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=0.0)
        assert pointing_smeared_fraction(channel, 1414e3) == pytest.approx(
            airy_collection_fraction(580e-9, 0.5, 1.0, 1414e3), abs=1e-6
        )

    def test_jitter_reduces_collection(self):
        values = [
            pointing_smeared_fraction(OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=s), 1414e3)
            for s in (0.0, 0.25e-6, 0.5e-6, 1e-6, 2e-6, 5e-6)
        ]
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert values[-1] < 0.01

    def test_collection_non_increasing_in_slant(self):
        channel = OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=0.5e-6)
        values = [pointing_smeared_fraction(channel, z) for z in (1000e3, 1500e3, 2500e3, 4000e3)]
        assert all(a >= b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("sigma", [0.0, 0.5e-6, 2e-6])
    def test_collection_non_decreasing_in_rx_aperture(self, sigma):
        values = [
            pointing_smeared_fraction(OpticalChannel(580e-9, 0.5, rx, pointing_sigma_rad=sigma), 2000e3)
            for rx in (0.25, 0.5, 1.0, 2.0, 4.0)
        ]
        assert all(a <= b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("sigma", [0.0, 0.5e-6, 2e-6])
    def test_doubling_apertures_never_lowers_collection(self, sigma):
        base = OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=sigma)
        wide_rx = OpticalChannel(580e-9, 0.5, 2.0, pointing_sigma_rad=sigma)
        wide_tx = OpticalChannel(580e-9, 1.0, 1.0, pointing_sigma_rad=sigma)
        reference = pointing_smeared_fraction(base, 2000e3)
        assert pointing_smeared_fraction(wide_rx, 2000e3) >= reference
        assert pointing_smeared_fraction(wide_tx, 2000e3) >= reference

    def test_explicit_far_field_factor(self):
        channel = OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=0.5e-6)
        assert pointing_smeared_fraction(channel, 1414e3, far_field_factor=1.0) > 0.0
        with pytest.raises(FarFieldViolationError):
            pointing_smeared_fraction(channel, 1414e3, far_field_factor=100.0)

    @pytest.mark.parametrize(
        "wavelength, tx, rx, sigma, slant",
        [
            (580e-9, 0.5, 1.0, 0.5e-6, 1414e3),
            (670e-9, 0.5, 1.0, 0.5e-6, 2000e3),
            (470e-9, 0.3, 0.5, 1.0e-6, 800e3),
        ],
    )
    def test_quadrature_matches_grid_convolution(self, wavelength, tx, rx, sigma, slant):
        channel = OpticalChannel(wavelength, tx, rx, pointing_sigma_rad=sigma)
        assert pointing_smeared_fraction(channel, slant) == pytest.approx(
            grid_smeared_fraction(channel, slant), abs=1e-4
        )


class TestAtmosphere:
    """Zenith table and airmass scaling."""

    def test_zenith(self):
        model = AtmosphereModel.uniform(0.8)
        assert atmospheric_transmittance(model, 580e-9, math.pi / 2) == pytest.approx(0.8)

    def test_airmass_two(self):
        model = AtmosphereModel.uniform(0.8)
        assert atmospheric_transmittance(model, 580e-9, math.pi / 6) == pytest.approx(0.64)

    def test_lossless(self):
        model = AtmosphereModel.uniform(1.0)
        assert atmospheric_transmittance(model, 580e-9, math.radians(12.0)) == 1.0

    def test_airmass_capped_at_cutoff(self):
        model = AtmosphereModel.uniform(0.8)
        low = atmospheric_transmittance(model, 580e-9, math.radians(2.0))
        cap = atmospheric_transmittance(model, 580e-9, math.radians(10.0))
        assert low == pytest.approx(cap)

    def test_uncapped(self):
        model = AtmosphereModel((500e-9,), (0.8,), airmass_cap_elevation_rad=0.0)
        expected = 0.8 ** (1.0 / math.sin(math.radians(2.0)))
        assert atmospheric_transmittance(model, 500e-9, math.radians(2.0)) == pytest.approx(expected)

    def test_interpolation_and_clamp(self):
        model = AtmosphereModel((500e-9, 600e-9), (0.6, 0.8))
        assert model.zenith_at(550e-9) == pytest.approx(0.7)
        assert model.zenith_at(800e-9) == pytest.approx(0.8)
        assert not model.covers(800e-9)

    def test_nonpositive_elevation(self):
        with pytest.raises(ValueError):
            atmospheric_transmittance(AtmosphereModel.uniform(0.8), 580e-9, 0.0)

    def test_empty_table(self):
        with pytest.raises(ConfigurationError):
            AtmosphereModel((), ())

    def test_shipped_table(self):
        model = load_atmosphere("calibrated", config=Config())
        assert model.label == CALIBRATED_LABEL
        assert model.zenith_at(580e-9) == pytest.approx(0.80)
        assert model.covers(470e-9) and model.covers(670e-9)

    def test_custom_table(self, tmp_path):
        path = tmp_path / "atm.csv"
        path.write_text("wavelength_nm,zenith_transmittance\n600,0.9\n500,0.7\n", encoding="utf-8")
        model = load_atmosphere_table(path)
        assert model.wavelengths_m == pytest.approx((500e-9, 600e-9))
        assert model.label == "atm.csv"

    def test_bad_header(self, tmp_path):
        path = tmp_path / "atm.csv"
        path.write_text("lambda,T\n580,0.8\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_atmosphere_table(path)

    def test_header_only_table(self, tmp_path):
        path = tmp_path / "atm.csv"
        path.write_text("wavelength_nm,zenith_transmittance\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_atmosphere_table(path)


class TestTransmission:
    """Single-arm, two-photon and fiber transmission."""

    @pytest.fixture
    def earth(self):
        return EarthModel()

    @pytest.fixture
    def anchor_link(self, earth):
        """h = 1000 km over a 2000 km link."""
        cutoff = math.radians(10.0)
        stations = link_stations(2000e3, earth, cutoff)
        orbit = link_orbit(1000e3, Direction.COUNTER_ROTATING, earth)
        windows = find_pass_windows(*stations, orbit, earth, orbital_period(orbit, earth).synodic_s, 10.0)
        return stations, orbit, representative_window(windows)

    def test_single_photon_lossless(self):
        channel = OpticalChannel(580e-9, 0.5, 1e4)
        geom = GeometrySample(0.0, 1000e3, 1000e3, math.pi / 2, math.pi / 2)
        eta = single_photon_transmission(channel, AtmosphereModel.uniform(1.0), geom, "A")
        assert eta == pytest.approx(1.0, abs=1e-3)

    def test_single_photon_below_horizon(self):
        channel = OpticalChannel(580e-9, 0.5, 1.0)
        geom = GeometrySample(0.0, 3000e3, 3000e3, -0.1, 0.5)
        assert single_photon_transmission(channel, AtmosphereModel.uniform(0.8), geom, "A") == 0.0

    def test_factor_product(self):
        assert 0.5 * 0.5 * fraction_from_db(3.01) == pytest.approx(0.125, rel=1e-3)

    def test_excess_loss_applied(self):
        geom = GeometrySample(0.0, 1000e3, 1000e3, math.pi / 2, math.pi / 2)
        model = AtmosphereModel.uniform(0.8)
        plain = single_photon_transmission(OpticalChannel(580e-9, 0.5, 1.0), model, geom, "A")
        lossy = single_photon_transmission(
            OpticalChannel(580e-9, 0.5, 1.0, excess_loss_db=10.0), model, geom, "B"
        )
        assert lossy == pytest.approx(plain / 10.0)

    def test_anchor_peak_loss(self, earth, anchor_link):
        stations, orbit, window = anchor_link
        channel = OpticalChannel(**get_channel_preset("repeater_580nm"))
        model = load_atmosphere("calibrated", config=Config())
        profile, summary = two_photon_profile(*stations, orbit, earth, channel, model, window, 10.0)
        assert summary.peak_loss_db == pytest.approx(40.0, abs=5.0)
        assert summary.t_fb_s == pytest.approx(window.duration_s)
        assert np.all(profile.eta2 <= np.minimum(profile.eta1_a, profile.eta1_b) + 1e-15)
        assert summary.p0_avg <= summary.peak_eta2

    def test_symmetric_midpoint(self, earth, anchor_link):
        stations, orbit, window = anchor_link
        channel = OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=0.5e-6)
        mid = orbital_period(orbit, earth).synodic_s / 2.0
        centred = type(window)(mid - 50.0, mid + 50.0)
        profile, summary = two_photon_profile(
            *stations, orbit, earth, channel, AtmosphereModel.uniform(0.8), centred, 50.0
        )
        assert profile.eta1_a[1] == pytest.approx(profile.eta1_b[1], rel=1e-7)
        assert profile.eta2[1] == pytest.approx(profile.eta1_a[1] ** 2, rel=1e-7)

    def test_vacuum_no_jitter_is_pure_diffraction(self, earth, anchor_link):
        stations, orbit, window = anchor_link
        channel = OpticalChannel(580e-9, 0.5, 1.0)
        profile, _ = two_photon_profile(
            *stations, orbit, earth, channel, AtmosphereModel.uniform(1.0), window, 30.0
        )
        geom = link_geometry_at(*stations, orbit, earth, float(profile.t_s[0]))
        expected = airy_collection_fraction(580e-9, 0.5, 1.0, geom.slant_range_a_m) * airy_collection_fraction(
            580e-9, 0.5, 1.0, geom.slant_range_b_m
        )
        assert profile.eta2[0] == pytest.approx(expected, rel=1e-9)

    def test_p0_avg_stable_under_step_halving(self, earth, anchor_link):
        stations, orbit, window = anchor_link
        channel = OpticalChannel(**get_channel_preset("repeater_580nm"))
        model = AtmosphereModel.uniform(0.8)
        _, coarse = two_photon_profile(*stations, orbit, earth, channel, model, window, 10.0)
        _, fine = two_photon_profile(*stations, orbit, earth, channel, model, window, 5.0)
        assert fine.p0_avg == pytest.approx(coarse.p0_avg, rel=0.01)
        assert fine.t_fb_s == coarse.t_fb_s

    def test_profile_uses_given_config(self, earth, anchor_link):
        stations, orbit, window = anchor_link
        channel = OpticalChannel(580e-9, 0.5, 1.0, pointing_sigma_rad=0.5e-6)
        model = AtmosphereModel.uniform(1.0)
        with pytest.raises(FarFieldViolationError):
            two_photon_profile(*stations, orbit, earth, channel, model, window, 30.0, Config(far_field_factor=100.0))

    def test_no_window(self, earth, anchor_link):
        stations, orbit, _ = anchor_link
        channel = OpticalChannel(580e-9, 0.5, 1.0)
        with pytest.raises(EmptyWindowError):
            two_photon_profile(*stations, orbit, earth, channel, AtmosphereModel.uniform(1.0), None, 10.0)

    def test_fiber_2000km(self):
        assert fiber_loss_db(2000e3) == 300.0
        assert fiber_transmission(2000e3) == pytest.approx(1e-30, rel=1e-12)

    def test_fiber_edges(self):
        assert fiber_transmission(0.0) == 1.0
        assert fiber_transmission(20e3) == pytest.approx(0.501, abs=1e-3)
        with pytest.raises(ValueError):
            fiber_loss_db(-1.0)

    def test_loss_db(self):
        assert loss_db(1e-4) == pytest.approx(40.0)
        assert loss_db(0.0) == math.inf


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
