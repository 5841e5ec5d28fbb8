"""End-to-end stage tests on the published comparison scenarios."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest
from config import Config
from engines.base import Severity
from engines.engine4_montecarlo import PROFILE_TOLERANCE, MonteCarloEngine
from engines.pipeline import evaluate_point, evaluate_scenario, run_stages
from errors import FarFieldViolationError, QuadratureError, SweepPointError
from orbital.geometry import EarthModel
from parser.scenario import resolve_scenario
from repeater.direct import direct_transmission_rate


@pytest.fixture(scope="module")
def config():
    return Config()


def scenario(config, **raw):
    return resolve_scenario(raw, config)


def codes(context):
    return {f.code for f in context.flags}


class TestLinkBudgetAnchor:
    """h = 1000 km over a single 2000 km link."""

    def test_peak_loss_near_40db(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=2000, satellite_altitude_km=1000, nesting_n=0),
            config,
        )
        assert ctx.summary.peak_loss_db == pytest.approx(40.0, abs=5.0)
        assert "LB-002" in codes(ctx)
        assert ctx.rate.pairs_per_day > 0.0

    def test_far_field_factor_from_run_config(self, config):
        # 100 * D^2 / lambda is about 43 000 km, beyond every slant range of this link
        strict = Config(far_field_factor=100.0)
        anchor = scenario(config, mode="repeater", total_ground_distance_km=2000, satellite_altitude_km=1000, nesting_n=0)
        with pytest.raises(FarFieldViolationError):
            evaluate_scenario(anchor, strict)

    def test_quadrature_tolerance_from_run_config(self, config):
        anchor = scenario(config, mode="repeater", total_ground_distance_km=2000, satellite_altitude_km=1000, nesting_n=0)
        with pytest.raises(QuadratureError):
            evaluate_scenario(anchor, Config(quad_abs_tol=1e-300))


class TestRepeater:
    """Nested repeater chains fed by low orbits."""

    @pytest.mark.parametrize("altitude_km", [500, 1000, 1500])
    def test_memory_modes_20000km(self, config, altitude_km):
        ctx = evaluate_scenario(
            scenario(
                config,
                mode="repeater",
                total_ground_distance_km=20000,
                satellite_altitude_km=altitude_km,
                nesting_n=3,
            ),
            config,
        )
        assert 1e3 / 3.0 <= ctx.rate.n_mod <= 1e4 * 3.0
        assert ctx.rate.storage_time_s * 1e3 == pytest.approx(66.7, rel=0.01)
        assert ctx.rate.n_links == 8

    def test_memory_modes_two_levels(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=12000, satellite_altitude_km=1000, nesting_n=2),
            config,
        )
        assert 1e3 / 3.0 <= ctx.rate.n_mod <= 1e4 * 3.0

    def test_daytime_noise_about_one_percent(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=20000, satellite_altitude_km=1000, nesting_n=3),
            config,
        )
        assert 0.01 / 3.0 <= ctx.noise_error_fraction <= 0.01 * 3.0
        assert "NS-002" in codes(ctx)

    def test_nighttime_noise_negligible(self, config):
        ctx = evaluate_scenario(
            scenario(
                config,
                mode="repeater",
                total_ground_distance_km=20000,
                satellite_altitude_km=1000,
                nesting_n=3,
                background="night",
            ),
            config,
        )
        assert ctx.noise_error_fraction < 1e-6

    def test_auto_nesting_picks_best(self, config):
        auto = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=12000, satellite_altitude_km=1000), config
        )
        rates = [
            evaluate_scenario(
                scenario(
                    config, mode="repeater", total_ground_distance_km=12000, satellite_altitude_km=1000, nesting_n=n
                ),
                config,
            ).rate.pairs_per_day
            for n in (2, 3)
        ]
        assert auto.rate.pairs_per_day == max(rates)
        assert "RT-001" in codes(auto)

    def test_rates_fall_with_distance(self, config):
        rates = [
            evaluate_scenario(
                scenario(config, mode="repeater", total_ground_distance_km=km, satellite_altitude_km=1000), config
            ).rate.pairs_per_day
            for km in (8000, 12000, 16000, 20000)
        ]
        assert all(r > 0.0 for r in rates)
        assert all(a > b for a, b in zip(rates, rates[1:]))

    def test_link_beyond_reach(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=20000, satellite_altitude_km=500, nesting_n=2),
            config,
        )
        assert ctx.rate.pairs_per_day == 0.0
        assert "OR-001" in codes(ctx)
        assert ctx.noise_error_fraction is None


class TestDirectAndFiber:
    """Baselines without quantum memories."""

    def test_geo_beyond_mutual_visibility(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="direct", total_ground_distance_km=20000, satellite_altitude_km="geo"), config
        )
        assert ctx.rate.pairs_per_day == 0.0
        assert "OR-001" in codes(ctx)
        assert "OR-002" in codes(ctx)

    def test_geo_continuous_contact(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="direct", total_ground_distance_km=8000, satellite_altitude_km="geo"), config
        )
        assert ctx.rate.flybys_per_day == 1.0
        assert ctx.rate.t_fb_s == pytest.approx(86_400.0)
        assert ctx.rate.pairs_per_day == pytest.approx(1e9 * ctx.summary.integral_eta2_s)

    def test_geo_noise_dominates_at_long_distance(self, config):
        def error(km):
            return evaluate_scenario(
                scenario(
                    config,
                    mode="direct",
                    total_ground_distance_km=km,
                    satellite_altitude_km="geo",
                    noise_both_stations=False,
                ),
                config,
            ).noise_error_fraction

        assert error(2000) < 0.5
        assert error(14000) > 0.5

    def test_geo_noise_flag_two_sided(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="direct", total_ground_distance_km=14000, satellite_altitude_km="geo"), config
        )
        assert ctx.noise_error_fraction > 0.5
        assert any(f.code == "NS-001" and f.severity == Severity.WARNING for f in ctx.flags)

    def test_direct_rate_matches_pipeline(self, config):
        resolved = scenario(config, mode="direct", total_ground_distance_km=4000, satellite_altitude_km=2000)
        earth = EarthModel.from_config(config)
        rate, summary = direct_transmission_rate(
            4000e3,
            2000e3,
            resolved.channel(),
            resolved.atmosphere_model(),
            earth,
            source_rate_hz=resolved.source_rate_hz,
            step_s=resolved.step_s,
            min_elevation_rad=resolved.min_elevation_rad,
            direction=resolved.orbit_direction,
            config=config,
        )
        ctx = evaluate_scenario(resolved, config)
        assert rate.pairs_per_day > 0.0
        assert rate.pairs_per_day == pytest.approx(ctx.rate.pairs_per_day, rel=1e-12)
        assert summary.t_fb_s == pytest.approx(ctx.summary.t_fb_s)

    def test_fiber_300db(self, config):
        ctx = evaluate_scenario(scenario(config, mode="fiber", total_ground_distance_km=2000), config)
        assert ctx.rate.p0_avg == pytest.approx(1e-30, rel=1e-12)
        assert ctx.summary is None

    @pytest.mark.parametrize("km", [16000, 20000])
    def test_only_repeaters_reach_far(self, config, km):
        direct = [
            evaluate_scenario(
                scenario(config, mode="direct", total_ground_distance_km=km, satellite_altitude_km=alt), config
            ).rate.pairs_per_day
            for alt in (2000, 10000, "geo")
        ]
        repeater = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=km, satellite_altitude_km=1000), config
        ).rate.pairs_per_day
        fiber = evaluate_scenario(scenario(config, mode="fiber", total_ground_distance_km=km), config).rate.pairs_per_day
        assert direct == [0.0, 0.0, 0.0]
        assert repeater > 0.0
        assert fiber < 1e-100


class TestOracle:
    """Monte Carlo check of the analytic rate on published scenarios."""

    @pytest.mark.parametrize("km, nesting_n", [(12000, 2), (20000, 3)])
    def test_nested_ratio(self, config, km, nesting_n):
        ctx = evaluate_scenario(
            scenario(
                config,
                mode="repeater",
                total_ground_distance_km=km,
                satellite_altitude_km=1000,
                nesting_n=nesting_n,
                mc_trials=2000,
            ),
            config,
        )
        run_stages(ctx, [MonteCarloEngine(config)])
        assert ctx.oracle is not None
        assert 0.5 <= ctx.oracle.ratio <= 2.0
        assert "MC-001" not in codes(ctx)

    def test_profile_hazard_reported_not_graded(self, config):
        ctx = evaluate_scenario(
            scenario(
                config,
                mode="repeater",
                total_ground_distance_km=12000,
                satellite_altitude_km=1000,
                nesting_n=2,
                mc_trials=500,
                mc_hazard="profile",
            ),
            config,
        )
        engine = MonteCarloEngine(config)
        cfg = engine.mc_config(ctx)
        assert len(cfg.hazard_per_slot) == len(ctx.profile)
        assert max(cfg.hazard_per_slot) <= 1.0
        # Profile mean of the hazard reproduces P_EG
        assert sum(cfg.hazard_per_slot) / len(cfg.hazard_per_slot) == pytest.approx(ctx.rate.p_eg, rel=0.1)

        run_stages(ctx, [engine])
        assert ctx.oracle.passed
        assert ctx.oracle.tolerance == PROFILE_TOLERANCE
        assert ctx.mc.pairs_per_flyby_mc > 0.0
        assert "MC-003" in codes(ctx)
        assert "MC-001" not in codes(ctx)

    def test_skipped_without_visibility(self, config):
        ctx = evaluate_scenario(
            scenario(config, mode="repeater", total_ground_distance_km=20000, satellite_altitude_km=500, nesting_n=2),
            config,
        )
        run_stages(ctx, [MonteCarloEngine(config)])
        assert ctx.oracle is None
        assert "MC-002" in codes(ctx)


class TestSweepWorker:
    def test_failure_names_point(self, config):
        point = scenario(config, mode="repeater", total_ground_distance_km=2000, satellite_altitude_km=1000, nesting_n=0)
        with pytest.raises(SweepPointError) as excinfo:
            evaluate_point((point, Config(far_field_factor=100.0)))
        assert "L=2000 km" in str(excinfo.value)
        assert excinfo.value.exit_code == 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
