"""Stage 2: pair rates for repeater, direct and fiber scenarios."""

from typing import List, Sequence, Tuple

from engines.base import Flag, PipelineStage, ScenarioContext, Severity, Stage
from repeater.direct import direct_rate_from_profile, fiber_rate
from repeater.rates import MEMORY_MODE_BAND, ChainConfig, pairs_per_day
from repeater.sensitivity import SensitivityTable, sensitivity_sweep


class RateEngine(PipelineStage):
    """
    Stage 2: analytic rates.

    Flags:
    - RT-002: Memory mode requirement outside the feasible multimode range
    - RT-003: Direct rate integrated over 24 h without day/night duty cycle
    """

    @property
    def stage_type(self) -> Stage:
        return Stage.RATES

    def run(self, context: ScenarioContext) -> List[Flag]:
        scenario = context.scenario
        if scenario.mode == "fiber":
            context.rate = fiber_rate(scenario.total_ground_distance_m, scenario.source_rate_hz)
            return []
        if scenario.mode == "direct":
            context.rate = direct_rate_from_profile(
                context.summary,
                context.flybys_per_day,
                scenario.source_rate_hz,
                scenario.total_ground_distance_m,
                scenario.satellite_altitude_m,
            )
            return [self.flag(Severity.INFO, "RT-003", "Direct rate integrated over 24 h, no duty cycle")]
        return self._run_repeater(context)

    @staticmethod
    def _chain(context: ScenarioContext) -> ChainConfig:
        scenario = context.scenario
        return ChainConfig(
            nesting_n=context.nesting_n,
            source_rate_hz=scenario.source_rate_hz,
            total_ground_distance_m=scenario.total_ground_distance_m,
            satellite_altitude_m=scenario.satellite_altitude_m,
        )

    @staticmethod
    def _link_inputs(context: ScenarioContext) -> Tuple[float, float, float]:
        """(P0_avg, T_FB, eta1_max); zeros without a pass."""
        summary = context.summary
        if summary is None:
            return 0.0, 0.0, 0.0
        return summary.p0_avg, summary.t_fb_s, summary.eta1_max

    def _run_repeater(self, context: ScenarioContext) -> List[Flag]:
        p0_avg, t_fb, eta1_max = self._link_inputs(context)
        context.rate = pairs_per_day(
            self._chain(context), context.scenario.efficiencies(), p0_avg, t_fb, eta1_max, context.flybys_per_day
        )

        flags = []
        if context.summary is not None and not context.rate.n_mod_in_band:
            low, high = MEMORY_MODE_BAND
            flags.append(
                self.flag(
                    Severity.WARNING,
                    "RT-002",
                    "Memory mode requirement outside feasible range",
                    value=f"{context.rate.n_mod:.0f} modes",
                    expected=f"{low:.0f}-{high:.0f}",
                )
            )
        return flags

    def sensitivity(self, context: ScenarioContext, parameter: str, grid: Sequence[float]) -> SensitivityTable:
        """Closed-form rates of an evaluated repeater context over one efficiency grid."""
        if context.scenario.mode != "repeater":
            raise ValueError(f"sensitivity needs a repeater scenario, got {context.scenario.mode}")
        p0_avg, t_fb, eta1_max = self._link_inputs(context)
        return sensitivity_sweep(
            self._chain(context),
            context.scenario.efficiencies(),
            p0_avg,
            t_fb,
            eta1_max,
            context.flybys_per_day,
            parameter,
            grid,
        )
