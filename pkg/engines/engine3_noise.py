"""Stage 3: background-light false-coincidence error."""

from typing import List

from engines.base import Flag, PipelineStage, ScenarioContext, Severity, Stage
from noise.background import (
    CoincidenceModel,
    background_rate,
    false_coincidence_error_fraction,
    get_background_preset,
)

NOISE_DOMINANT = 0.5


class NoiseEngine(PipelineStage):
    """
    Stage 3: background counts and their share of heralded coincidences.

    Flags:
    - NS-001: Background coincidences dominate (error fraction > 50%)
    - NS-002: Error fraction convention (noise / (noise + true) coincidences)
    """

    @property
    def stage_type(self) -> Stage:
        return Stage.NOISE

    def run(self, context: ScenarioContext) -> List[Flag]:
        scenario = context.scenario
        if scenario.mode == "fiber" or context.summary is None:
            return []

        channel = scenario.channel()
        env = get_background_preset(scenario.background)
        noise_rate = background_rate(
            env,
            channel.rx_aperture_m,
            scenario.filter_bandwidth_hz,
            scenario.fov_rad,
            channel.wavelength_m,
        )
        coincidence = CoincidenceModel.for_source(scenario.source_rate_hz, context.summary.eta1_max)
        error = false_coincidence_error_fraction(
            coincidence, noise_rate, context.summary.peak_eta2, scenario.noise_both_stations
        )
        context.noise_rate_hz = noise_rate
        context.noise_error_fraction = error

        stations = "either station" if scenario.noise_both_stations else "one station"
        flags = [
            self.flag(
                Severity.INFO,
                "NS-002",
                f"Error = noise/(noise+true) coincidences, background at {stations}",
            )
        ]
        if error > NOISE_DOMINANT:
            flags.append(
                self.flag(
                    Severity.WARNING,
                    "NS-001",
                    "Background coincidences dominate",
                    value=f"{error:.1%}",
                    expected=f"<= {NOISE_DOMINANT:.0%}",
                )
            )
        return flags
