"""Stage 1: transmission profile over the representative pass."""

from typing import List

from engines.base import Flag, PipelineStage, ScenarioContext, Severity, Stage
from knowledge.atmosphere_loader import CALIBRATED_LABEL
from linkbudget.transmission import two_photon_profile
from orbital.geometry import orbital_period
from orbital.passes import representative_window


class LinkBudgetEngine(PipelineStage):
    """
    Stage 1: diffraction, pointing jitter and atmosphere for both arms.

    Flags:
    - LB-001: Wavelength outside the atmosphere table, clamped to the nearest entry
    - LB-002: Shipped calibrated atmosphere in use (not a radiative-transfer model)
    """

    @property
    def stage_type(self) -> Stage:
        return Stage.LINK

    def run(self, context: ScenarioContext) -> List[Flag]:
        scenario = context.scenario
        if scenario.mode == "fiber":
            return []

        atmosphere = scenario.atmosphere_model()
        context.atmosphere = atmosphere
        channel = scenario.channel()

        flags = []
        if not atmosphere.covers(channel.wavelength_m):
            flags.append(
                self.flag(
                    Severity.WARNING,
                    "LB-001",
                    "Wavelength outside atmosphere table, clamped",
                    value=f"{channel.wavelength_m * 1e9:.1f} nm",
                    expected=(
                        f"{atmosphere.wavelengths_m[0] * 1e9:.0f}-"
                        f"{atmosphere.wavelengths_m[-1] * 1e9:.0f} nm"
                    ),
                )
            )
        if atmosphere.label == CALIBRATED_LABEL:
            flags.append(self.flag(Severity.INFO, "LB-002", f"Atmosphere: {CALIBRATED_LABEL}"))

        if context.windows:
            periods = orbital_period(context.orbit, context.earth)
            period = None if periods.stationary else periods.synodic_s
            station_a, station_b = context.stations
            context.profile, context.summary = two_photon_profile(
                station_a,
                station_b,
                context.orbit,
                context.earth,
                channel,
                atmosphere,
                representative_window(context.windows, period),
                scenario.step_s,
                self.config,
            )
        return flags
