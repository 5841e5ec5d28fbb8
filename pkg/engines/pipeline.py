"""Stage sequencing: orbit, link budget, rates, noise."""

import logging
from typing import List, Optional, Tuple

from config import Config, get_config
from engines.base import Flag, PipelineStage, ScenarioContext, Severity, Stage
from engines.engine0_orbit import OrbitEngine
from engines.engine1_link import LinkBudgetEngine
from engines.engine2_rates import RateEngine
from engines.engine3_noise import NoiseEngine
from errors import SatrepError, SweepPointError
from orbital.geometry import EarthModel
from parser.scenario import Scenario

logger = logging.getLogger(__name__)


def default_stages(config: Optional[Config] = None) -> List[PipelineStage]:
    return [OrbitEngine(config), LinkBudgetEngine(config), RateEngine(config), NoiseEngine(config)]


def run_stages(context: ScenarioContext, stages: List[PipelineStage]) -> ScenarioContext:
    for stage in stages:
        context.flags.extend(stage.run(context))
    return context


def evaluate_scenario(scenario: Scenario, config: Optional[Config] = None) -> ScenarioContext:
    """Evaluate a scenario, choosing the best nesting level when it is 'auto'."""
    config = config or get_config()
    earth = EarthModel.from_config(config)
    candidates = scenario.nesting_candidates(config)

    best: Optional[ScenarioContext] = None
    for n in candidates:
        context = run_stages(
            ScenarioContext(scenario=scenario, nesting_n=n, earth=earth), default_stages(config)
        )
        logger.debug(f"n={n}: {context.rate.pairs_per_day:.4g} pairs/day")
        if best is None or context.rate.pairs_per_day > best.rate.pairs_per_day:
            best = context

    if len(candidates) > 1:
        logger.info(
            f"L={scenario.total_ground_distance_m / 1e3:.0f} km: chose n={best.nesting_n} "
            f"({2**best.nesting_n} links)"
        )
        best.flags.append(
            Flag(
                Severity.INFO,
                Stage.RATES,
                "RT-001",
                "Nesting level chosen for highest rate",
                value=f"n={best.nesting_n}",
                expected=f"n in {candidates}",
            )
        )
    return best


def point_label(scenario: Scenario) -> str:
    label = f"{scenario.mode} L={scenario.total_ground_distance_m / 1e3:g} km"
    if scenario.satellite_altitude_m is not None:
        label += f" h={scenario.satellite_altitude_m / 1e3:g} km"
    return label


def evaluate_point(item: Tuple[Scenario, Config]) -> ScenarioContext:
    """Picklable sweep worker; failures name the point."""
    scenario, config = item
    try:
        return evaluate_scenario(scenario, config)
    except SatrepError as e:
        raise SweepPointError(f"{point_label(scenario)}: {e}", e.exit_code) from e
