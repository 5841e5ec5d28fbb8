"""Pipeline stages for satrep."""

from .base import (
    Flag,
    OracleCheck,
    PipelineStage,
    RunResult,
    ScenarioContext,
    Severity,
    Stage,
)
from .engine0_orbit import OrbitEngine
from .engine1_link import LinkBudgetEngine
from .engine2_rates import RateEngine
from .engine3_noise import NoiseEngine
from .engine4_montecarlo import MonteCarloEngine
from .engine_final import ManifestEngine, RunManifest, sha256_digest
from .pipeline import default_stages, evaluate_point, evaluate_scenario, run_stages

__all__ = [
    # Base classes
    "Flag",
    "OracleCheck",
    "PipelineStage",
    "RunResult",
    "ScenarioContext",
    "Severity",
    "Stage",
    # Stages
    "OrbitEngine",
    "LinkBudgetEngine",
    "RateEngine",
    "NoiseEngine",
    "MonteCarloEngine",
    "ManifestEngine",
    "RunManifest",
    "sha256_digest",
    # Sequencing
    "default_stages",
    "evaluate_point",
    "evaluate_scenario",
    "run_stages",
]
