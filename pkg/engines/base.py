"""Base classes and data structures for pipeline stages."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from config import Config, get_config
from linkbudget.atmosphere import AtmosphereModel
from linkbudget.transmission import ProfileSummary, TransmissionProfile
from montecarlo.sampler import McEstimate
from orbital.geometry import EarthModel, GroundStation, OrbitSpec
from orbital.passes import PassWindow
from parser.scenario import Scenario
from repeater.rates import RateResult


class Severity(Enum):
    """Severity levels for run flags."""

    ERROR = "ERROR"  # Result not trustworthy
    WARNING = "WARNING"  # Result valid but physically notable
    INFO = "INFO"  # Modelling assumption in effect


class Stage(Enum):
    """Pipeline stage types."""

    ORBIT = 0
    LINK = 1
    RATES = 2
    NOISE = 3
    MONTECARLO = 4
    FINAL = 5


@dataclass
class Flag:
    """A single condition raised while evaluating a scenario."""

    severity: Severity
    stage: Stage
    code: str  # e.g., "OR-001"
    description: str
    value: str = ""
    expected: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """Convert flag to dictionary."""
        return {
            "severity": self.severity.value,
            "stage": self.stage.value,
            "code": self.code,
            "description": self.description,
            "value": self.value,
            "expected": self.expected,
        }


@dataclass
class OracleCheck:
    """Comparison of the analytic rate with the Monte Carlo oracle."""

    analytic_pairs_per_flyby: float
    reference_pairs_per_flyby: float
    ratio: float
    tolerance: str
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "analytic_pairs_per_flyby": self.analytic_pairs_per_flyby,
            "reference_pairs_per_flyby": self.reference_pairs_per_flyby,
            "ratio": self.ratio,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass
class ScenarioContext:
    """Everything the stages compute for one scenario at one nesting level."""

    scenario: Scenario
    nesting_n: int = 0
    earth: EarthModel = field(default_factory=EarthModel)
    stations: Optional[Tuple[GroundStation, GroundStation]] = None
    orbit: Optional[OrbitSpec] = None
    windows: List[PassWindow] = field(default_factory=list)
    flybys_per_day: float = 0.0
    atmosphere: Optional[AtmosphereModel] = None
    profile: Optional[TransmissionProfile] = None
    summary: Optional[ProfileSummary] = None
    rate: Optional[RateResult] = None
    noise_rate_hz: Optional[float] = None
    noise_error_fraction: Optional[float] = None
    mc: Optional[McEstimate] = None
    oracle: Optional[OracleCheck] = None
    flags: List[Flag] = field(default_factory=list)

    @property
    def link_length_m(self) -> float:
        return self.scenario.total_ground_distance_m / 2**self.nesting_n

    @property
    def visible(self) -> bool:
        return bool(self.windows)

    def intermediates(self) -> Dict[str, Any]:
        """Derived values recorded in manifests."""
        result: Dict[str, Any] = {"nesting_n": self.nesting_n}
        if self.summary is not None:
            result.update(self.summary.to_dict())
        if self.atmosphere is not None:
            result["atmosphere"] = self.atmosphere.label
        if self.noise_error_fraction is not None:
            result["noise_rate_hz"] = self.noise_rate_hz
            result["noise_error_fraction"] = self.noise_error_fraction
        return result


class PipelineStage(ABC):
    """Abstract base class for pipeline stages."""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or get_config()

    @property
    @abstractmethod
    def stage_type(self) -> Stage:
        """Return the stage type."""
        pass

    @abstractmethod
    def run(self, context: ScenarioContext) -> List[Flag]:
        """Advance the context and return flags raised."""
        pass

    def flag(self, severity: Severity, code: str, description: str, value: str = "", expected: str = "") -> Flag:
        return Flag(severity, self.stage_type, code, description, value, expected)


@dataclass
class RunResult:
    """Contexts of a run (one per scenario point) plus its manifest."""

    contexts: List[ScenarioContext] = field(default_factory=list)
    manifest: Optional[Any] = None
    sensitivity: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def flags(self) -> List[Flag]:
        return [f for ctx in self.contexts for f in ctx.flags]

    @property
    def is_success(self) -> bool:
        """True when no ERROR flags were raised."""
        return not any(f.severity == Severity.ERROR for f in self.flags)

    def get_error_count(self) -> int:
        return sum(1 for f in self.flags if f.severity == Severity.ERROR)

    def get_warning_count(self) -> int:
        return sum(1 for f in self.flags if f.severity == Severity.WARNING)
