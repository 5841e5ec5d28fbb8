"""Analytic entanglement-distribution rates for a nested repeater chain."""

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from config import SPEED_OF_LIGHT

# Multimode storage range quoted as feasible for the memories
MEMORY_MODE_BAND = (1e3, 1e4)

# Probability that both neighbouring links are ready before a swap
NESTING_FACTOR = 2.0 / 3.0


class LinkMode(Enum):
    """Distribution scheme of a scenario."""

    REPEATER = "repeater"
    DIRECT = "direct"
    FIBER = "fiber"


@dataclass(frozen=True)
class Efficiencies:
    """Component efficiencies; 0.9 each unless stated."""

    source: float = 0.9
    qnd: float = 0.9
    mem_write: float = 0.9
    mem_read: float = 0.9
    detector: float = 0.9

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"efficiency {name} must be in [0, 1], got {value}")

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class ChainConfig:
    """A chain of 2^n elementary links spanning total_ground_distance_m."""

    nesting_n: int
    source_rate_hz: float
    total_ground_distance_m: float
    satellite_altitude_m: float

    def __post_init__(self):
        if not isinstance(self.nesting_n, int) or self.nesting_n < 0:
            raise ValueError(f"nesting_n must be a non-negative integer, got {self.nesting_n}")
        if self.source_rate_hz <= 0:
            raise ValueError("source_rate_hz must be > 0")
        if self.total_ground_distance_m < 0:
            raise ValueError("total_ground_distance_m must be >= 0")

    @property
    def n_links(self) -> int:
        return 2**self.nesting_n

    @property
    def link_length_m(self) -> float:
        """L0 = L / 2^n; exact since 2^n is a power of two."""
        return self.total_ground_distance_m / self.n_links


@dataclass(frozen=True)
class RateResult:
    """Rates and intermediates of one scenario evaluation.

    Fields that a mode does not define stay None.
    """

    mode: LinkMode
    pairs_per_day: float
    pairs_per_flyby: Optional[float] = None
    flybys_per_day: Optional[float] = None
    p0_avg: Optional[float] = None
    t_fb_s: Optional[float] = None
    p_eg: Optional[float] = None
    p_es: Optional[float] = None
    n_links: Optional[int] = None
    n_mod: Optional[float] = None
    storage_time_s: Optional[float] = None
    inputs: Dict[str, Any] = field(default_factory=dict)

    @property
    def n_mod_in_band(self) -> Optional[bool]:
        if self.n_mod is None:
            return None
        low, high = MEMORY_MODE_BAND
        return low <= self.n_mod <= high

    def to_dict(self) -> Dict[str, Any]:
        result = asdict(self)
        result["mode"] = self.mode.value
        return result


def entanglement_generation_prob(eff: Efficiencies, p0_avg: float) -> float:
    """P_EG = eta_s * P0_avg * eta_q^2 * eta_w^2."""
    return eff.source * p0_avg * eff.qnd**2 * eff.mem_write**2


def swap_success_prob(eff: Efficiencies) -> float:
    """P_ES = eta_r^2 * eta_d^2 / 2 (linear-optics Bell measurement)."""
    return eff.mem_read**2 * eff.detector**2 / 2.0


def pairs_per_flyby(chain: ChainConfig, eff: Efficiencies, p0_avg: float, t_fb_s: float) -> float:
    """R_s * T_FB * P_EG * (2/3 * P_ES)^n."""
    if t_fb_s < 0:
        raise ValueError(f"T_FB must be >= 0, got {t_fb_s}")
    p_eg = entanglement_generation_prob(eff, p0_avg)
    p_es = swap_success_prob(eff)
    return chain.source_rate_hz * t_fb_s * p_eg * (NESTING_FACTOR * p_es) ** chain.nesting_n


def memory_mode_requirement(chain: ChainConfig, eff: Efficiencies, eta1_max: float) -> float:
    """N_mod = R_s * eta_s * eta1_max * L0 / c."""
    return chain.source_rate_hz * eff.source * eta1_max * chain.link_length_m / SPEED_OF_LIGHT


def required_storage_time(total_distance_m: float) -> float:
    """L / c in seconds."""
    if total_distance_m < 0:
        raise ValueError(f"distance must be >= 0, got {total_distance_m}")
    return total_distance_m / SPEED_OF_LIGHT


def pairs_per_day(
    chain: ChainConfig,
    eff: Efficiencies,
    p0_avg: float,
    t_fb_s: float,
    eta1_max: float,
    flybys_per_day: float,
) -> RateResult:
    """Assemble the full repeater RateResult; no visibility gives zero rates."""
    per_flyby = pairs_per_flyby(chain, eff, p0_avg, t_fb_s)
    return RateResult(
        mode=LinkMode.REPEATER,
        pairs_per_flyby=per_flyby,
        flybys_per_day=flybys_per_day,
        pairs_per_day=per_flyby * flybys_per_day,
        p0_avg=p0_avg,
        t_fb_s=t_fb_s,
        p_eg=entanglement_generation_prob(eff, p0_avg),
        p_es=swap_success_prob(eff),
        n_links=chain.n_links,
        n_mod=memory_mode_requirement(chain, eff, eta1_max),
        storage_time_s=required_storage_time(chain.total_ground_distance_m),
        inputs={
            "nesting_n": chain.nesting_n,
            "source_rate_hz": chain.source_rate_hz,
            "total_ground_distance_m": chain.total_ground_distance_m,
            "link_length_m": chain.link_length_m,
            "satellite_altitude_m": chain.satellite_altitude_m,
            "eta1_max": eta1_max,
            "efficiencies": eff.to_dict(),
        },
    )


def qnd_amplifier_rate_ratio(eta_q_high: float = 0.9, eta_q_low: float = 0.5) -> float:
    """Rate penalty of swapping a QND detector for a lossier one; rate scales as eta_q^2."""
    return (eta_q_high / eta_q_low) ** 2
