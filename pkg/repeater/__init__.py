"""Repeater-chain, direct-transmission and fiber rate models."""

from .direct import (
    DIRECT_SOURCE_RATE_HZ,
    direct_rate_from_profile,
    direct_transmission_rate,
    fiber_rate,
    time_to_first_pair_s,
)
from .rates import (
    MEMORY_MODE_BAND,
    NESTING_FACTOR,
    ChainConfig,
    Efficiencies,
    LinkMode,
    RateResult,
    entanglement_generation_prob,
    memory_mode_requirement,
    pairs_per_day,
    pairs_per_flyby,
    qnd_amplifier_rate_ratio,
    required_storage_time,
    swap_success_prob,
)
from .sensitivity import (
    SensitivityTable,
    canonical_parameter,
    governing_exponent,
    sensitivity_sweep,
)

__all__ = [
    "DIRECT_SOURCE_RATE_HZ",
    "direct_rate_from_profile",
    "direct_transmission_rate",
    "fiber_rate",
    "time_to_first_pair_s",
    "MEMORY_MODE_BAND",
    "NESTING_FACTOR",
    "ChainConfig",
    "Efficiencies",
    "LinkMode",
    "RateResult",
    "entanglement_generation_prob",
    "memory_mode_requirement",
    "pairs_per_day",
    "pairs_per_flyby",
    "qnd_amplifier_rate_ratio",
    "required_storage_time",
    "swap_success_prob",
    "SensitivityTable",
    "canonical_parameter",
    "governing_exponent",
    "sensitivity_sweep",
]
