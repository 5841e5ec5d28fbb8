"""Monte Carlo waiting-time oracle for the analytic repeater rate."""

from .sampler import (
    RNG_ALGORITHM,
    McConfig,
    McEstimate,
    block_rng,
    closed_form_level1_mean,
    draw_waiting_times,
    estimate_rate,
    hazard_from_profile,
    jackknife_rate,
    sample_chain_waiting_time,
    sample_waiting_times,
)

__all__ = [
    "RNG_ALGORITHM",
    "McConfig",
    "McEstimate",
    "block_rng",
    "closed_form_level1_mean",
    "draw_waiting_times",
    "estimate_rate",
    "hazard_from_profile",
    "jackknife_rate",
    "sample_chain_waiting_time",
    "sample_waiting_times",
]
