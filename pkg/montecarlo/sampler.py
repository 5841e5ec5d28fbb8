"""Waiting-time Monte Carlo for the nested repeater protocol.

Level 0 waits a geometric number of source slots for an elementary link.
Level k waits for two independent level-(k-1) pairs, then swaps; a failed swap
restarts the whole level-k attempt. Trials are drawn in fixed-size blocks and
block b uses its own PCG64 stream spawned from (seed, b), so the result does
not depend on how blocks are spread over workers.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from repeater.rates import NESTING_FACTOR

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "PCG64"


@dataclass(frozen=True)
class McConfig:
    """Monte Carlo oracle settings.

    hazard_per_slot optionally replaces the constant p_link with a per-slot
    success probability that varies over the flyby, one entry per profile
    sample, each covering slots_per_sample slots.
    """

    p_link: float
    p_swap: float
    nesting_n: int
    slots_per_flyby: float
    trials: int
    rng_seed: int
    block_size: int = 1_024
    hazard_per_slot: Optional[Tuple[float, ...]] = None
    slots_per_sample: Optional[float] = None

    def __post_init__(self):
        if not 0.0 <= self.p_link <= 1.0 or not 0.0 <= self.p_swap <= 1.0:
            raise ValueError("p_link and p_swap must be in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.nesting_n < 0:
            raise ValueError("nesting_n must be >= 0")
        if self.block_size < 1:
            raise ValueError("block_size must be >= 1")
        if self.hazard_per_slot is None:
            if self.p_link <= 0.0:
                raise ValueError("p_link must be > 0")
        else:
            if not self.slots_per_sample or self.slots_per_sample <= 0:
                raise ValueError("slots_per_sample must be > 0 with a hazard profile")
            if max(self.hazard_per_slot) <= 0.0:
                raise ValueError("hazard profile has no success probability")
        if self.nesting_n >= 1 and self.p_swap <= 0.0:
            raise ValueError("p_swap must be > 0 for nesting_n >= 1")

    @property
    def analytic_pairs_per_flyby(self) -> float:
        """slots * p_link * (2/3 * p_swap)^n."""
        return self.slots_per_flyby * self.p_link * (NESTING_FACTOR * self.p_swap) ** self.nesting_n


@dataclass(frozen=True)
class McEstimate:
    pairs_per_flyby_mc: float
    std_error: float
    mean_waiting_slots: float
    trials: int
    rng_seed: int
    rng_algorithm: str = RNG_ALGORITHM
    numpy_version: str = np.__version__

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pairs_per_flyby_mc": self.pairs_per_flyby_mc,
            "std_error": self.std_error,
            "mean_waiting_slots": self.mean_waiting_slots,
            "trials": self.trials,
            "rng_seed": self.rng_seed,
            "rng_algorithm": self.rng_algorithm,
            "numpy_version": self.numpy_version,
        }


def block_rng(seed: int, block: int) -> np.random.Generator:
    """Independent generator for trial block `block`."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def _level0_time_varying(
    rng: np.random.Generator, hazard: Sequence[float], slots_per_sample: float, size: int
) -> np.ndarray:
    # Inverse of the cumulative hazard, wrapping into the next flyby
    h = np.clip(np.asarray(hazard, dtype=float), 0.0, 1.0 - 1e-15)
    per_slot = -np.log1p(-h)
    cumulative = np.concatenate(([0.0], np.cumsum(per_slot * slots_per_sample)))
    per_window = cumulative[-1]
    slots_per_window = len(h) * slots_per_sample

    draws = rng.exponential(size=size)
    laps = np.floor(draws / per_window)
    remainder = draws - laps * per_window
    idx = np.clip(np.searchsorted(cumulative, remainder, side="right") - 1, 0, len(h) - 1)
    rate = per_slot[idx]
    inside = np.divide(
        remainder - cumulative[idx], rate, out=np.zeros_like(remainder), where=rate > 0
    )
    slots = laps * slots_per_window + idx * slots_per_sample + np.ceil(inside)
    return np.maximum(slots, 1.0).astype(np.int64)


def _sample_level(cfg: McConfig, rng: np.random.Generator, level: int, size: int) -> np.ndarray:
    if level == 0:
        if cfg.hazard_per_slot is not None:
            return _level0_time_varying(rng, cfg.hazard_per_slot, cfg.slots_per_sample, size)
        return rng.geometric(cfg.p_link, size=size).astype(np.int64)

    total = np.zeros(size, dtype=np.int64)
    pending = np.arange(size)
    while pending.size:
        left = _sample_level(cfg, rng, level - 1, pending.size)
        right = _sample_level(cfg, rng, level - 1, pending.size)
        total[pending] += np.maximum(left, right)
        swapped = rng.random(pending.size) < cfg.p_swap
        pending = pending[~swapped]
    return total


def sample_waiting_times(cfg: McConfig, rng: np.random.Generator, size: int) -> np.ndarray:
    """Slots until one end-to-end pair, for `size` independent chains."""
    return _sample_level(cfg, rng, cfg.nesting_n, size)


def sample_chain_waiting_time(cfg: McConfig, rng: np.random.Generator) -> int:
    """Slots until one end-to-end pair for a single chain."""
    return int(sample_waiting_times(cfg, rng, 1)[0])


def _run_block(args: Tuple[McConfig, int, int]) -> np.ndarray:
    cfg, block, size = args
    return sample_waiting_times(cfg, block_rng(cfg.rng_seed, block), size)


def _block_plan(cfg: McConfig):
    n_blocks = math.ceil(cfg.trials / cfg.block_size)
    return [
        (cfg, b, min(cfg.block_size, cfg.trials - b * cfg.block_size)) for b in range(n_blocks)
    ]


def draw_waiting_times(cfg: McConfig, workers: int = 1) -> np.ndarray:
    """All trials, in block order, identical for any worker count."""
    plan = _block_plan(cfg)
    if workers > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_run_block, plan))
    else:
        blocks = [_run_block(item) for item in plan]
    return np.concatenate(blocks)


def jackknife_rate(waits: np.ndarray, slots_per_flyby: float) -> Tuple[float, float]:
    """slots/mean(wait) and its leave-one-out jackknife standard error."""
    waits = np.asarray(waits, dtype=float)
    n = len(waits)
    rate = slots_per_flyby / waits.mean()
    if n < 2:
        return rate, math.inf
    loo_means = (waits.sum() - waits) / (n - 1)
    loo_rates = slots_per_flyby / loo_means
    se = math.sqrt((n - 1) / n * float(np.sum((loo_rates - loo_rates.mean()) ** 2)))
    return rate, se


def estimate_rate(cfg: McConfig, workers: int = 1) -> McEstimate:
    """Monte Carlo pairs per flyby with jackknife standard error."""
    waits = draw_waiting_times(cfg, workers)
    rate, se = jackknife_rate(waits, cfg.slots_per_flyby)
    logger.info(
        f"MC n={cfg.nesting_n}: {rate:.4g} pairs/flyby +- {se:.2g} "
        f"({cfg.trials} trials, seed {cfg.rng_seed})"
    )
    return McEstimate(
        pairs_per_flyby_mc=rate,
        std_error=se,
        mean_waiting_slots=float(waits.mean()),
        trials=cfg.trials,
        rng_seed=cfg.rng_seed,
    )


def closed_form_level1_mean(p_link: float, p_swap: float) -> float:
    """Exact mean wait for n = 1: E[max of two Geometric(p)] / p_swap."""
    return (2.0 / p_link - 1.0 / (2.0 * p_link - p_link**2)) / p_swap


def hazard_from_profile(eta2: Sequence[float], link_efficiency: float) -> Tuple[float, ...]:
    """Per-slot elementary-link success probability at each profile sample."""
    return tuple(float(link_efficiency * e) for e in eta2)
