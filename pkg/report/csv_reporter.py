"""CSV output for results, sweeps and oracle validation."""

import io
import math
from typing import Any, Dict, Optional, Sequence

import pandas as pd

from engines.base import ScenarioContext

RESULT_COLUMNS = [
    "mode",
    "distance_km",
    "altitude_km",
    "n_links",
    "T_FB_s",
    "flybys_per_day",
    "P0_avg",
    "P_EG",
    "P_ES",
    "pairs_per_flyby",
    "pairs_per_day",
    "N_mod",
    "storage_ms",
    "noise_error_fraction",
    "peak_loss_db",
]

VALIDATION_COLUMNS = [
    "mode",
    "distance_km",
    "altitude_km",
    "n_links",
    "trials",
    "seed",
    "analytic_pairs_per_flyby",
    "mc_pairs_per_flyby",
    "std_error",
    "ratio",
    "passed",
]


def _finite(value: Optional[float]) -> Optional[float]:
    """None for undefined or non-finite values; written as empty cells."""
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def _scaled(value: Optional[float], factor: float) -> Optional[float]:
    return None if value is None else value * factor


def result_row(context: ScenarioContext) -> Dict[str, Any]:
    """One CSV row for an evaluated scenario."""
    scenario = context.scenario
    rate = context.rate
    summary = context.summary
    return {
        "mode": scenario.mode,
        "distance_km": scenario.total_ground_distance_m / 1e3,
        "altitude_km": _finite(_scaled(scenario.satellite_altitude_m, 1e-3)) if scenario.mode != "fiber" else None,
        "n_links": rate.n_links,
        "T_FB_s": _finite(rate.t_fb_s),
        "flybys_per_day": _finite(rate.flybys_per_day),
        "P0_avg": _finite(rate.p0_avg),
        "P_EG": _finite(rate.p_eg),
        "P_ES": _finite(rate.p_es),
        "pairs_per_flyby": _finite(rate.pairs_per_flyby),
        "pairs_per_day": _finite(rate.pairs_per_day),
        "N_mod": _finite(rate.n_mod),
        "storage_ms": _finite(_scaled(rate.storage_time_s, 1e3)),
        "noise_error_fraction": _finite(context.noise_error_fraction),
        "peak_loss_db": _finite(summary.peak_loss_db) if summary is not None else None,
    }


def validation_row(context: ScenarioContext) -> Dict[str, Any]:
    """One CSV row for a Monte Carlo oracle comparison."""
    scenario = context.scenario
    oracle = context.oracle
    mc = context.mc
    return {
        "mode": scenario.mode,
        "distance_km": scenario.total_ground_distance_m / 1e3,
        "altitude_km": _finite(_scaled(scenario.satellite_altitude_m, 1e-3)),
        "n_links": 2**context.nesting_n,
        "trials": mc.trials if mc else None,
        "seed": mc.rng_seed if mc else None,
        "analytic_pairs_per_flyby": _finite(oracle.analytic_pairs_per_flyby) if oracle else None,
        "mc_pairs_per_flyby": _finite(mc.pairs_per_flyby_mc) if mc else None,
        "std_error": _finite(mc.std_error) if mc else None,
        "ratio": _finite(oracle.ratio) if oracle else None,
        "passed": oracle.passed if oracle else None,
    }


class CSVReporter:
    """Deterministic CSV tables: fixed columns, fixed float format, LF endings."""

    def __init__(self, float_format: str = "%.10g"):
        self.float_format = float_format

    def frame(self, contexts: Sequence[ScenarioContext], validation: bool = False) -> pd.DataFrame:
        if validation:
            return pd.DataFrame([validation_row(c) for c in contexts], columns=VALIDATION_COLUMNS)
        return pd.DataFrame([result_row(c) for c in contexts], columns=RESULT_COLUMNS)

    def generate(self, contexts: Sequence[ScenarioContext], validation: bool = False) -> bytes:
        """CSV bytes for the given contexts, rows in the given order."""
        buffer = io.StringIO()
        self.frame(contexts, validation).to_csv(
            buffer, index=False, float_format=self.float_format, lineterminator="\n"
        )
        return buffer.getvalue().encode("utf-8")


