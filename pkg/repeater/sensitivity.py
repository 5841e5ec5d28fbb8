"""Rate sensitivity to individual component efficiencies."""

import dataclasses
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

import numpy as np

from repeater.rates import ChainConfig, Efficiencies, pairs_per_day

PARAMETER_ALIASES = {
    "eta_s": "source",
    "eta_q": "qnd",
    "eta_w": "mem_write",
    "eta_r": "mem_read",
    "eta_d": "detector",
}


def canonical_parameter(name: str) -> str:
    """Map eta_s/eta_q/... or a field name onto an Efficiencies field."""
    name = PARAMETER_ALIASES.get(name, name)
    if name not in {f.name for f in dataclasses.fields(Efficiencies)}:
        raise ValueError(f"unknown efficiency parameter {name!r}")
    return name


def governing_exponent(parameter: str, nesting_n: int) -> int:
    """Power of the efficiency in the rate formula."""
    parameter = canonical_parameter(parameter)
    if parameter == "source":
        return 1
    if parameter in ("qnd", "mem_write"):
        return 2
    return 2 * nesting_n


@dataclass(frozen=True)
class SensitivityTable:
    parameter: str
    nesting_n: int
    exponent: int
    values: List[float]
    pairs_per_day: List[float]

    @property
    def fitted_slope(self) -> float:
        """Least-squares log-log slope over the strictly positive points."""
        x = np.asarray(self.values, dtype=float)
        y = np.asarray(self.pairs_per_day, dtype=float)
        keep = (x > 0) & (y > 0)
        if keep.sum() < 2:
            return float("nan")
        return float(np.polyfit(np.log(x[keep]), np.log(y[keep]), 1)[0])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "parameter": self.parameter,
            "nesting_n": self.nesting_n,
            "exponent": self.exponent,
            "fitted_slope": self.fitted_slope,
            "values": list(self.values),
            "pairs_per_day": list(self.pairs_per_day),
        }


def sensitivity_sweep(
    chain: ChainConfig,
    baseline: Efficiencies,
    p0_avg: float,
    t_fb_s: float,
    eta1_max: float,
    flybys_per_day: float,
    parameter: str,
    grid: Sequence[float],
) -> SensitivityTable:
    """Rates per grid value of one efficiency, the others held at baseline."""
    parameter = canonical_parameter(parameter)
    rates = []
    for value in grid:
        eff = dataclasses.replace(baseline, **{parameter: float(value)})
        rates.append(pairs_per_day(chain, eff, p0_avg, t_fb_s, eta1_max, flybys_per_day).pairs_per_day)
    return SensitivityTable(
        parameter=parameter,
        nesting_n=chain.nesting_n,
        exponent=governing_exponent(parameter, chain.nesting_n),
        values=[float(v) for v in grid],
        pairs_per_day=rates,
    )
