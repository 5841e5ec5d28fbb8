"""Scenario files: loading, presets and validation."""

from .scenario import Scenario, resolve_scenario, scenario_from_manifest
from .scenario_parser import (
    SWEEP_AXES,
    axis_grid,
    apply_axis,
    check_axis,
    load_scenario,
    load_scenario_data,
)

__all__ = [
    "Scenario",
    "resolve_scenario",
    "scenario_from_manifest",
    "SWEEP_AXES",
    "axis_grid",
    "apply_axis",
    "check_axis",
    "load_scenario",
    "load_scenario_data",
]
