#!/usr/bin/env python3
"""
satrep - Satellite Quantum Repeater Rate Simulator - CLI Entry Point

Computes entanglement-distribution rates for repeater chains fed by satellite
downlinks and compares them with direct satellite transmission and fiber:
0. Orbit: circular equatorial passes, mutual-visibility windows
1. Link budget: diffraction, pointing jitter, atmosphere per arm
2. Rates: repeater chain, direct transmission or fiber
3. Noise: background false-coincidence error fraction
4. Monte Carlo: waiting-time oracle (validate only)
F. Manifest: digests for byte-identical replay

Usage:
    python satrep.py run scenarios/fig2_leo1000.toml
    python satrep.py sweep scenarios/fig2_leo1000.toml --axis ground_distance \\
        --from 2000 --to 20000 --step 1000 --altitudes 500,1000,1500
    python satrep.py validate scenarios/fig2_leo1000.toml --trials 20000 --seed 7
    python satrep.py replay results/manifest.json
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click
from rich.console import Console
from rich.logging import RichHandler

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from config import Config, get_config, set_config
from engines.base import RunResult, ScenarioContext, Severity
from engines.engine2_rates import RateEngine
from engines.engine4_montecarlo import MonteCarloEngine
from engines.engine_final import ManifestEngine, RunManifest
from engines.pipeline import evaluate_point, run_stages
from errors import ReplayMismatchError, SatrepError, SweepPointError, UsageError
from parser.scenario import Scenario, resolve_scenario, scenario_from_manifest
from parser.scenario_parser import (
    SWEEP_AXES,
    apply_axis,
    axis_grid,
    check_axis,
    load_scenario,
    load_scenario_data,
)
from repeater.sensitivity import PARAMETER_ALIASES
from report.console_reporter import ConsoleReporter
from report.csv_reporter import CSVReporter
from report.json_reporter import JSONReporter
from report.xlsx_reporter import XLSXReporter

logger = logging.getLogger("satrep")

OUTPUT_NAMES = {"run": "results.csv", "sweep": "sweep.csv", "validate": "validation.csv"}
MANIFEST_NAME = "manifest.json"


def parse_altitudes(altitudes: Optional[str]) -> List[float]:
    """Parse '500,1000,1500' into altitudes in km."""
    if not altitudes:
        return []
    try:
        return [float(part) for part in altitudes.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"altitudes must be comma-separated numbers, got {altitudes!r}") from None


def evaluate_all(scenarios: Sequence[Scenario], config: Config, workers: int = 1) -> List[ScenarioContext]:
    """Evaluate scenarios in order; parallel when workers > 1."""
    items = [(scenario, config) for scenario in scenarios]
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate_point, items))
    return [evaluate_point(item) for item in items]


def validate_contexts(scenarios: Sequence[Scenario], config: Config, workers: int = 1) -> List[ScenarioContext]:
    """Evaluate every nesting level of each scenario and run the Monte Carlo oracle."""
    oracle = MonteCarloEngine(config, workers=workers)
    contexts = []
    for scenario in scenarios:
        for n in scenario.nesting_candidates(config):
            context = evaluate_point((scenario.with_nesting(n), config))
            contexts.append(run_stages(context, [oracle]))
    return contexts


def sweep_scenarios(
    raw: Dict[str, Any],
    axis: str,
    grid: Sequence[float],
    altitudes: Sequence[float],
    config: Config,
) -> List[Scenario]:
    """Resolved scenarios for every (altitude, axis value) point, sorted."""
    check_axis(axis)
    bases = [apply_axis(raw, "altitude", alt) for alt in altitudes] if altitudes else [raw]
    scenarios = []
    for base in bases:
        for value in grid:
            data = apply_axis(base, axis, value)
            try:
                scenarios.append(resolve_scenario(data, config))
            except SatrepError as e:
                raise SweepPointError(f"sweep point {axis}={value:g}: {e}", e.exit_code) from e
    key_field = SWEEP_AXES[axis][0]
    return sorted(scenarios, key=lambda s: (s.satellite_altitude_m or 0.0, getattr(s, key_field)))


def execute(
    command: str,
    scenarios: Sequence[Scenario],
    config: Config,
    workers: int = 1,
    options: Optional[Dict[str, Any]] = None,
) -> tuple:
    """Evaluate scenarios for a command; returns (RunResult, csv bytes)."""
    if command == "validate":
        contexts = validate_contexts(scenarios, config, workers)
    else:
        contexts = evaluate_all(scenarios, config, workers)
    csv_bytes = CSVReporter().generate(contexts, validation=(command == "validate"))
    manifest = ManifestEngine(config).build(
        command, contexts, {OUTPUT_NAMES[command]: csv_bytes}, options
    )
    # Validation manifests store the scenario as given, not one per nesting level
    if command == "validate":
        manifest.scenarios = [s.model_dump() for s in scenarios]
    options = options or {}
    if command == "sweep" and options.get("axis") in PARAMETER_ALIASES:
        manifest.sensitivity = sensitivity_tables(contexts, options["axis"], options["grid"], config)
    result = RunResult(contexts=contexts, manifest=manifest, sensitivity=manifest.sensitivity)
    return result, csv_bytes


def sensitivity_tables(
    contexts: Sequence[ScenarioContext], axis: str, grid: Sequence[float], config: Config
) -> List[Dict[str, Any]]:
    """Closed-form exponent and fitted log-log slope per altitude of an efficiency sweep."""
    engine = RateEngine(config)
    tables = []
    seen = set()
    for context in contexts:
        altitude = context.scenario.satellite_altitude_m
        if context.scenario.mode != "repeater" or altitude in seen:
            continue
        seen.add(altitude)
        if context.rate is None or context.rate.pairs_per_day <= 0.0:
            logger.info(f"No sensitivity table at h={altitude / 1e3:g} km, zero baseline rate")
            continue
        table = engine.sensitivity(context, axis, grid)
        tables.append({"altitude_km": altitude / 1e3, **table.to_dict()})
    return tables


def run_scenario(cfg_path: str, overrides: Dict[str, Any], config: Config) -> tuple:
    """Evaluate one scenario file."""
    scenario = load_scenario(cfg_path, overrides, config)
    return execute("run", [scenario], config, options={"source": str(cfg_path)})


def run_sweep(
    cfg_path: str,
    axis: str,
    grid: Sequence[float],
    altitudes: Sequence[float],
    workers: int,
    overrides: Dict[str, Any],
    config: Config,
) -> tuple:
    """Evaluate a scenario template over a grid of axis values."""
    raw = {**load_scenario_data(cfg_path), **overrides}
    scenarios = sweep_scenarios(raw, axis, grid, altitudes, config)
    logger.info(f"Sweeping {axis} over {len(scenarios)} point(s) with {workers} worker(s)")
    options = {"source": str(cfg_path), "axis": axis, "grid": list(grid), "altitudes_km": list(altitudes)}
    return execute("sweep", scenarios, config, workers, options)


def validate_scenario(cfg_path: str, overrides: Dict[str, Any], workers: int, config: Config) -> tuple:
    """Compare the analytic rate with the Monte Carlo oracle."""
    scenario = load_scenario(cfg_path, overrides, config)
    return execute("validate", [scenario], config, workers, {"source": str(cfg_path)})


def replay_manifest(manifest_path: str, config: Config, workers: int = 1) -> tuple:
    """Re-execute a manifest under its recorded numerics.

    Returns (RunResult, csv bytes, mismatch flags).
    """
    manifest = RunManifest.read(manifest_path)
    if manifest.command not in OUTPUT_NAMES:
        raise UsageError(f"cannot replay command {manifest.command!r}")
    config = config.with_numerics(manifest.config)
    scenarios = [scenario_from_manifest(data) for data in manifest.scenarios]
    result, csv_bytes = execute(manifest.command, scenarios, config, workers, manifest.options)
    flags = ManifestEngine(config).verify(manifest, {OUTPUT_NAMES[manifest.command]: csv_bytes})
    return result, csv_bytes, flags


def write_outputs(
    out_dir: Path,
    command: str,
    result: RunResult,
    csv_bytes: bytes,
    xlsx: bool = False,
) -> None:
    """Write the CSV table and manifest (and optionally a workbook) to out_dir."""
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / OUTPUT_NAMES[command]
    csv_path.write_bytes(csv_bytes)
    JSONReporter().write(result.manifest, out_dir / MANIFEST_NAME, result.flags)
    click.echo(f"Wrote {csv_path} and {out_dir / MANIFEST_NAME}")
    if xlsx:
        xlsx_path = out_dir / f"{command}.xlsx"
        XLSXReporter().write(result.contexts, xlsx_path, title=command)
        click.echo(f"Wrote {xlsx_path}")


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def background_option(f):
    return click.option(
        "--background",
        type=click.Choice(["day", "night", "none"]),
        default=None,
        help="Background light preset (overrides the scenario file)",
    )(f)


def out_option(f):
    return click.option(
        "--out",
        "out_dir",
        type=click.Path(file_okay=False),
        default=None,
        help="Output directory (default: config output_dir)",
    )(f)


def workers_option(f):
    return click.option(
        "--workers", type=click.IntRange(min=1), default=None, help="Parallel worker processes"
    )(f)


def fail(error: SatrepError) -> None:
    click.echo(f"Error: {error}", err=True)
    sys.exit(error.exit_code)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log progress")
@click.option("--env-file", type=click.Path(dir_okay=False), default=None, help="dotenv file with SATREP_* settings")
def main(verbose: bool, env_file: Optional[str]) -> None:
    """Satellite quantum repeater rate simulator."""
    setup_logging(verbose)
    set_config(Config.from_env(Path(env_file) if env_file else None))


@main.command()
@click.argument("cfg", type=click.Path())
@background_option
@out_option
def run(cfg: str, background: Optional[str], out_dir: Optional[str]) -> None:
    """Evaluate one scenario."""
    config = get_config()
    try:
        result, csv_bytes = run_scenario(cfg, {"background": background} if background else {}, config)
    except SatrepError as e:
        fail(e)

    ConsoleReporter().report(result, title=f"satrep run: {cfg}")
    write_outputs(Path(out_dir) if out_dir else config.output_dir, "run", result, csv_bytes)
    sys.exit(0)


@main.command()
@click.argument("cfg", type=click.Path())
@click.option("--axis", required=True, type=click.Choice(sorted(SWEEP_AXES)), help="Axis to sweep")
@click.option("--from", "start", required=True, type=float, help="First value (km for distances)")
@click.option("--to", "stop", required=True, type=float, help="Last value, inclusive")
@click.option("--step", required=True, type=float, help="Grid spacing")
@click.option("--altitudes", default=None, help="Comma-separated altitudes in km to cross with the axis")
@click.option("--xlsx", is_flag=True, help="Also write an Excel workbook")
@background_option
@workers_option
@out_option
def sweep(
    cfg: str,
    axis: str,
    start: float,
    stop: float,
    step: float,
    altitudes: Optional[str],
    xlsx: bool,
    background: Optional[str],
    workers: Optional[int],
    out_dir: Optional[str],
) -> None:
    """Evaluate a scenario over a grid of one axis."""
    config = get_config()
    workers = workers or config.workers
    try:
        grid = axis_grid(start, stop, step)
        result, csv_bytes = run_sweep(
            cfg,
            axis,
            grid,
            parse_altitudes(altitudes),
            workers,
            {"background": background} if background else {},
            config,
        )
    except SatrepError as e:
        fail(e)

    ConsoleReporter().report(result, title=f"satrep sweep: {cfg} ({axis})")
    write_outputs(Path(out_dir) if out_dir else config.output_dir, "sweep", result, csv_bytes, xlsx)
    sys.exit(0)


@main.command()
@click.argument("cfg", type=click.Path())
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Monte Carlo trials")
@click.option("--seed", type=click.IntRange(min=0), default=None, help="Monte Carlo seed")
@click.option(
    "--hazard",
    type=click.Choice(["flyby-average", "profile"]),
    default=None,
    help="Level-0 success: flyby-average P_EG (graded) or the sampled profile (reported only)",
)
@background_option
@workers_option
@out_option
def validate(
    cfg: str,
    trials: Optional[int],
    seed: Optional[int],
    hazard: Optional[str],
    background: Optional[str],
    workers: Optional[int],
    out_dir: Optional[str],
) -> None:
    """Check the analytic rate against the Monte Carlo oracle."""
    config = get_config()
    overrides = {"mc_trials": trials, "mc_seed": seed, "mc_hazard": hazard, "background": background}
    try:
        result, csv_bytes = validate_scenario(
            cfg, {k: v for k, v in overrides.items() if v is not None}, workers or config.workers, config
        )
    except SatrepError as e:
        fail(e)

    ConsoleReporter().report(result, title=f"satrep validate: {cfg}")
    write_outputs(Path(out_dir) if out_dir else config.output_dir, "validate", result, csv_bytes)
    sys.exit(0 if result.is_success else 3)


@main.command()
@click.argument("manifest", type=click.Path())
@workers_option
@out_option
def replay(manifest: str, workers: Optional[int], out_dir: Optional[str]) -> None:
    """Re-execute a manifest and compare output digests."""
    config = get_config()
    try:
        result, csv_bytes, flags = replay_manifest(manifest, config, workers or config.workers)
    except SatrepError as e:
        fail(e)

    if out_dir:
        write_outputs(Path(out_dir), result.manifest.command, result, csv_bytes)
    for flag in flags:
        click.echo(f"{flag.code} {flag.description}: got {flag.value}, expected {flag.expected}", err=True)
    if any(f.severity == Severity.ERROR for f in flags):
        fail(ReplayMismatchError(f"replay of {manifest} did not reproduce its outputs"))
    click.echo(f"Replay of {manifest} reproduced all outputs")
    sys.exit(0)


if __name__ == "__main__":
    main()
