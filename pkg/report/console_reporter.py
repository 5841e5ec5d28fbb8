"""Console reporter with Rich formatting."""

from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from engines.base import Flag, RunResult, ScenarioContext, Severity


class ConsoleReporter:
    """Rich console output for evaluated scenarios."""

    # Severity colors
    SEVERITY_COLORS = {
        Severity.ERROR: "red",
        Severity.WARNING: "yellow",
        Severity.INFO: "blue",
    }

    # Severity symbols
    SEVERITY_SYMBOLS = {
        Severity.ERROR: "[red]X[/red]",
        Severity.WARNING: "[yellow]![/yellow]",
        Severity.INFO: "[blue]i[/blue]",
    }

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console()

    def report(self, result: RunResult, title: str = "satrep") -> None:
        """Print rates, oracle comparisons and flags."""
        self.console.print()
        self.console.print(Panel(title, style="bold blue"))

        self._print_rates(result.contexts)
        if any(ctx.oracle is not None for ctx in result.contexts):
            self._print_oracle(result.contexts)
        if result.sensitivity:
            self._print_sensitivity(result.sensitivity)
        self._print_summary(result)
        self._print_flags(result.flags)

    def _print_rates(self, contexts: List[ScenarioContext]) -> None:
        table = Table(title="Rates", show_header=True)
        table.add_column("Mode", style="bold")
        table.add_column("L (km)", justify="right")
        table.add_column("h (km)", justify="right")
        table.add_column("Links", justify="right")
        table.add_column("T_FB (s)", justify="right")
        table.add_column("P0_avg", justify="right")
        table.add_column("Pairs/flyby", justify="right")
        table.add_column("Pairs/day", justify="right")
        table.add_column("Peak loss (dB)", justify="right")
        table.add_column("Noise err", justify="right")

        for ctx in contexts:
            scenario, rate = ctx.scenario, ctx.rate
            altitude = scenario.satellite_altitude_m
            table.add_row(
                scenario.mode,
                f"{scenario.total_ground_distance_m / 1e3:.0f}",
                f"{altitude / 1e3:.0f}" if altitude and scenario.mode != "fiber" else "-",
                str(rate.n_links),
                f"{rate.t_fb_s:.0f}" if rate.t_fb_s is not None else "-",
                f"{rate.p0_avg:.3e}" if rate.p0_avg is not None else "-",
                f"{rate.pairs_per_flyby:.4g}" if rate.pairs_per_flyby is not None else "-",
                f"{rate.pairs_per_day:.4g}",
                f"{ctx.summary.peak_loss_db:.1f}" if ctx.summary is not None else "-",
                f"{ctx.noise_error_fraction:.2%}" if ctx.noise_error_fraction is not None else "-",
            )

        self.console.print(table)

    def _print_oracle(self, contexts: List[ScenarioContext]) -> None:
        table = Table(title="Monte Carlo oracle", show_header=True)
        table.add_column("Links", justify="right")
        table.add_column("Analytic", justify="right")
        table.add_column("Monte Carlo", justify="right")
        table.add_column("Std. error", justify="right")
        table.add_column("Ratio", justify="right")
        table.add_column("Tolerance")
        table.add_column("")

        for ctx in contexts:
            if ctx.oracle is None:
                continue
            status = "[green]ok[/green]" if ctx.oracle.passed else "[red]FAIL[/red]"
            table.add_row(
                str(2**ctx.nesting_n),
                f"{ctx.oracle.analytic_pairs_per_flyby:.4g}",
                f"{ctx.mc.pairs_per_flyby_mc:.4g}",
                f"{ctx.mc.std_error:.2g}",
                f"{ctx.oracle.ratio:.3f}",
                ctx.oracle.tolerance,
                status,
            )

        self.console.print(table)

    def _print_sensitivity(self, tables: List[Dict[str, Any]]) -> None:
        table = Table(title="Efficiency sensitivity", show_header=True)
        table.add_column("h (km)", justify="right")
        table.add_column("Parameter", style="bold")
        table.add_column("Links", justify="right")
        table.add_column("Exponent", justify="right")
        table.add_column("Fitted slope", justify="right")

        for entry in tables:
            table.add_row(
                f"{entry['altitude_km']:.0f}",
                entry["parameter"],
                str(2 ** entry["nesting_n"]),
                str(entry["exponent"]),
                f"{entry['fitted_slope']:.3f}",
            )

        self.console.print(table)

    def _print_summary(self, result: RunResult) -> None:
        errors, warnings = result.get_error_count(), result.get_warning_count()
        color = "red" if errors else "yellow" if warnings else "green"
        self.console.print(
            f"[{color}]{len(result.contexts)} point(s), {errors} error(s), {warnings} warning(s)[/{color}]"
        )

    def _print_flags(self, flags: List[Flag]) -> None:
        if not flags:
            return
        table = Table(show_header=True, header_style="bold", box=None, padding=(0, 1))
        table.add_column("", width=3)  # Severity symbol
        table.add_column("Code", style="cyan")
        table.add_column("Description")
        table.add_column("Value")
        table.add_column("Expected")

        # Same condition at many sweep points is shown once
        seen = set()
        for f in flags:
            key = (f.code, f.description, f.value)
            if key in seen:
                continue
            seen.add(key)
            table.add_row(self.SEVERITY_SYMBOLS[f.severity], f.code, f.description, f.value, f.expected)

        self.console.print(table)
