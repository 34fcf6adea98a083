"""Output renderers for the cnspa CLI.

``RichRenderer`` draws tables for people; ``CsvRenderer`` produces the
machine-readable files (dot decimals, fixed column order, LF endings).
"""

from __future__ import annotations

from collections.abc import Iterable

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from cnspa.io.atomic import render_csv
from cnspa.io.numbers import format_float
from cnspa.models.solution import SCHEME_ORDER, CooperationSolution
from cnspa.models.sweep import SweepResult, TrialRecord
from cnspa.optim.properties import PropertyReport

__all__ = ["SOLUTION_HEADER", "SWEEP_HEADER", "CsvRenderer", "RichRenderer"]

SWEEP_HEADER = (
    "se_bps_hz",
    "scheme",
    "mean_ee_mbps_per_w",
    "stderr_ee",
    "mean_active_nodes",
    "feasible_fraction",
    "trials",
)

SOLUTION_HEADER = (
    "scheme",
    "status",
    "active_nodes",
    "total_power_w",
    "ee_mbps_per_w",
    "rate_achieved_bps",
    "active_node_ids",
)


def _fmt(value: float | None, spec: str) -> str:
    return "-" if value is None else format(value, spec)


class RichRenderer:
    def __init__(self, console: Console | None = None) -> None:
        self.console = console or Console()

    def render_trial(self, record: TrialRecord, *, se_bps_hz: float) -> None:
        table = Table(title=f"Schemes at {se_bps_hz:g} bps/Hz ({record.rate_demand / 1e6:g} Mbps)")
        table.add_column("Scheme", style="cyan")
        table.add_column("Status")
        table.add_column("Active", justify="right")
        table.add_column("Total power (W)", justify="right")
        table.add_column("EE (Mbps/W)", justify="right")
        for scheme in SCHEME_ORDER:
            sol = record.solution(scheme)
            status_style = "red" if not sol.feasible else "green"
            table.add_row(
                scheme.value,
                f"[{status_style}]{sol.status.value}[/{status_style}]",
                str(sol.active_count),
                _fmt(sol.total_power, ".6f"),
                _fmt(sol.ee_mbps_per_w, ".4f"),
            )
        self.console.print(table)
        self.console.print(
            f"Channel amplitudes: min {record.min_amp:.3e}, max {record.max_amp:.3e}"
        )

    def render_sweep(self, result: SweepResult) -> None:
        table = Table(title="Sweep summary")
        for name in ("SE", "Scheme", "EE (Mbps/W)", "Stderr", "Active", "Power (W)", "Feasible", "Cap-adj."):
            table.add_column(name, justify="left" if name == "Scheme" else "right")
        for p in sorted(result.points, key=lambda p: (p.se_bps_hz, SCHEME_ORDER.index(p.scheme))):
            table.add_row(
                f"{p.se_bps_hz:g}",
                p.scheme.value,
                f"{p.mean_ee_mbps_per_w:.4f}",
                f"{p.stderr_ee_mbps_per_w:.4f}",
                f"{p.mean_active_nodes:.2f}",
                f"{p.mean_total_power:.4f}",
                f"{p.feasible_fraction:.1%}",
                f"{p.cap_adjusted_fraction:.1%}",
            )
        self.console.print(table)
        for warning in result.warnings:
            self.console.print(f"[yellow]warning:[/yellow] {warning}")

    def render_properties(self, report: PropertyReport) -> None:
        table = Table(title=f"Property checks over {report.instances} instances")
        table.add_column("Property", style="cyan")
        table.add_column("Checked", justify="right")
        table.add_column("Failures", justify="right")
        table.add_column("Result")
        table.add_column("Description")
        for o in report.outcomes:
            verdict = "[green]pass[/green]" if o.passed else "[red]FAIL[/red]"
            table.add_row(o.name, str(o.checked), str(o.failures), verdict, o.description)
        self.console.print(table)
        failing = report.first_counterexample()
        if failing is not None and failing.counterexample is not None:
            inst = failing.counterexample
            self.console.print(
                Panel(
                    f"property: {failing.name}\n"
                    f"instance: {inst.instance_id}\n"
                    f"SE: {inst.se_bps_hz:g} bps/Hz\n"
                    f"failure: {failing.first_failure}",
                    title="[bold red]Counterexample[/bold red]",
                    border_style="red",
                )
            )


class CsvRenderer:
    @staticmethod
    def sweep(result: SweepResult) -> str:
        points = sorted(result.points, key=lambda p: (p.se_bps_hz, SCHEME_ORDER.index(p.scheme)))
        rows = [
            (
                format_float(p.se_bps_hz),
                p.scheme.value,
                format_float(p.mean_ee_mbps_per_w),
                format_float(p.stderr_ee_mbps_per_w),
                format_float(p.mean_active_nodes),
                format_float(p.feasible_fraction),
                str(p.trials),
            )
            for p in points
        ]
        return render_csv(SWEEP_HEADER, rows)

    @staticmethod
    def solutions(solutions: Iterable[CooperationSolution]) -> str:
        rows = [
            (
                s.scheme.value,
                s.status.value,
                str(s.active_count),
                format_float(s.total_power),
                format_float(s.ee_mbps_per_w),
                format_float(s.rate_achieved),
                " ".join(str(i) for i in s.active_node_ids),
            )
            for s in solutions
        ]
        return render_csv(SOLUTION_HEADER, rows)
