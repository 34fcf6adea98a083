"""Scenario configuration commands."""

from __future__ import annotations

from pathlib import Path

import typer
from rich.console import Console

from cnspa.cli.options import cli_errors
from cnspa.config.manager import ScenarioFile, resolve_scenario
from cnspa.config.models import PaKind
from cnspa.logging_utils import new_context

app = typer.Typer(name="config", help="Scenario configuration commands")
console = Console()


@app.command("show")
def show_config(
    config: Path | None = typer.Option(None, "--config", help="Scenario file (key = value)"),
    pa: PaKind | None = typer.Option(None, "--pa", help="Power amplifier model"),
) -> None:
    """Print the resolved scenario in file format (defaults filled in)."""
    with cli_errors(new_context()):
        cfg = resolve_scenario(config)
        if pa is not None:
            cfg = cfg.with_pa(pa)
        typer.echo(ScenarioFile.dumps(cfg), nl=False)


@app.command("validate")
def validate_config(
    config: Path = typer.Argument(..., help="Scenario file to check"),
) -> None:
    """Check a scenario file and list every problem found."""
    with cli_errors(new_context()):
        # load() raises with every parse and range problem at once
        ScenarioFile(config).load()
        console.print(f"[green]{config.name} is valid.[/green]")
