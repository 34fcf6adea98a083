"""``cnspa sweep``: Monte Carlo EE curves over a spectral-efficiency grid."""

from __future__ import annotations

import logging
from pathlib import Path

import typer
from rich.console import Console

from cnspa.cli.options import cli_errors, load_scenario, parse_se_list
from cnspa.cli.renderers import CsvRenderer, RichRenderer
from cnspa.cli.rich_display import track_progress
from cnspa.config.models import PaKind
from cnspa.config.runtime import SETTINGS
from cnspa.io.atomic import atomic_write_text
from cnspa.logging_utils import build_safe_extra, new_context
from cnspa.sim.montecarlo import sweep

logger = logging.getLogger(__name__)

console = Console()


def sweep_command(
    config: Path | None = typer.Option(None, "--config", help="Scenario file (key = value)"),
    seed: int | None = typer.Option(None, "--seed", help="Override the scenario seed"),
    trials: int | None = typer.Option(None, "--trials", min=1, help="Drops per SE point"),
    se: str | None = typer.Option(None, "--se", help="Comma-separated SE grid in bps/Hz"),
    pa: PaKind | None = typer.Option(None, "--pa", help="Power amplifier model"),
    workers: int | None = typer.Option(
        None, "--workers", min=1, max=64, help="Worker threads (default: CNSPA_WORKERS)"
    ),
    out: Path | None = typer.Option(None, "--out", help="CSV output path (default: stdout)"),
) -> None:
    """Average every scheme's EE over many drops at each SE point."""
    ctx = new_context()
    with cli_errors(ctx):
        cfg = load_scenario(
            ctx, config, pa=pa, seed=seed, trials=trials, se_grid=parse_se_list(se)
        )
        with track_progress(cfg.trials, "Simulating drops") as advance:
            result = sweep(
                cfg,
                workers=workers or SETTINGS.workers,
                on_trial=lambda _trial: advance(),
            )

        text = CsvRenderer.sweep(result)
        if out is None:
            typer.echo(text, nl=False)
            return
        atomic_write_text(out, text)
        RichRenderer(console).render_sweep(result)
        logger.info(
            "sweep written",
            extra=build_safe_extra(ctx, out_path=out, rows=len(result.points)),
        )
