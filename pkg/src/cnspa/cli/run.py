"""``cnspa run``: one drop, every scheme."""

from __future__ import annotations

import logging
from pathlib import Path

import typer
from rich.console import Console

from cnspa.cli.options import cli_errors, load_scenario, log_scenario
from cnspa.cli.renderers import CsvRenderer, RichRenderer
from cnspa.config.models import PaKind
from cnspa.exceptions import EXIT_INFEASIBLE
from cnspa.io.atomic import atomic_write_text
from cnspa.io.drops import write_drop_csv
from cnspa.io.instances import load_instance
from cnspa.logging_utils import build_safe_extra, new_context
from cnspa.models.solution import SCHEME_ORDER, Scheme
from cnspa.sim.montecarlo import draw_trial_cluster, evaluate_cluster

logger = logging.getLogger(__name__)

console = Console()


def run_command(
    config: Path | None = typer.Option(None, "--config", help="Scenario file (key = value)"),
    seed: int | None = typer.Option(None, "--seed", help="Override the scenario seed"),
    se: float | None = typer.Option(
        None, "--se", help="Spectral efficiency demand in bps/Hz (default: rate_demand)"
    ),
    pa: PaKind | None = typer.Option(None, "--pa", help="Power amplifier model"),
    trial: int = typer.Option(0, "--trial", min=0, help="Trial index of the drop"),
    out: Path | None = typer.Option(None, "--out", help="Write per-scheme results as CSV"),
    drop_csv: Path | None = typer.Option(None, "--drop-csv", help="Write the drop's nodes as CSV"),
    instance: Path | None = typer.Option(
        None, "--instance", help="Replay a YAML instance written by verify"
    ),
) -> None:
    """Evaluate CNS-PA and the four baselines on one drop.

    Exits 2 when the demand exceeds what the full cluster can deliver.
    """
    ctx = new_context()
    with cli_errors(ctx):
        if instance is not None:
            replay = load_instance(instance)
            cfg = replay.scenario if pa is None else replay.scenario.with_pa(pa)
            log_scenario(ctx, cfg, instance)
            cluster = replay.cluster
            trial_id = replay.instance_id
            se_point = replay.se_bps_hz if se is None else se
            r_dl = replay.rate_demand if se is None else cfg.rate_for_se(se)
        else:
            cfg = load_scenario(ctx, config, pa=pa, seed=seed)
            trial_id = trial
            cluster = draw_trial_cluster(cfg, trial_id)
            se_point = cfg.rate_demand / cfg.bandwidth_w if se is None else se
            r_dl = cfg.rate_demand if se is None else cfg.rate_for_se(se)

        record = evaluate_cluster(cluster, trial_id, r_dl, cfg)
        RichRenderer(console).render_trial(record, se_bps_hz=se_point)

        if out is not None:
            atomic_write_text(
                out, CsvRenderer.solutions(record.solution(s) for s in SCHEME_ORDER)
            )
            logger.info("results written", extra=build_safe_extra(ctx, out_path=out))
        if drop_csv is not None:
            write_drop_csv(drop_csv, cluster)
            logger.info("drop written", extra=build_safe_extra(ctx, out_path=drop_csv))

        if not record.solution(Scheme.CNS_PA).feasible:
            console.print("[red]Demand exceeds the full-cluster maximum rate.[/red]")
            raise typer.Exit(EXIT_INFEASIBLE)
