"""``cnspa verify``: cross-check the optimizer against the oracles."""

from __future__ import annotations

import logging
from pathlib import Path

import typer
from rich.console import Console

from cnspa.cli.options import cli_errors, load_scenario
from cnspa.cli.renderers import RichRenderer
from cnspa.cli.rich_display import track_progress
from cnspa.config.models import PaKind
from cnspa.config.runtime import SETTINGS
from cnspa.exceptions import EXIT_VERIFY_FAILED, InvalidArgumentError
from cnspa.io.instances import InstanceFile, write_instance
from cnspa.logging_utils import build_safe_extra, new_context
from cnspa.optim.properties import generate_instances, run_property_suite

logger = logging.getLogger(__name__)

console = Console()

DEFAULT_INSTANCES = 500
DEFAULT_MAX_M = 8


def verify_command(
    config: Path | None = typer.Option(None, "--config", help="Scenario file (key = value)"),
    seed: int | None = typer.Option(None, "--seed", help="Override the scenario seed"),
    instances: int = typer.Option(DEFAULT_INSTANCES, "--instances", min=1, help="Random drops to check"),
    max_m: int = typer.Option(DEFAULT_MAX_M, "--max-m", min=1, help="Cluster size of each drop"),
    pa: PaKind | None = typer.Option(None, "--pa", help="Power amplifier model"),
    counterexample: Path = typer.Option(
        Path("counterexample.yaml"),
        "--counterexample",
        help="Where to write the first failing instance",
    ),
) -> None:
    """Run the property suite; exit 3 and dump a counterexample on failure."""
    ctx = new_context()
    with cli_errors(ctx):
        if max_m > SETTINGS.brute_force_limit:
            msg = f"--max-m {max_m} exceeds the subset search limit {SETTINGS.brute_force_limit}"
            raise InvalidArgumentError(msg, details={"max_m": max_m})
        cfg = load_scenario(ctx, config, pa=pa, seed=seed, num_nodes_m=max_m)

        with track_progress(instances, "Checking properties") as advance:
            report = run_property_suite(
                cfg,
                generate_instances(cfg, instances),
                on_instance=lambda _inst: advance(),
            )

        RichRenderer(console).render_properties(report)
        if report.passed:
            console.print("[green]All properties hold.[/green]")
            return

        failing = report.first_counterexample()
        inst = failing.counterexample
        write_instance(
            counterexample,
            InstanceFile(
                scenario=cfg,
                cluster=inst.cluster,
                se_bps_hz=inst.se_bps_hz,
                rate_demand=inst.r_dl,
                instance_id=inst.instance_id,
                property_name=failing.name,
                failure=failing.first_failure,
            ),
        )
        console.print(f"Counterexample written to {counterexample}")
        logger.warning(
            "property suite failed",
            extra=build_safe_extra(ctx, out_path=counterexample, property=failing.name),
        )
        raise typer.Exit(EXIT_VERIFY_FAILED)
