"""Option parsing and error reporting shared by the cnspa commands."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer
from rich.console import Console

from cnspa.config.manager import ScenarioFile, resolve_scenario
from cnspa.config.models import PaKind, ScenarioConfig
from cnspa.exceptions import EXIT_CONFIG_ERROR, CnspaError, ConfigurationError
from cnspa.logging_utils import LogContext, build_safe_extra

logger = logging.getLogger(__name__)

err_console = Console(stderr=True)


def parse_se_list(raw: str | None) -> tuple[float, ...] | None:
    """'1,2,4.5' -> (1.0, 2.0, 4.5)."""
    if raw is None:
        return None
    try:
        grid = tuple(float(part) for part in raw.split(",") if part.strip())
    except ValueError as exc:
        msg = f"--se expects comma-separated numbers, got {raw!r}"
        raise ConfigurationError(msg, details={"se": raw}) from exc
    if not grid:
        msg = "--se needs at least one value"
        raise ConfigurationError(msg, details={"se": raw})
    return grid


def load_scenario(
    ctx: LogContext,
    config_path: Path | None,
    *,
    pa: PaKind | None = None,
    **overrides: Any,
) -> ScenarioConfig:
    """Defaults, then file, then flags; the result is logged in file format."""
    cfg = resolve_scenario(config_path, overrides)
    if pa is not None:
        cfg = cfg.with_pa(pa)
    log_scenario(ctx, cfg, config_path)
    return cfg


def log_scenario(ctx: LogContext, cfg: ScenarioConfig, config_path: Path | None = None) -> None:
    logger.info(
        "resolved scenario:\n%s",
        ScenarioFile.dumps(cfg).rstrip(),
        extra=build_safe_extra(ctx, config_path=config_path, pa=cfg.pa_kind.value),
    )


def report_error(ctx: LogContext, exc: CnspaError) -> None:
    err_console.print(f"[red]Error:[/red] {exc.message}")
    for violation in (exc.details or {}).get("violations", []):
        where = f"line {violation['line']}: " if violation.get("line") else ""
        err_console.print(f"  - {where}{violation['field']}: {violation['reason']}")
    logger.debug("command failed", extra=build_safe_extra(ctx, error=str(exc), code=exc.code))


@contextmanager
def cli_errors(ctx: LogContext) -> Iterator[None]:
    """Map domain errors and I/O failures to exit codes."""
    try:
        yield
    except typer.Exit:
        raise
    except CnspaError as exc:
        report_error(ctx, exc)
        raise typer.Exit(exc.exit_code()) from exc
    except OSError as exc:
        err_console.print(f"[red]I/O error:[/red] {exc}")
        logger.debug("I/O failure", extra=build_safe_extra(ctx, error=str(exc)))
        raise typer.Exit(EXIT_CONFIG_ERROR) from exc
