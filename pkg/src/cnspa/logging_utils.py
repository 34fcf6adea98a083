"""Small structured logging helpers for cnspa.

Provides run id generation and helpers to build ``extra`` dicts for logger
calls, so the CLI and the simulation layers tag their records the same way.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any
from uuid import uuid4

from rich.console import Console
from rich.logging import RichHandler

MAX_ERROR_CHARS = 500


@dataclass
class LogContext:
    run_id: str


def new_context(run_id: str | None = None) -> LogContext:
    """Create a new LogContext with a uuid4 run id if not provided."""
    return LogContext(run_id=run_id or str(uuid4()))


def build_extra(
    ctx: LogContext,
    **kwargs: Any,
) -> dict[str, Any]:
    """Return an ``extra`` dict suitable for passing to Python logging calls.

    ``run_id`` is always present; other metadata is copied through.
    """
    return dict({"run_id": ctx.run_id}, **kwargs)


def sanitize_path(path: str | Path) -> str:
    """Return only the basename so logs do not expose local directory layout."""
    try:
        return Path(path).name
    except (TypeError, ValueError):
        return str(path)


def build_safe_extra(ctx: LogContext, **kwargs: Any) -> dict[str, Any]:
    """Build an ``extra`` dict with light sanitization of common fields.

    ``config_path`` and ``out_path`` are reduced to their basename and long
    ``error`` strings are truncated.
    """
    safe: dict[str, Any] = {}
    for k, v in kwargs.items():
        if k in {"config_path", "out_path"} and v is not None:
            safe[k] = sanitize_path(v)
        elif k == "error" and isinstance(v, str):
            safe[k] = v
            if len(v) > MAX_ERROR_CHARS:
                safe[k] = v[:MAX_ERROR_CHARS] + "...[truncated]"
        else:
            safe[k] = v

    return build_extra(ctx, **safe)


def configure_logging(*, verbose: bool = False, quiet: bool = False) -> None:
    """Route cnspa log records to stderr through rich.

    stdout stays reserved for tables and CSV output.
    """
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING

    root = logging.getLogger("cnspa")
    root.setLevel(level)
    for handler in list(root.handlers):
        if getattr(handler, "_cnspa_handler", False):
            root.removeHandler(handler)

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=verbose,
    )
    handler._cnspa_handler = True  # type: ignore[attr-defined]
    handler.setLevel(level)
    root.addHandler(handler)
