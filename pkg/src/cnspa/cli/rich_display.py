"""Progress display for long Monte Carlo and verify runs."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from contextlib import contextmanager

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    TextColumn,
    TimeElapsedColumn,
    TimeRemainingColumn,
)

from cnspa.config.runtime import SETTINGS


def progress_enabled(console: Console) -> bool:
    return SETTINGS.show_progress and console.is_terminal


@contextmanager
def track_progress(
    total: int,
    description: str,
    *,
    console: Console | None = None,
    enabled: bool | None = None,
) -> Iterator[Callable[[], None]]:
    """Yield a callback that advances a transient rich bar by one unit.

    Without a terminal (or with CNSPA_PROGRESS=false) the callback only
    counts, so callers never branch on whether a bar is shown.
    """
    if total <= 0:
        msg = f"progress total must be positive, got {total}"
        raise ValueError(msg)
    console = console or Console(stderr=True)
    if enabled is None:
        enabled = progress_enabled(console)

    if not enabled:
        yield lambda: None
        return

    bar = Progress(
        TextColumn("[bold]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        TimeRemainingColumn(),
        console=console,
        transient=True,
    )
    task = bar.add_task(description, total=total)
    with bar:
        yield lambda: bar.advance(task)
