"""Main CLI application for cnspa."""

import typer
from rich.console import Console

from cnspa.__about__ import __version__
from cnspa.cli import config_commands as config_module
from cnspa.cli.run import run_command
from cnspa.cli.sweep import sweep_command
from cnspa.cli.verify import verify_command
from cnspa.logging_utils import configure_logging

app = typer.Typer(
    name="cnspa",
    help="Energy-efficient node selection and power allocation for CoMP joint transmission",
    add_completion=False,
)

app.command("run")(run_command)
app.command("sweep")(sweep_command)
app.command("verify")(verify_command)
app.add_typer(config_module.app, name="config")

console = Console()


@app.callback()
def main_callback(
    *,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Only warnings and errors on stderr"),
) -> None:
    """CoMP cooperative node selection and power allocation."""
    configure_logging(verbose=verbose, quiet=quiet)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"cnspa v{__version__}")


def main() -> None:
    """Entry point for console scripts: run the Typer app."""
    app()


if __name__ == "__main__":
    main()
