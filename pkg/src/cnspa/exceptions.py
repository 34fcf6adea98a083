"""Domain-specific exceptions for cnspa.

A small dataclass hierarchy so every failure carries a machine-readable
code and optional details. The CLI maps each class to a process exit code
through ``exit_code()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_VERIFY_FAILED = 3


@dataclass
class CnspaError(Exception):
    """Base domain error for cnspa.

    Declared as a dataclass so subclasses only override ``code`` and
    ``exit_code`` without repeating serialization logic.
    """

    message: str | None = None
    code: str = "CNSPA_ERROR"
    details: dict[str, Any] | None = None

    def __str__(self) -> str:  # pragma: no cover - trivial
        return str(self.message) if self.message is not None else super().__str__()

    def to_dict(self) -> dict[str, Any]:
        return {"error": str(self), "error_code": self.code, "details": self.details}

    def exit_code(self) -> int:
        return EXIT_CONFIG_ERROR


@dataclass
class InvalidArgumentError(CnspaError, ValueError):
    """Raised when an operation receives an argument outside its domain of
    definition (negative power, non-finite dBm value, length mismatch)."""

    code: str = "INVALID_ARGUMENT"


@dataclass
class DomainError(CnspaError, ValueError):
    """Raised when a power value falls outside the PA operating range."""

    code: str = "DOMAIN_ERROR"


@dataclass
class ConfigurationError(CnspaError):
    """Raised for unreadable, unparseable or invalid scenario configuration.

    ``details["violations"]`` holds every problem found, never just the first.
    """

    code: str = "CONFIGURATION_ERROR"


@dataclass
class SimulationError(CnspaError, RuntimeError):
    code: str = "SIMULATION_ERROR"


@dataclass
class CapViolationError(CnspaError):
    """Closed-form powers exceed at least one per-node transmit cap."""

    code: str = "CAP_VIOLATION"

    def exit_code(self) -> int:
        return EXIT_INFEASIBLE


@dataclass
class OracleFailure(CnspaError, RuntimeError):
    code: str = "ORACLE_FAILURE"

    def exit_code(self) -> int:
        return EXIT_VERIFY_FAILED
