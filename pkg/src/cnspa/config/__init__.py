"""Scenario configuration and runtime settings for cnspa."""

from __future__ import annotations

from cnspa.config.manager import ScenarioFile, apply_overrides, resolve_scenario
from cnspa.config.models import (
    PaKind,
    ScenarioConfig,
    default_scenario,
    table1_defaults,
)
from cnspa.config.runtime import SETTINGS, RuntimeSettings
from cnspa.config.validators import (
    ValidationResult,
    Violation,
    require_valid,
    validate,
)

__all__ = [
    "SETTINGS",
    "PaKind",
    "RuntimeSettings",
    "ScenarioConfig",
    "ScenarioFile",
    "ValidationResult",
    "Violation",
    "apply_overrides",
    "require_valid",
    "resolve_scenario",
    "default_scenario",
    "table1_defaults",
    "validate",
]
