from __future__ import annotations

import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import ValidationError as PydanticValidationError

from cnspa.config.models import ScenarioConfig
from cnspa.config.validators import Violation, collect_violations, require_valid
from cnspa.exceptions import ConfigurationError
from cnspa.units import dbm_to_watt

logger = logging.getLogger(__name__)

# Guard against accidentally pointing --config at a large data file
MAX_CONFIG_BYTES = 1 * 1024 * 1024

FIELD_NAMES: tuple[str, ...] = tuple(ScenarioConfig.model_fields.keys())


def _convert_value(key: str, raw: str) -> Any:
    """Apply per-key unit suffixes before pydantic coercion."""
    text = raw.strip()
    if key == "p_max":
        lowered = text.lower()
        if lowered.endswith("dbm"):
            return dbm_to_watt(float(text[: -len("dbm")].strip()))
        if lowered.endswith("w"):
            return float(text[:-1].strip())
    if key == "noise_psd" and text.lower().endswith("dbm/hz"):
        return float(text[: -len("dbm/hz")].strip())
    return text


class ScenarioFile:
    """Reads and writes the flat ``key = value`` scenario format.

    Missing keys fall back to the defaults, unknown keys are errors, and all
    problems of a file are reported together with their line numbers.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def load(self) -> ScenarioConfig:
        try:
            if self.path.stat().st_size > MAX_CONFIG_BYTES:
                msg = f"configuration file {self.path.name} is larger than 1 MiB"
                raise ConfigurationError(msg, details={"path": str(self.path)})
            text = self.path.read_text(encoding="utf-8")
        except OSError as exc:
            msg = f"cannot read configuration file {self.path}: {exc.strerror or exc}"
            raise ConfigurationError(msg, details={"path": str(self.path)}) from exc
        except UnicodeDecodeError as exc:
            msg = f"configuration file {self.path} is not valid UTF-8"
            raise ConfigurationError(msg, details={"path": str(self.path)}) from exc
        return self.loads(text)

    @staticmethod
    def loads(text: str) -> ScenarioConfig:
        values, lines, problems = ScenarioFile._parse(text)
        cfg: ScenarioConfig | None = None
        try:
            cfg = ScenarioConfig(**values)
        except PydanticValidationError as exc:
            for err in exc.errors():
                field = str(err["loc"][0]) if err.get("loc") else "?"
                problems.append(
                    Violation(field=field, reason=err["msg"], line=lines.get(field))
                )

        if cfg is not None:
            problems.extend(
                v.model_copy(update={"line": lines.get(v.field)})
                for v in collect_violations(cfg)
            )
        if problems or cfg is None:
            raise _config_error(problems)
        return cfg

    @staticmethod
    def _parse(
        text: str,
    ) -> tuple[dict[str, Any], dict[str, int], list[Violation]]:
        values: dict[str, Any] = {}
        lines: dict[str, int] = {}
        problems: list[Violation] = []

        for lineno, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                problems.append(
                    Violation(field="?", reason="expected 'key = value'", line=lineno)
                )
                continue
            key, _, raw_value = line.partition("=")
            key = key.strip()
            if key not in FIELD_NAMES:
                problems.append(Violation(field=key, reason="unknown key", line=lineno))
                continue
            if key in values:
                problems.append(
                    Violation(
                        field=key,
                        reason=f"duplicate key (first set on line {lines[key]})",
                        line=lineno,
                    )
                )
                continue
            if not raw_value.strip():
                problems.append(
                    Violation(field=key, reason="missing value", line=lineno)
                )
                continue
            try:
                values[key] = _convert_value(key, raw_value)
            except ValueError:
                problems.append(
                    Violation(
                        field=key,
                        reason=f"cannot parse {raw_value.strip()!r}",
                        line=lineno,
                    )
                )
                continue
            lines[key] = lineno

        return values, lines, problems

    @staticmethod
    def dumps(cfg: ScenarioConfig) -> str:
        """Serialize every field, in declaration order, re-loadable bit-exactly."""
        out = ["# cnspa scenario (units: W, Hz, dBm/Hz, bit/s, km, m)"]
        for name in FIELD_NAMES:
            value = getattr(cfg, name)
            if isinstance(value, tuple):
                rendered = ", ".join(repr(float(v)) for v in value)
            elif isinstance(value, float):
                rendered = repr(value)
            else:
                rendered = str(value)
            out.append(f"{name} = {rendered}")
        return "\n".join(out) + "\n"


def _config_error(problems: list[Violation]) -> ConfigurationError:
    problems = sorted(problems, key=lambda v: (v.line or 0, v.field))
    msg = "invalid scenario configuration: " + "; ".join(str(p) for p in problems)
    return ConfigurationError(
        msg, details={"violations": [p.model_dump() for p in problems]}
    )


def apply_overrides(
    cfg: ScenarioConfig, overrides: Mapping[str, Any | None]
) -> ScenarioConfig:
    """Apply non-None overrides (CLI flags) on top of ``cfg`` and re-validate."""
    update = {k: v for k, v in overrides.items() if v is not None}
    unknown = sorted(set(update) - set(FIELD_NAMES))
    if unknown:
        msg = f"unknown configuration keys: {', '.join(unknown)}"
        raise ConfigurationError(msg, details={"keys": unknown})
    if not update:
        return cfg
    try:
        merged = ScenarioConfig(**{**cfg.model_dump(), **update})
    except PydanticValidationError as exc:
        problems = [
            Violation(field=str(e["loc"][0]) if e.get("loc") else "?", reason=e["msg"])
            for e in exc.errors()
        ]
        raise _config_error(problems) from exc
    return require_valid(merged)


def resolve_scenario(
    config_path: str | Path | None, overrides: Mapping[str, Any | None] | None = None
) -> ScenarioConfig:
    """Defaults, then the file (if any), then CLI overrides."""
    cfg = ScenarioFile(config_path).load() if config_path else ScenarioConfig()
    cfg = apply_overrides(cfg, overrides or {})
    logger.debug("resolved scenario", extra={"fields": len(FIELD_NAMES)})
    return cfg
