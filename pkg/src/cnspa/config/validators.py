"""Invariant checks for scenario configuration.

``validate`` never stops at the first problem: it returns every violated
invariant with the field name and a human-readable reason.
"""

from __future__ import annotations

import math

from pydantic import BaseModel, ConfigDict, Field

from cnspa.config.models import ScenarioConfig
from cnspa.exceptions import ConfigurationError

_UINT64_MAX = 2**64 - 1


class Violation(BaseModel):
    field: str
    reason: str
    line: int | None = None

    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        where = f"line {self.line}: " if self.line is not None else ""
        return f"{where}{self.field}: {self.reason}"


class ValidationResult(BaseModel):
    is_valid: bool
    violations: list[Violation] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")

    @property
    def errors(self) -> list[str]:
        return [str(v) for v in self.violations]


def _finite(cfg: ScenarioConfig, name: str, out: list[Violation]) -> bool:
    value = getattr(cfg, name)
    if not math.isfinite(value):
        out.append(Violation(field=name, reason="must be finite"))
        return False
    return True


def _positive(cfg: ScenarioConfig, name: str, out: list[Violation]) -> None:
    if _finite(cfg, name, out) and not getattr(cfg, name) > 0:
        out.append(Violation(field=name, reason="must be > 0"))


def _non_negative(cfg: ScenarioConfig, name: str, out: list[Violation]) -> None:
    if _finite(cfg, name, out) and not getattr(cfg, name) >= 0:
        out.append(Violation(field=name, reason="must be >= 0"))


def _check_path_gain(cfg: ScenarioConfig, out: list[Violation]) -> None:
    """Path loss must stay >= 0 dB over the region so the linear gain is <= 1."""
    if not (math.isfinite(cfg.min_distance_m) and cfg.min_distance_m > 0):
        return
    near = cfg.min_distance_km
    far = max(math.hypot(cfg.region_d1_km, cfg.region_d2_km) / 2.0, near)
    if not math.isfinite(far):
        return
    for d_km in (near, far):
        loss_db = cfg.pathloss_intercept_db + cfg.pathloss_slope * math.log10(d_km)
        if loss_db < 0.0:
            out.append(
                Violation(
                    field="pathloss_intercept_db",
                    reason=f"path loss is {loss_db:.3g} dB at {d_km:g} km; "
                    "the path gain would exceed 1",
                )
            )
            return


def collect_violations(cfg: ScenarioConfig) -> list[Violation]:
    out: list[Violation] = []

    for name in (
        "bandwidth_w",
        "node_density",
        "region_d1_km",
        "region_d2_km",
        "p_max",
        "min_distance_m",
    ):
        _positive(cfg, name, out)

    for name in (
        "p_idle",
        "p_base_tx",
        "p_base_rx",
        "dynamic_circuit_eps",
        "pa_dependent_a",
        "i_out",
        "rate_demand",
    ):
        _non_negative(cfg, name, out)

    finite_loss = all(
        [_finite(cfg, name, out) for name in ("pathloss_intercept_db", "pathloss_slope")]
    )
    _finite(cfg, "noise_psd", out)
    if finite_loss:
        _check_path_gain(cfg, out)

    if _finite(cfg, "eta_max", out) and not (0.0 < cfg.eta_max <= 1.0):
        out.append(Violation(field="eta_max", reason="must lie in (0, 1]"))

    if cfg.num_nodes_m < 1:
        out.append(Violation(field="num_nodes_m", reason="must be >= 1"))
    if cfg.trials < 1:
        out.append(Violation(field="trials", reason="must be >= 1"))
    if not (0 <= cfg.seed <= _UINT64_MAX):
        out.append(Violation(field="seed", reason="must be a 64-bit unsigned integer"))

    if not cfg.se_grid:
        out.append(Violation(field="se_grid", reason="must contain at least one point"))
    elif any(not math.isfinite(se) or se < 0 for se in cfg.se_grid):
        out.append(Violation(field="se_grid", reason="points must be finite and >= 0"))
    elif len(set(cfg.se_grid)) != len(cfg.se_grid):
        out.append(Violation(field="se_grid", reason="points must be distinct"))

    return out


def validate(cfg: ScenarioConfig) -> ValidationResult:
    violations = collect_violations(cfg)
    return ValidationResult(is_valid=not violations, violations=violations)


def require_valid(cfg: ScenarioConfig) -> ScenarioConfig:
    """Return ``cfg`` unchanged or raise ConfigurationError listing all violations."""
    result = validate(cfg)
    if not result.is_valid:
        msg = "invalid scenario configuration: " + "; ".join(result.errors)
        raise ConfigurationError(
            msg,
            details={"violations": [v.model_dump() for v in result.violations]},
        )
    return cfg
