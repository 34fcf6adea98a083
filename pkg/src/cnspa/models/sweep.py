from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cnspa.models.solution import CooperationSolution, Scheme


class TrialRecord(BaseModel):
    """All schemes evaluated on one drop at one rate demand."""

    model_config = ConfigDict(frozen=True)

    trial_id: int = Field(ge=0)
    rate_demand: float
    solutions: dict[Scheme, CooperationSolution]
    min_amp: float
    max_amp: float

    def solution(self, scheme: Scheme) -> CooperationSolution:
        return self.solutions[scheme]

    @property
    def reference_feasible(self) -> bool:
        return self.solutions[Scheme.CNS_PA].feasible


class SweepPoint(BaseModel):
    """Aggregated statistics for one (spectral efficiency, scheme) pair."""

    model_config = ConfigDict(frozen=True)

    se_bps_hz: float
    scheme: Scheme
    mean_ee: float
    stderr_ee: float
    mean_active_nodes: float
    mean_total_power: float
    feasible_fraction: float = Field(ge=0.0, le=1.0)
    cap_adjusted_fraction: float = Field(default=0.0, ge=0.0, le=1.0)
    trials: int = Field(ge=1)

    @property
    def mean_ee_mbps_per_w(self) -> float:
        return self.mean_ee / 1e6

    @property
    def stderr_ee_mbps_per_w(self) -> float:
        return self.stderr_ee / 1e6


class SweepResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: tuple[SweepPoint, ...]
    warnings: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _unique_points(self):
        keys = [(p.se_bps_hz, p.scheme) for p in self.points]
        if len(keys) != len(set(keys)):
            msg = "duplicate (se, scheme) point in sweep result"
            raise ValueError(msg)
        return self

    def series(self, scheme: Scheme) -> list[SweepPoint]:
        """Points of one scheme in ascending spectral efficiency."""
        return sorted(
            (p for p in self.points if p.scheme is scheme), key=lambda p: p.se_bps_hz
        )

    def point(self, se_bps_hz: float, scheme: Scheme) -> SweepPoint | None:
        for p in self.points:
            if p.se_bps_hz == se_bps_hz and p.scheme is scheme:
                return p
        return None
