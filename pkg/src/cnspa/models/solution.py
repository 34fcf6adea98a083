from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class Scheme(str, Enum):
    """Scheme labels, exactly as written to CSV output."""

    CNS_PA = "cns_pa"
    ALL_UNIFORM = "all_uniform"
    ALL_PA = "all_pa"
    SINGLE = "single"
    CNS_UNIFORM = "cns_uniform"


SCHEME_ORDER: tuple[Scheme, ...] = (
    Scheme.CNS_PA,
    Scheme.ALL_UNIFORM,
    Scheme.ALL_PA,
    Scheme.SINGLE,
    Scheme.CNS_UNIFORM,
)


class SolutionStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    CAP_ADJUSTED = "cap-adjusted"


class CooperationSolution(BaseModel):
    """Active set, transmit powers and the resulting energy efficiency.

    ``powers`` are index-aligned with the sorted cluster prefix; for an
    infeasible solution they are empty and the power/EE figures are None.
    """

    model_config = ConfigDict(frozen=True)

    scheme: Scheme
    status: SolutionStatus
    rate_demand: float = Field(ge=0)
    active_count: int = Field(ge=0)
    active_node_ids: tuple[int, ...] = ()
    powers: tuple[float, ...] = ()
    total_power: float | None = None
    energy_efficiency: float | None = None
    rate_achieved: float = 0.0
    criterion_evaluations: int = 0

    @property
    def feasible(self) -> bool:
        return self.status is not SolutionStatus.INFEASIBLE

    @property
    def ee_mbps_per_w(self) -> float | None:
        if self.energy_efficiency is None:
            return None
        return self.energy_efficiency / 1e6

    @classmethod
    def infeasible(
        cls, scheme: Scheme, r_dl: float, *, criterion_evaluations: int = 0
    ) -> CooperationSolution:
        return cls(
            scheme=scheme,
            status=SolutionStatus.INFEASIBLE,
            rate_demand=r_dl,
            active_count=0,
            criterion_evaluations=criterion_evaluations,
        )
