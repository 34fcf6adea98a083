from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from cnspa.config import defaults


class PaKind(str, Enum):
    ETPA = "etpa"
    IPA = "ipa"


class ScenarioConfig(BaseModel):
    """Physical, PA, circuit, geometry and experiment parameters.

    Fields carry types only; range invariants are checked by
    ``cnspa.config.validators.validate`` so that every violation can be
    reported at once. Instances are immutable.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    bandwidth_w: float = defaults.BANDWIDTH_HZ
    noise_psd: float = defaults.NOISE_PSD_DBM_PER_HZ
    num_nodes_m: int = defaults.NUM_NODES
    pathloss_intercept_db: float = defaults.PATHLOSS_INTERCEPT_DB
    pathloss_slope: float = defaults.PATHLOSS_SLOPE_DB
    node_density: float = defaults.NODE_DENSITY_PER_KM2
    region_d1_km: float = defaults.REGION_D1_KM
    region_d2_km: float = defaults.REGION_D2_KM
    p_idle: float = defaults.P_IDLE_W
    p_base_tx: float = defaults.P_BASE_W
    p_base_rx: float = defaults.P_BASE_W
    dynamic_circuit_eps: float = defaults.DYNAMIC_CIRCUIT_EPS
    p_max: float = defaults.P_MAX_W
    eta_max: float = defaults.ETA_MAX
    pa_dependent_a: float = defaults.ETPA_A
    i_out: float = defaults.I_OUT_W
    rate_demand: float = defaults.DEFAULT_SE * defaults.BANDWIDTH_HZ
    se_grid: tuple[float, ...] = Field(default=defaults.DEFAULT_SE_GRID)
    trials: int = defaults.DEFAULT_TRIALS
    seed: int = defaults.DEFAULT_SEED
    min_distance_m: float = defaults.MIN_DISTANCE_M

    @field_validator("se_grid", mode="before")
    @classmethod
    def _split_grid(cls, v):
        if isinstance(v, str):
            return tuple(float(part) for part in v.split(",") if part.strip())
        return v

    @property
    def noise_power_w(self) -> float:
        from cnspa.units import noise_power

        return noise_power(self.noise_psd, self.bandwidth_w)

    @property
    def interference_plus_noise(self) -> float:
        return self.i_out + self.noise_power_w

    @property
    def min_distance_km(self) -> float:
        return self.min_distance_m / 1000.0

    @property
    def pa_kind(self) -> PaKind:
        return PaKind.IPA if self.pa_dependent_a == 0.0 else PaKind.ETPA

    def with_pa(self, kind: PaKind | str) -> ScenarioConfig:
        """Return a copy using the ideal PA (a=0) or the table ETPA value."""
        kind = PaKind(kind)
        if kind is PaKind.IPA:
            return self.model_copy(update={"pa_dependent_a": 0.0})
        if self.pa_dependent_a == 0.0:
            return self.model_copy(update={"pa_dependent_a": defaults.ETPA_A})
        return self

    def rate_for_se(self, se_bps_hz: float) -> float:
        """Spectral efficiency (bit/s/Hz) to absolute rate (bit/s)."""
        return se_bps_hz * self.bandwidth_w


def default_scenario() -> ScenarioConfig:
    """The canonical parameter set: W=10 MHz, N0=-174 dBm/Hz, M=16,
    path loss 103.8+21 log10(d[km]) dB, 50 nodes/km^2 over 1x1 km,
    P_idle=10 mW, P_base=50 mW, eps=2 mW/Mbps, P_max=46 dBm,
    eta_max=0.35, a=0.0082, I_out=0 W, 10 m distance floor."""
    return ScenarioConfig()


table1_defaults = default_scenario
