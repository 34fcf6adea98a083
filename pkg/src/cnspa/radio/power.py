"""ETPA consumed-power model, its inverse, circuit terms and the canonical
total-power objective."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from cnspa.config.models import ScenarioConfig
from cnspa.exceptions import DomainError, InvalidArgumentError

# Relative slack when checking p_tx against the PA range; values produced by
# the inverse can overshoot the boundary by a rounding error.
_RANGE_RTOL = 1e-12


@dataclass(frozen=True)
class PaModel:
    """Envelope-tracking PA: consumed = (p + a*p_max) / ((1+a)*eta_max).

    ``a = 0`` is the ideal PA.
    """

    a: float
    eta_max: float
    p_max: float

    def __post_init__(self) -> None:
        if not (self.a >= 0.0):
            raise InvalidArgumentError("a must be >= 0", details={"a": self.a})
        if not (0.0 < self.eta_max <= 1.0):
            raise InvalidArgumentError(
                "eta_max must lie in (0, 1]", details={"eta_max": self.eta_max}
            )
        if not (self.p_max > 0.0):
            raise InvalidArgumentError(
                "p_max must be > 0", details={"p_max": self.p_max}
            )

    @classmethod
    def from_scenario(cls, cfg: ScenarioConfig) -> PaModel:
        return cls(a=cfg.pa_dependent_a, eta_max=cfg.eta_max, p_max=cfg.p_max)

    @property
    def slope(self) -> float:
        """d(consumed)/d(p_tx) = 1 / ((1+a) * eta_max)."""
        return 1.0 / ((1.0 + self.a) * self.eta_max)

    @property
    def floor(self) -> float:
        """Consumed power at zero output: a*p_max / ((1+a)*eta_max)."""
        return self.a * self.p_max * self.slope

    @property
    def tx_cap(self) -> float:
        """Largest transmit power whose consumed power stays within p_max."""
        return etpa_inverse(self.p_max, self)


@dataclass(frozen=True)
class CircuitModel:
    p_base_tx: float
    p_base_rx: float
    p_idle: float
    eps: float

    def __post_init__(self) -> None:
        for name in ("p_base_tx", "p_base_rx", "p_idle", "eps"):
            value = getattr(self, name)
            if not (value >= 0.0):
                msg = f"{name} must be >= 0"
                raise InvalidArgumentError(msg, details={name: value})

    @classmethod
    def from_scenario(cls, cfg: ScenarioConfig) -> CircuitModel:
        return cls(
            p_base_tx=cfg.p_base_tx,
            p_base_rx=cfg.p_base_rx,
            p_idle=cfg.p_idle,
            eps=cfg.dynamic_circuit_eps,
        )

    def receive_power(self, r_dl: float) -> float:
        """P_rx = eps * R_dl + P_base,rx."""
        return self.eps * r_dl + self.p_base_rx

    def static_power(self, m_bar: int, m_total: int, r_dl: float) -> float:
        """beta: M_bar*P_base,tx + (M - M_bar)*P_idle + eps*R_dl + P_rx."""
        return (
            m_bar * self.p_base_tx
            + (m_total - m_bar) * self.p_idle
            + self.eps * r_dl
            + self.receive_power(r_dl)
        )


def uniform_pa(pa: PaModel | Sequence[PaModel], n: int) -> list[PaModel]:
    """Broadcast a single PA model to ``n`` nodes, or check a per-node list."""
    if isinstance(pa, PaModel):
        return [pa] * n
    pas = list(pa)
    if len(pas) < n:
        msg = f"expected at least {n} PA models, got {len(pas)}"
        raise InvalidArgumentError(msg, details={"expected": n, "got": len(pas)})
    return pas[:n]


def etpa_consumed(p_tx: float, pa: PaModel) -> float:
    """Consumed power of one node transmitting ``p_tx`` watts."""
    upper = pa.p_max * (1.0 + _RANGE_RTOL)
    if not (0.0 <= p_tx <= upper):
        msg = f"transmit power {p_tx!r} W outside [0, {pa.p_max!r}] W"
        raise DomainError(msg, details={"p_tx": p_tx, "p_max": pa.p_max})
    return (p_tx + pa.a * pa.p_max) / ((1.0 + pa.a) * pa.eta_max)


def etpa_inverse(p_consumed: float, pa: PaModel) -> float:
    """Transmit power whose consumed power equals ``p_consumed``."""
    floor = pa.floor
    if p_consumed < floor * (1.0 - _RANGE_RTOL):
        msg = f"consumed power {p_consumed!r} W below the PA floor {floor!r} W"
        raise DomainError(msg, details={"p_consumed": p_consumed, "floor": floor})
    return max(0.0, p_consumed * (1.0 + pa.a) * pa.eta_max - pa.a * pa.p_max)


def total_power(
    powers: Sequence[float],
    m_bar: int,
    cfg: ScenarioConfig,
    r_dl: float,
    pa: PaModel | Sequence[PaModel] | None = None,
) -> float:
    """Total consumed power with ``m_bar`` active nodes.

    sum_m Psi(P_m) + m_bar*P_base,tx + (M - m_bar)*P_idle + eps*R_dl + P_rx.
    ``powers`` are index-aligned with the active prefix.
    """
    if len(powers) != m_bar:
        msg = f"expected {m_bar} powers, got {len(powers)}"
        raise InvalidArgumentError(msg, details={"m_bar": m_bar, "got": len(powers)})
    if not (0 <= m_bar <= cfg.num_nodes_m):
        msg = f"m_bar must lie in [0, {cfg.num_nodes_m}], got {m_bar}"
        raise InvalidArgumentError(msg, details={"m_bar": m_bar})

    pas = uniform_pa(pa if pa is not None else PaModel.from_scenario(cfg), m_bar)
    circuit = CircuitModel.from_scenario(cfg)
    amplifier = sum(
        etpa_consumed(p, model) for p, model in zip(powers, pas, strict=True)
    )
    return amplifier + circuit.static_power(m_bar, cfg.num_nodes_m, r_dl)
