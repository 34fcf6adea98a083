"""Channel, power-amplifier and rate models."""

from cnspa.radio.channel import (
    draw_fading,
    draw_ppp,
    path_loss_db,
    path_loss_linear,
    realize_drop,
)
from cnspa.radio.power import (
    CircuitModel,
    PaModel,
    etpa_consumed,
    etpa_inverse,
    total_power,
)
from cnspa.radio.rate import RateContext, coherent_rate, is_feasible, max_rate
from cnspa.radio.streams import RandomStream, StreamPurpose

__all__ = [
    "CircuitModel",
    "PaModel",
    "RandomStream",
    "RateContext",
    "StreamPurpose",
    "coherent_rate",
    "draw_fading",
    "draw_ppp",
    "etpa_consumed",
    "etpa_inverse",
    "is_feasible",
    "max_rate",
    "path_loss_db",
    "path_loss_linear",
    "realize_drop",
    "total_power",
]
