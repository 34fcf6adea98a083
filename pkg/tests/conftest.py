"""Shared fixtures.

The toy scenario keeps the arithmetic checkable by hand: W = 1 MHz and
N0 = -30 dBm/Hz give a noise power of exactly 1 W, the PA is ideal with
eta_max = 0.5, and the dynamic circuit term is off. With amplitudes
(2, 1, 1) and R = 2 Mbit/s (SNR target 3) the optimum activates two nodes.
"""

import pytest

from cnspa.config.models import ScenarioConfig, default_scenario
from cnspa.models.channel import Cluster
from cnspa.radio.power import PaModel
from cnspa.radio.rate import RateContext

TOY_RATE = 2e6


@pytest.fixture
def defaults_cfg() -> ScenarioConfig:
    return default_scenario()


@pytest.fixture
def toy_cfg() -> ScenarioConfig:
    return ScenarioConfig(
        bandwidth_w=1e6,
        noise_psd=-30.0,
        num_nodes_m=3,
        p_max=100.0,
        eta_max=0.5,
        pa_dependent_a=0.0,
        p_base_tx=0.3,
        p_idle=0.05,
        p_base_rx=0.1,
        dynamic_circuit_eps=0.0,
        rate_demand=TOY_RATE,
        se_grid=(1.0, 2.0, 3.0),
        trials=4,
    )


@pytest.fixture
def toy_cluster() -> Cluster:
    # ids 0..2 in the given order; sorted by amplitude this is (1, 0, 2)
    return Cluster.from_amps([1.0, 2.0, 1.0])


@pytest.fixture
def toy_ctx(toy_cfg) -> RateContext:
    return RateContext.from_scenario(toy_cfg)


@pytest.fixture
def toy_pa(toy_cfg) -> PaModel:
    return PaModel.from_scenario(toy_cfg)


@pytest.fixture
def small_cfg(defaults_cfg) -> ScenarioConfig:
    """Default physics with an 8-node cluster and a short run."""
    return defaults_cfg.model_copy(update={"num_nodes_m": 8, "trials": 6, "se_grid": (1.0, 4.0, 8.0)})
