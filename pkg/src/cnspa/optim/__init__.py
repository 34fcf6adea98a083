"""Node selection, power allocation, comparison schemes and oracles."""

from cnspa.optim.baselines import (
    BASELINES,
    all_nodes_pa,
    all_nodes_uniform,
    cns_uniform,
    single_node,
)
from cnspa.optim.optimizer import (
    GammaTable,
    allocate_power,
    cns_pa,
    exhaustive_prefix_scan,
    join_criterion,
    p2_objective,
    sort_by_priority,
)
from cnspa.optim.oracle import brute_force_best_subset, numeric_allocate

__all__ = [
    "BASELINES",
    "GammaTable",
    "all_nodes_pa",
    "all_nodes_uniform",
    "allocate_power",
    "brute_force_best_subset",
    "cns_pa",
    "cns_uniform",
    "exhaustive_prefix_scan",
    "join_criterion",
    "numeric_allocate",
    "p2_objective",
    "single_node",
    "sort_by_priority",
]
