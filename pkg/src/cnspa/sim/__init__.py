"""Monte Carlo simulation over random drops."""

from cnspa.sim.montecarlo import aggregate, evaluate_cluster, run_trial, sweep

__all__ = ["aggregate", "evaluate_cluster", "run_trial", "sweep"]
