"""Data models shared across the radio, optimizer and simulation layers."""

from cnspa.models.channel import Cluster, NodeChannel, priority_key
from cnspa.models.solution import (
    SCHEME_ORDER,
    CooperationSolution,
    Scheme,
    SolutionStatus,
)
from cnspa.models.sweep import SweepPoint, SweepResult, TrialRecord

__all__ = [
    "SCHEME_ORDER",
    "Cluster",
    "CooperationSolution",
    "NodeChannel",
    "Scheme",
    "SolutionStatus",
    "SweepPoint",
    "SweepResult",
    "TrialRecord",
    "priority_key",
]
