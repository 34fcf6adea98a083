"""Channel-side data models: single node channels and the cooperative cluster."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator


class NodeChannel(BaseModel):
    """One transmission node as seen from the receiver at the origin.

    Only the amplitude |h_m| is kept: coherent phase compensation cancels
    every phase before the rate is evaluated.
    """

    model_config = ConfigDict(frozen=True)

    node_id: int
    x_km: float
    y_km: float
    distance_km: float = Field(gt=0)
    pathgain_linear: float = Field(gt=0, le=1)
    fading_mag: float = Field(ge=0)
    amp: float = Field(ge=0)


def priority_key(node: NodeChannel) -> tuple[float, int]:
    """Descending amplitude, ties broken by the lower node id."""
    return (-node.amp, node.node_id)


class Cluster(BaseModel):
    """The M cooperating nodes.

    Clusters produced by a drop or by ``from_nodes`` are sorted by
    non-increasing amplitude (ties by node id); a hand-built cluster may be
    in any order until it passes through ``sort_by_priority``.

    ``excluded`` keeps the other nodes of the drop so membership can be
    audited; it never enters the optimizer.
    """

    model_config = ConfigDict(frozen=True)

    nodes: tuple[NodeChannel, ...]
    excluded: tuple[NodeChannel, ...] = ()

    @model_validator(mode="after")
    def _check_non_empty(self):
        if not self.nodes:
            msg = "a cluster needs at least one node"
            raise ValueError(msg)
        return self

    @property
    def is_sorted(self) -> bool:
        keys = [priority_key(n) for n in self.nodes]
        return keys == sorted(keys)

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def amps(self) -> list[float]:
        return [n.amp for n in self.nodes]

    @property
    def node_ids(self) -> list[int]:
        return [n.node_id for n in self.nodes]

    def prefix(self, m_bar: int) -> tuple[NodeChannel, ...]:
        return self.nodes[:m_bar]

    @classmethod
    def from_nodes(
        cls, nodes: list[NodeChannel] | tuple[NodeChannel, ...], **kwargs
    ) -> Cluster:
        """Build a cluster from nodes in any order."""
        return cls(nodes=tuple(sorted(nodes, key=priority_key)), **kwargs)

    @classmethod
    def from_amps(cls, amps: list[float]) -> Cluster:
        """Synthetic cluster with unit path gain, ids in the given order.

        Used by tests and replayed instances where geometry is irrelevant.
        """
        nodes = [
            NodeChannel(
                node_id=i,
                x_km=0.0,
                y_km=0.0,
                distance_km=1.0,
                pathgain_linear=1.0,
                fading_mag=float(a),
                amp=float(a),
            )
            for i, a in enumerate(amps)
        ]
        return cls.from_nodes(nodes)
