"""Per-node dump of one drop."""

from __future__ import annotations

import math
from pathlib import Path

from cnspa.io.atomic import atomic_write_csv, render_csv
from cnspa.io.numbers import format_float
from cnspa.models.channel import Cluster

DROP_HEADER = (
    "node_id",
    "x_km",
    "y_km",
    "distance_km",
    "pathloss_db",
    "fading_mag",
    "amp",
    "in_cluster",
)


def _rows(cluster: Cluster) -> list[list[str]]:
    rows = []
    for members, flag in ((cluster.nodes, "1"), (cluster.excluded, "0")):
        for n in members:
            rows.append(
                [
                    str(n.node_id),
                    format_float(n.x_km),
                    format_float(n.y_km),
                    format_float(n.distance_km),
                    format_float(-10.0 * math.log10(n.pathgain_linear)),
                    format_float(n.fading_mag),
                    format_float(n.amp),
                    flag,
                ]
            )
    return rows


def render_drop_csv(cluster: Cluster) -> str:
    return render_csv(DROP_HEADER, _rows(cluster))


def write_drop_csv(path: str | Path, cluster: Cluster) -> None:
    atomic_write_csv(path, DROP_HEADER, _rows(cluster))
