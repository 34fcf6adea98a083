import csv
import io
import math

import pytest

from cnspa.io.drops import DROP_HEADER, render_drop_csv
from cnspa.radio.channel import realize_drop
from cnspa.radio.streams import RandomStream


def test_drop_csv_lists_cluster_then_excluded(defaults_cfg):
    cluster = realize_drop(defaults_cfg, RandomStream.for_trial(defaults_cfg.seed, 0))
    rows = list(csv.reader(io.StringIO(render_drop_csv(cluster))))

    assert tuple(rows[0]) == DROP_HEADER
    body = rows[1:]
    assert len(body) == cluster.size + len(cluster.excluded)
    assert [r[-1] for r in body[: cluster.size]] == ["1"] * cluster.size
    assert all(r[-1] == "0" for r in body[cluster.size :])
    assert [int(r[0]) for r in body[: cluster.size]] == cluster.node_ids


def test_drop_csv_values_round_trip(defaults_cfg):
    cluster = realize_drop(defaults_cfg, RandomStream.for_trial(defaults_cfg.seed, 1))
    first = next(iter(csv.DictReader(io.StringIO(render_drop_csv(cluster)))))
    node = cluster.nodes[0]
    assert float(first["amp"]) == node.amp
    assert float(first["distance_km"]) == node.distance_km
    assert float(first["pathloss_db"]) == pytest.approx(
        -10.0 * math.log10(node.pathgain_linear)
    )
