"""YAML instance files: a scenario, a demand and the exact cluster.

``verify`` writes one when a property fails; ``run --instance`` reads it
back and evaluates every scheme on the stored cluster.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from cnspa.config.models import ScenarioConfig
from cnspa.config.validators import require_valid
from cnspa.exceptions import ConfigurationError
from cnspa.io.atomic import atomic_write_text
from cnspa.models.channel import Cluster, NodeChannel

INSTANCE_FORMAT_VERSION = 1


@dataclass(frozen=True)
class InstanceFile:
    scenario: ScenarioConfig
    cluster: Cluster
    se_bps_hz: float
    rate_demand: float
    instance_id: int = 0
    property_name: str | None = None
    failure: str | None = None


def dumps_instance(instance: InstanceFile) -> str:
    payload: dict[str, Any] = {
        "version": INSTANCE_FORMAT_VERSION,
        "instance_id": instance.instance_id,
        "property": instance.property_name,
        "failure": instance.failure,
        "se_bps_hz": instance.se_bps_hz,
        "rate_demand": instance.rate_demand,
        "scenario": instance.scenario.model_dump(mode="json"),
        "nodes": [n.model_dump(mode="json") for n in instance.cluster.nodes],
    }
    return yaml.safe_dump(payload, sort_keys=False)


def write_instance(path: str | Path, instance: InstanceFile) -> None:
    atomic_write_text(path, dumps_instance(instance))


def loads_instance(text: str) -> InstanceFile:
    try:
        payload = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        msg = f"instance file is not valid YAML: {exc}"
        raise ConfigurationError(msg) from exc
    if not isinstance(payload, dict):
        msg = "instance file must contain a mapping"
        raise ConfigurationError(msg)
    version = payload.get("version")
    if version != INSTANCE_FORMAT_VERSION:
        msg = f"unsupported instance format version: {version!r}"
        raise ConfigurationError(msg, details={"version": version})

    try:
        scenario = ScenarioConfig.model_validate(payload["scenario"])
        nodes = tuple(NodeChannel.model_validate(n) for n in payload["nodes"])
        cluster = Cluster(nodes=nodes)
        se = float(payload["se_bps_hz"])
        rate = float(payload["rate_demand"])
    except (KeyError, TypeError, ValueError, ValidationError) as exc:
        msg = f"malformed instance file: {exc}"
        raise ConfigurationError(msg) from exc
    require_valid(scenario)
    if scenario.num_nodes_m != cluster.size:
        scenario = scenario.model_copy(update={"num_nodes_m": cluster.size})

    return InstanceFile(
        scenario=scenario,
        cluster=cluster,
        se_bps_hz=se,
        rate_demand=rate,
        instance_id=int(payload.get("instance_id") or 0),
        property_name=payload.get("property"),
        failure=payload.get("failure"),
    )


def load_instance(path: str | Path) -> InstanceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        msg = f"cannot read instance file {Path(path).name}: {exc}"
        raise ConfigurationError(msg) from exc
    return loads_instance(text)
