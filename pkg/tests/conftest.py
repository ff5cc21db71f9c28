"""Shared fixtures."""

import numpy as np
import pytest

from partition_gsemo.core.models import PartitionMatroid
from partition_gsemo.instances.bundle import InstanceBundle, save_bundle
from partition_gsemo.instances.models import InstanceMeta
from partition_gsemo.objectives.graph import WeightedGraph
from partition_gsemo.objectives.max_cut import MaxCutFunction
from partition_gsemo.objectives.modular import ModularFunction


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run full-scale replication checks"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def g3_graph():
    """Path 0 - 1 - 2 with weights 0.5 and 0.3."""
    return WeightedGraph(3, [(0, 1, 0.5), (1, 2, 0.3)])


@pytest.fixture
def g3_cut(g3_graph):
    return MaxCutFunction(g3_graph)


@pytest.fixture
def g3_matroid():
    """Blocks {0, 1} and {2}, both with threshold 1."""
    return PartitionMatroid(assignment=(0, 0, 1), thresholds=(1, 1))


@pytest.fixture
def g3_bundle_dir(tmp_path, g3_cut, g3_matroid):
    directory = tmp_path / "g3"
    meta = InstanceMeta(instance_id="g3", objective="max_cut", n=3)
    save_bundle(InstanceBundle(objective=g3_cut, constraint=g3_matroid, meta=meta), directory)
    return directory


@pytest.fixture
def modular4():
    return ModularFunction([1.0, 2.0, 0.5, 3.0])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
