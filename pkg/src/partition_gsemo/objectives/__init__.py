"""Set-function oracles: max-cut, modular and weighted coverage."""

from partition_gsemo.objectives.base import SetFunction, marginal_gain, masks_to_bits
from partition_gsemo.objectives.coverage import CoverageFunction, random_coverage
from partition_gsemo.objectives.graph import WeightedGraph, parse_graph, read_graph, write_graph
from partition_gsemo.objectives.max_cut import MaxCutFunction, cut_value
from partition_gsemo.objectives.modular import ModularFunction

__all__ = [
    "CoverageFunction",
    "MaxCutFunction",
    "ModularFunction",
    "SetFunction",
    "WeightedGraph",
    "cut_value",
    "marginal_gain",
    "masks_to_bits",
    "parse_graph",
    "random_coverage",
    "read_graph",
    "write_graph",
]
