"""
Partition GSEMO - set-function maximization under partition matroid constraints.

A Python library and CLI that:
- Runs GSEMO (bi-objective evolutionary search) and a deterministic GREEDY baseline
- Brute-forces the structural quantities behind the approximation guarantees
- Generates seeded random max-cut instances and runs the comparison experiments
- Summarises results with Wilcoxon signed-rank tests
"""

__version__ = "0.1.0"
