"""
Undirected weighted graphs backing the max-cut oracle, plus their text format.

File format:
    n m
    u v w        (m lines, 0-based, u < v, w a decimal literal)

Weights are written with repr(), which round-trips double precision exactly.
"""

import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from partition_gsemo.errors import InstanceParseError, InstanceValidationError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, float]


class WeightedGraph:
    """
    Immutable undirected graph on vertices 0..n-1 with non-negative edge weights.

    Invariants: u < v for every edge, no self-loops, no duplicate pairs,
    weights >= 0.
    """

    def __init__(self, n: int, edges: Sequence[Edge]):
        if n < 1:
            raise InstanceValidationError(f"Graph needs at least one vertex, got n = {n}")

        seen = set()
        for index, (u, v, w) in enumerate(edges):
            if u == v:
                raise InstanceValidationError(f"Edge {index} is a self-loop on vertex {u}")
            if not u < v:
                raise InstanceValidationError(f"Edge {index} ({u}, {v}) must satisfy u < v")
            if not 0 <= u < n or not 0 <= v < n:
                raise InstanceValidationError(f"Edge {index} ({u}, {v}) outside 0..{n - 1}")
            if not w >= 0:
                raise InstanceValidationError(f"Edge {index} ({u}, {v}) has negative weight {w}")
            if (u, v) in seen:
                raise InstanceValidationError(f"Edge {index} duplicates pair ({u}, {v})")
            seen.add((u, v))

        self._n = int(n)
        self._u = np.array([e[0] for e in edges], dtype=np.int64)
        self._v = np.array([e[1] for e in edges], dtype=np.int64)
        self._w = np.array([e[2] for e in edges], dtype=np.float64)
        for array in (self._u, self._v, self._w):
            array.setflags(write=False)

        adjacency: List[List[Tuple[int, float]]] = [[] for _ in range(self._n)]
        for u, v, w in edges:
            adjacency[u].append((int(v), float(w)))
            adjacency[v].append((int(u), float(w)))
        self._adjacency = tuple(tuple(neighbors) for neighbors in adjacency)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return int(self._u.shape[0])

    @property
    def edges(self) -> List[Edge]:
        return [(int(u), int(v), float(w)) for u, v, w in zip(self._u, self._v, self._w)]

    @property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, float], ...], ...]:
        """Per-vertex tuple of (neighbor, weight)."""
        return self._adjacency

    @property
    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Read-only (u, v, w) arrays."""
        return self._u, self._v, self._w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._u, other._u)
            and np.array_equal(self._v, other._v)
            and np.array_equal(self._w, other._w)
        )

    def __hash__(self) -> int:
        return hash((self._n, self._u.tobytes(), self._v.tobytes(), self._w.tobytes()))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self._n}, m={self.m})"


def format_graph(graph: WeightedGraph) -> str:
    """Serialise a graph to the text format."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v} {w!r}" for u, v, w in graph.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str, path: Union[str, Path, None] = None) -> WeightedGraph:
    """
    Parse the text format.

    Raises:
        InstanceParseError: with line/field diagnostics on malformed input,
            self-loops, duplicates, u >= v or negative weights
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise InstanceParseError("empty graph file", path=path, line=1)

    header = lines[0].split()
    if len(header) != 2:
        raise InstanceParseError("header must be 'n m'", path=path, line=1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InstanceParseError("header values must be integers", path=path, line=1)
    if n < 1 or m < 0:
        raise InstanceParseError(f"invalid header n = {n}, m = {m}", path=path, line=1)

    body = [(number, line) for number, line in enumerate(lines[1:], start=2) if line.strip()]
    if len(body) != m:
        raise InstanceParseError(
            f"header declares {m} edges but {len(body)} edge lines follow", path=path
        )

    edges: List[Edge] = []
    seen = set()
    for number, line in body:
        fields = line.split()
        if len(fields) != 3:
            raise InstanceParseError("edge line must be 'u v w'", path=path, line=number)
        try:
            u = int(fields[0])
        except ValueError:
            raise InstanceParseError("not an integer", path=path, line=number, field="u")
        try:
            v = int(fields[1])
        except ValueError:
            raise InstanceParseError("not an integer", path=path, line=number, field="v")
        try:
            w = float(fields[2])
        except ValueError:
            raise InstanceParseError("not a number", path=path, line=number, field="w")

        if u == v:
            raise InstanceParseError(f"self-loop on vertex {u}", path=path, line=number)
        if u > v:
            raise InstanceParseError(f"expected u < v, got {u} >= {v}", path=path, line=number)
        for name, vertex in (("u", u), ("v", v)):
            if not 0 <= vertex < n:
                raise InstanceParseError(
                    f"vertex outside 0..{n - 1}", path=path, line=number, field=name
                )
        if not w >= 0 or not np.isfinite(w):
            raise InstanceParseError(
                f"weight must be finite and non-negative, got {fields[2]}",
                path=path,
                line=number,
                field="w",
            )
        if (u, v) in seen:
            raise InstanceParseError(f"duplicate edge ({u}, {v})", path=path, line=number)
        seen.add((u, v))
        edges.append((u, v, w))

    return WeightedGraph(n, edges)


def write_graph(graph: WeightedGraph, path: Path):
    path.write_text(format_graph(graph), encoding="utf-8")
    logger.debug(f"Wrote graph n={graph.n} m={graph.m} to {path}")


def read_graph(path: Path) -> WeightedGraph:
    return parse_graph(path.read_text(encoding="utf-8"), path=path)
