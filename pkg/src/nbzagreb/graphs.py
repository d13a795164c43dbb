"""Immutable simple graphs: construction, traversal, text serialization.

Vertices are dense 0-based integers.  A :class:`Graph` is canonical after
construction (sorted neighbour lists, lexicographically sorted edge list)
and value-semantic: two graphs compare equal iff they have the same order
and the same edge set.  All operations here are pure, so graphs can be
shared freely between threads.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable


class GraphError(ValueError):
    """Base class for graph construction and parsing errors."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered vertex pair appears twice in an edge list."""


class VertexOutOfRangeError(GraphError):
    """A vertex id falls outside ``0 .. order-1``."""


class EdgeListSyntaxError(GraphError):
    """Malformed edge-list text.  ``line`` is the offending 1-based line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """An immutable undirected simple graph.

    ``Graph(order, edge_pairs)`` validates every pair: loops, duplicate
    pairs (in either orientation) and out-of-range vertex ids are rejected
    with an error naming the offending pair.
    """

    __slots__ = ("_order", "_adj", "_edges")

    def __init__(self, order: int, edge_pairs: Iterable[tuple[int, int]] = ()):
        if order < 1:
            raise GraphError(f"order must be >= 1, got {order}")
        adj: list[list[int]] = [[] for _ in range(order)]
        seen: set[tuple[int, int]] = set()
        for u, v in edge_pairs:
            if not (0 <= u < order and 0 <= v < order):
                raise VertexOutOfRangeError(
                    f"edge ({u}, {v}) has a vertex outside 0..{order - 1}"
                )
            if u == v:
                raise LoopEdgeError(f"edge ({u}, {v}) is a self-loop")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"edge ({u}, {v}) appears more than once")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(ns)) for ns in adj))
        object.__setattr__(self, "_edges", tuple(sorted(seen)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def order(self) -> int:
        """Number of vertices."""
        return self._order

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbour tuples."""
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self._adj)

    def neighbor_degree_sum(self, v: int) -> int:
        """Sum of the degrees of the neighbours of ``v``."""
        self._check_vertex(v)
        return sum(len(self._adj[u]) for u in self._adj[v])

    def neighbor_degree_sums(self) -> tuple[int, ...]:
        return tuple(
            sum(len(self._adj[u]) for u in ns) for ns in self._adj
        )

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._order):
            raise VertexOutOfRangeError(
                f"vertex {v} outside 0..{self._order - 1}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._order, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self.size})"


def build_graph(order: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    """Construct a canonical :class:`Graph`; alias for the constructor."""
    return Graph(order, edge_pairs)


# ---------------------------------------------------------------------------
# Elementary families

def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    """P_n: vertices 0..n-1 joined consecutively."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n for n >= 3."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    """K_n."""
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to every other vertex."""
    return Graph(n, [(0, i) for i in range(1, n)])


# ---------------------------------------------------------------------------
# Distances

def distance_matrix(G: Graph) -> list[list[float]]:
    """All-pairs hop distances by BFS; ``math.inf`` marks unreachable pairs."""
    n = G.order
    adj = G.adjacency
    matrix: list[list[float]] = []
    for s in range(n):
        dist: list[float] = [math.inf] * n
        dist[s] = 0
        queue = [s]
        for v in queue:
            dv = dist[v]
            for u in adj[v]:
                if dist[u] == math.inf:
                    dist[u] = dv + 1
                    queue.append(u)
        matrix.append(dist)
    return matrix


# ---------------------------------------------------------------------------
# Edge-list text format
#
#   # comment lines are allowed anywhere
#   n m
#   u v          (exactly m lines, 0 <= u,v < n)

def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a canonical :class:`Graph`."""
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListSyntaxError(f"expected two fields, got {len(fields)}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListSyntaxError(f"non-integer field in {line!r}", lineno) from None
        if header is None:
            header = (a, b)
            header_line = lineno
            if a < 1 or b < 0:
                raise EdgeListSyntaxError(f"bad header {line!r}", lineno)
        else:
            if len(edges) >= header[1]:
                raise EdgeListSyntaxError(
                    f"more than {header[1]} edge lines", lineno
                )
            edges.append((a, b))
    if header is None:
        raise EdgeListSyntaxError("missing 'n m' header", last_line or 1)
    if len(edges) != header[1]:
        raise EdgeListSyntaxError(
            f"expected {header[1]} edge lines, found {len(edges)}", last_line or header_line
        )
    return Graph(header[0], edges)


def serialize_edge_list(G: Graph) -> str:
    """Serialize ``G``; ``parse_edge_list`` inverts this exactly."""
    lines = [f"{G.order} {G.size}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Seeded random graphs

def random_graph(order: int, edge_probability: float, seed: int) -> Graph:
    """Erdos-Renyi style G(n, p), reproducible by construction.

    The generator is fixed: a Mersenne Twister seeded with ``seed`` draws
    one uniform variate per vertex pair, pairs enumerated in lexicographic
    order ``(0,1), (0,2), ..., (n-2,n-1)``; the pair becomes an edge iff
    the variate is ``< edge_probability``.  Identical arguments therefore
    always produce the identical graph.
    """
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if rng.random() < edge_probability
    ]
    return Graph(order, edges)
