"""Cartesian, tensor and wreath graph products.

Every product of factors ``G1`` (order n1) and ``G2`` (order n2) lives on
vertex set ``{0 .. n1*n2 - 1}`` with the fixed encoding

    (u, v)  ->  u * n2 + v

which is part of the public contract so callers can address individual
product vertices.  Adjacency rules:

* cartesian:  (u1,v1) ~ (u2,v2)  iff  u1 == u2 and v1v2 is an edge of G2,
  or v1 == v2 and u1u2 is an edge of G1.
* tensor:     (u1,v1) ~ (u2,v2)  iff  u1u2 is an edge of G1 and v1v2 is an
  edge of G2.
* wreath (composition, G1[G2]):  (u1,v1) ~ (u2,v2)  iff  u1u2 is an edge
  of G1, or u1 == u2 and v1v2 is an edge of G2.  Not commutative.

Each product kind obeys a per-vertex law for the neighbour-degree sum of
the constructed graph; :func:`delta_law_check` verifies it exhaustively.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from functools import reduce

from .graphs import Graph

#: Default cap on product order; wreath blows up as |V2|^2 * |E1|.
DEFAULT_VERTEX_CAP = 10 ** 6


class SizeOverflowError(ValueError):
    """A product would exceed the configured vertex cap."""


class ProductKind(enum.Enum):
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    WREATH = "wreath"


def _check_cap(n1: int, n2: int, vertex_cap: int) -> None:
    if n1 * n2 > vertex_cap:
        raise SizeOverflowError(
            f"product order {n1 * n2} exceeds vertex cap {vertex_cap}"
        )


def cartesian(G1: Graph, G2: Graph, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    n1, n2 = G1.order, G2.order
    _check_cap(n1, n2, vertex_cap)
    edges = []
    for u in range(n1):
        base = u * n2
        for v1, v2 in G2.edges:
            edges.append((base + v1, base + v2))
    for u1, u2 in G1.edges:
        for v in range(n2):
            edges.append((u1 * n2 + v, u2 * n2 + v))
    return Graph(n1 * n2, edges)


def tensor(G1: Graph, G2: Graph, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    n1, n2 = G1.order, G2.order
    _check_cap(n1, n2, vertex_cap)
    edges = []
    for u1, u2 in G1.edges:
        for v1, v2 in G2.edges:
            edges.append((u1 * n2 + v1, u2 * n2 + v2))
            edges.append((u1 * n2 + v2, u2 * n2 + v1))
    return Graph(n1 * n2, edges)


def wreath(G1: Graph, G2: Graph, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    n1, n2 = G1.order, G2.order
    _check_cap(n1, n2, vertex_cap)
    edges = []
    for u1, u2 in G1.edges:
        for v1 in range(n2):
            for v2 in range(n2):
                edges.append((u1 * n2 + v1, u2 * n2 + v2))
    for u in range(n1):
        base = u * n2
        for v1, v2 in G2.edges:
            edges.append((base + v1, base + v2))
    return Graph(n1 * n2, edges)


_CONSTRUCTORS = {
    ProductKind.CARTESIAN: cartesian,
    ProductKind.TENSOR: tensor,
    ProductKind.WREATH: wreath,
}


def product(
    G1: Graph,
    G2: Graph,
    kind: ProductKind,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Graph:
    """Construct the product of the given kind (argument order preserved)."""
    return _CONSTRUCTORS[kind](G1, G2, vertex_cap=vertex_cap)


def cartesian_n(
    graphs: Sequence[Graph], *, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> Graph:
    """Left fold of the binary cartesian product over a non-empty list."""
    if not graphs:
        raise ValueError("cartesian_n needs at least one factor")
    return reduce(
        lambda acc, g: cartesian(acc, g, vertex_cap=vertex_cap), graphs
    )


# ---------------------------------------------------------------------------
# Per-vertex neighbour-degree-sum laws

def _cartesian_delta(G1, G2, u, v):
    return (
        G1.neighbor_degree_sum(u)
        + G2.neighbor_degree_sum(v)
        + 2 * G1.degree(u) * G2.degree(v)
    )


def _tensor_delta(G1, G2, u, v):
    return G1.neighbor_degree_sum(u) * G2.neighbor_degree_sum(v)


def _wreath_delta(G1, G2, u, v):
    n2 = G2.order
    e2 = G2.size
    return (
        n2 * n2 * G1.neighbor_degree_sum(u)
        + G2.neighbor_degree_sum(v)
        + 2 * e2 * G1.degree(u)
        + n2 * G1.degree(u) * G2.degree(v)
    )


_DELTA_LAWS = {
    ProductKind.CARTESIAN: _cartesian_delta,
    ProductKind.TENSOR: _tensor_delta,
    ProductKind.WREATH: _wreath_delta,
}


def delta_law_check(
    G1: Graph,
    G2: Graph,
    kind: ProductKind,
    *,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> bool:
    """True iff the constructed product graph realizes the per-vertex law.

    Builds the product, computes the neighbour-degree sum of every product
    vertex directly, and compares it against the kind's formula evaluated
    on factor data.
    """
    law = _DELTA_LAWS[kind]
    P = product(G1, G2, kind, vertex_cap=vertex_cap)
    n2 = G2.order
    deltas = P.neighbor_degree_sums()
    for u in range(G1.order):
        for v in range(n2):
            if deltas[u * n2 + v] != law(G1, G2, u, v):
                return False
    return True
