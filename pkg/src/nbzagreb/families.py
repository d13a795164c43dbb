"""Named graph families, all built constructively via products.

Families backing the CLI ``--family`` flag and the verification oracle.
Product families are always constructed with the product operators, never
from closed-form expressions: the constructions are the ground truth the
closed forms get checked against.
"""

from __future__ import annotations

from collections.abc import Sequence

from .graphs import Graph, complete_graph, cycle_graph, path_graph
from .products import DEFAULT_VERTEX_CAP, cartesian, cartesian_n, wreath


def ladder(n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """L_n = P_2 x P_{n+1}: the ladder with n rungs plus the two ends."""
    return cartesian(path_graph(2), path_graph(n + 1), vertex_cap=vertex_cap)


def grid(m: int, n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """P_m x P_n rectangular grid."""
    return cartesian(path_graph(m), path_graph(n), vertex_cap=vertex_cap)


def nanotube(m: int, n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """TUC4(m, n) = P_n x C_m: a C4 tube with n rings of girth m."""
    return cartesian(path_graph(n), cycle_graph(m), vertex_cap=vertex_cap)


def nanotorus(m: int, n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """TC4(m, n) = C_m x C_n: a C4 torus."""
    return cartesian(cycle_graph(m), cycle_graph(n), vertex_cap=vertex_cap)


def prism(n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """n-prism K_2 x C_n."""
    return cartesian(complete_graph(2), cycle_graph(n), vertex_cap=vertex_cap)


def rook(m: int, n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Rook's graph K_m x K_n."""
    return cartesian(complete_graph(m), complete_graph(n), vertex_cap=vertex_cap)


def hamming(sizes: Sequence[int], *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Hamming graph H(sizes): n-ary cartesian product of complete graphs."""
    if not sizes:
        raise ValueError("hamming needs at least one factor size")
    if any(s < 2 for s in sizes):
        raise ValueError(f"hamming factor sizes must be >= 2, got {list(sizes)}")
    return cartesian_n([complete_graph(s) for s in sizes], vertex_cap=vertex_cap)


def hypercube(m: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Q_m: the m-dimensional hypercube, the all-2 Hamming graph."""
    if m < 1:
        raise ValueError(f"hypercube dimension must be >= 1, got {m}")
    return hamming([2] * m, vertex_cap=vertex_cap)


def fence(n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Fence graph P_n[P_2] (wreath product)."""
    return wreath(path_graph(n), path_graph(2), vertex_cap=vertex_cap)


def closed_fence(n: int, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Graph:
    """Closed fence graph C_n[P_2] (wreath product)."""
    return wreath(cycle_graph(n), path_graph(2), vertex_cap=vertex_cap)


#: CLI family registry: name -> (required params, builder).
FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "ladder": ("n",),
    "grid": ("m", "n"),
    "nanotube": ("m", "n"),
    "nanotorus": ("m", "n"),
    "prism": ("n",),
    "rook": ("m", "n"),
    "hamming": ("sizes",),
    "hypercube": ("m",),
    "fence": ("n",),
    "closed-fence": ("n",),
}


def build_family(
    name: str,
    *,
    n: int | None = None,
    m: int | None = None,
    sizes: Sequence[int] | None = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> Graph:
    """Build a named family member from CLI-style parameters."""
    if name not in FAMILY_PARAMS:
        raise ValueError(
            f"unknown family {name!r}; expected one of {sorted(FAMILY_PARAMS)}"
        )
    needed = FAMILY_PARAMS[name]
    given = {"n": n, "m": m, "sizes": sizes}
    for p in needed:
        if given[p] is None:
            raise ValueError(f"family {name!r} needs parameter --{p}")
    if name == "path":
        return path_graph(n)
    if name == "cycle":
        return cycle_graph(n)
    if name == "complete":
        return complete_graph(n)
    if name == "ladder":
        return ladder(n, vertex_cap=vertex_cap)
    if name == "grid":
        return grid(m, n, vertex_cap=vertex_cap)
    if name == "nanotube":
        return nanotube(m, n, vertex_cap=vertex_cap)
    if name == "nanotorus":
        return nanotorus(m, n, vertex_cap=vertex_cap)
    if name == "prism":
        return prism(n, vertex_cap=vertex_cap)
    if name == "rook":
        return rook(m, n, vertex_cap=vertex_cap)
    if name == "hamming":
        return hamming(sizes, vertex_cap=vertex_cap)
    if name == "hypercube":
        return hypercube(m, vertex_cap=vertex_cap)
    if name == "fence":
        return fence(n, vertex_cap=vertex_cap)
    return closed_fence(n, vertex_cap=vertex_cap)
