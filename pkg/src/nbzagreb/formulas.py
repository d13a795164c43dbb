"""Catalogued closed-form expressions for the neighbourhood Zagreb index.

Every entry reproduces one catalogued closed form *verbatim*, including
the entries that turn out to be wrong: the catalog is a hard contract,
and discrepancies against direct computation are findings reported by the
verification engine (:mod:`nbzagreb.verification`), never silently fixed
here.  All arithmetic is exact integer arithmetic.

Multi-index sums written over ``i != j``, ``i != j != k`` etc. are sums
over ordered tuples of *pairwise distinct* indices, evaluated literally
by iterating those tuples.

Known errata in the catalog (confirmed constructively, see the
verification engine): ``EX_LADDER``, ``EX_GRID``, ``EX_FENCE``,
``EX_CLOSED_FENCE`` and ``PROP4_PRINTED``.  The wreath-product rule
``PROP4_PRINTED`` is inconsistent with the per-vertex wreath law that the
constructed graphs obey, and the fence examples inherit its values.
"""

from __future__ import annotations

import warnings
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import permutations
from math import prod

from .graphs import Graph
from .indices import first_zagreb, neighbourhood_zagreb, second_zagreb


class ParamOutOfStatedRangeWarning(UserWarning):
    """Formula evaluated outside its catalogued parameter range."""


@dataclass(frozen=True)
class GraphStats:
    """The factor-graph quantities consumed by the product rules."""

    order: int
    size: int
    m1: int
    m2: int
    mn: int

    @classmethod
    def from_graph(cls, G: Graph) -> "GraphStats":
        return cls(
            order=G.order,
            size=G.size,
            m1=first_zagreb(G),
            m2=second_zagreb(G),
            mn=neighbourhood_zagreb(G),
        )


# ---------------------------------------------------------------------------
# Product rules

def mn_cartesian(s1: GraphStats, s2: GraphStats) -> int:
    """Binary cartesian rule PROP1."""
    return (
        6 * s1.m1 * s2.m1
        + s2.order * s1.mn
        + s1.order * s2.mn
        + 16 * (s2.size * s1.m2 + s1.size * s2.m2)
    )


def mn_cartesian_nary(stats: Sequence[GraphStats]) -> int:
    """n-ary cartesian rule PROP2 (ordered distinct-tuple reading).

    Every term carries a factor |V| / (v_i * v_j * ...) over pairwise
    distinct indices, which is an exact integer because the denominator
    is a product of distinct factor orders.
    """
    if len(stats) < 2:
        raise ValueError("the n-ary cartesian rule needs at least 2 factors")
    v = [s.order for s in stats]
    e = [s.size for s in stats]
    m1 = [s.m1 for s in stats]
    m2 = [s.m2 for s in stats]
    mn = [s.mn for s in stats]
    V = prod(v)
    idx = range(len(stats))

    total = sum(V // v[i] * mn[i] for i in idx)
    total += 3 * sum(
        V // (v[i] * v[j]) * m1[i] * m1[j] for i, j in permutations(idx, 2)
    )
    total += 24 * sum(
        V // (v[i] * v[j] * v[k]) * m1[i] * e[j] * e[k]
        for i, j, k in permutations(idx, 3)
    )
    total += 16 * sum(
        V // (v[i] * v[j]) * m2[i] * e[j] for i, j in permutations(idx, 2)
    )
    total += 16 * sum(
        V // (v[i] * v[j] * v[k] * v[l]) * e[i] * e[j] * e[k] * e[l]
        for i, j, k, l in permutations(idx, 4)
    )
    return total


def mn_tensor(mn1: int, mn2: int) -> int:
    """Tensor rule PROP3: the index is multiplicative."""
    return mn1 * mn2


def mn_wreath_printed(s1: GraphStats, s2: GraphStats) -> int:
    """Wreath rule PROP4_PRINTED, evaluated verbatim as catalogued.

    This expression is a documented erratum: it disagrees with direct
    computation on the constructed wreath product (which follows the
    per-vertex wreath law).  It exists so the discrepancy can be measured
    and reported; do not use it as a source of truth.
    """
    v2, e1, e2 = s2.order, s1.size, s2.size
    return (
        v2 ** 4 * s1.mn
        + s2.mn
        + 12 * v2 * e2 ** 2 * s1.m1
        + 8 * e1 * e2 * s2.m1
        + 8 * v2 ** 2 * e2 * (v2 + 1) * s1.m2
        + 8 * v2 * e1 * s2.m2
        + 3 * v2 ** 2 * s1.m1 * s2.m1
    )


def mn_hamming(sizes: Sequence[int]) -> int:
    """Hamming rule: the catalogued multinomial expansion, literally.

    Sums run over ordered tuples of pairwise distinct indices.  Equals
    :func:`mn_hamming_compact` for every size list (the Hamming graph is
    regular of degree ``sum(sizes) - len(sizes)``).
    """
    if any(s < 2 for s in sizes):
        raise ValueError(f"hamming sizes must each be >= 2, got {list(sizes)}")
    a = [s - 1 for s in sizes]
    idx = range(len(a))
    bracket = sum(x ** 4 for x in a)
    bracket += 3 * sum(a[i] ** 2 * a[j] ** 2 for i, j in permutations(idx, 2))
    bracket += 6 * sum(
        a[i] ** 2 * a[j] * a[k] for i, j, k in permutations(idx, 3)
    )
    bracket += 4 * sum(a[i] ** 3 * a[j] for i, j in permutations(idx, 2))
    bracket += sum(
        a[i] * a[j] * a[k] * a[l] for i, j, k, l in permutations(idx, 4)
    )
    return prod(sizes) * bracket


def mn_hamming_compact(sizes: Sequence[int]) -> int:
    """Regular-graph value of the Hamming graph: (prod sizes) * degree^4."""
    return prod(sizes) * sum(s - 1 for s in sizes) ** 4


# ---------------------------------------------------------------------------
# Catalogued family polynomials, verbatim

FORMULA_IDS = (
    "PROP1",
    "PROP2",
    "PROP3",
    "PROP4_PRINTED",
    "HAMMING",
    "EX_LADDER",
    "EX_NANOTORUS",
    "EX_NANOTUBE",
    "EX_GRID",
    "EX_PRISM",
    "EX_ROOK",
    "EX_HYPERCUBE",
    "EX_TENSOR_PP",
    "EX_TENSOR_CC",
    "EX_TENSOR_KK",
    "EX_TENSOR_PC",
    "EX_TENSOR_PK",
    "EX_TENSOR_CK",
    "EX_FENCE",
    "EX_CLOSED_FENCE",
)

# id -> (parameter names, polynomial, stated-range predicate or None)
_FAMILY_CLOSED = {
    "EX_LADDER": (("n",), lambda n: 162 * n - 132, None),
    "EX_NANOTORUS": (("m", "n"), lambda m, n: 256 * m * n, None),
    "EX_NANOTUBE": (
        ("m", "n"),
        lambda m, n: 256 * m * n - 374 * m,
        lambda m, n: n >= 4,
    ),
    "EX_GRID": (
        ("m", "n"),
        lambda m, n: 256 * m * n - 310 * m - 310 * n + 216,
        lambda m, n: m >= 4 and n >= 4,
    ),
    "EX_PRISM": (("n",), lambda n: 162 * n, None),
    "EX_ROOK": (
        ("m", "n"),
        lambda m, n: m * n * (
            6 * (m - 1) ** 2 * (n - 1) ** 2
            + (n - 1) ** 4
            + (m - 1) ** 4
            + 4 * (m - 1) * (n - 1) * ((m - 1) ** 2 + (n - 1) ** 2)
        ),
        None,
    ),
    "EX_HYPERCUBE": (("m",), lambda m: 2 ** m * m ** 4, None),
    "EX_TENSOR_PP": (
        ("n", "m"),
        lambda n, m: (16 * n - 38) * (16 * m - 38),
        lambda n, m: n >= 4 and m >= 4,
    ),
    "EX_TENSOR_CC": (("n", "m"), lambda n, m: 256 * m * n, None),
    "EX_TENSOR_KK": (
        ("n", "m"),
        lambda n, m: m * n * (m - 1) ** 4 * (n - 1) ** 4,
        None,
    ),
    "EX_TENSOR_PC": (
        ("n", "m"),
        lambda n, m: 16 * m * (16 * n - 38),
        lambda n, m: n >= 4,
    ),
    "EX_TENSOR_PK": (
        ("n", "m"),
        lambda n, m: m * (m - 1) ** 4 * (16 * n - 38),
        lambda n, m: n >= 4,
    ),
    "EX_TENSOR_CK": (("n", "m"), lambda n, m: 16 * m * n * (m - 1) ** 4, None),
    "EX_FENCE": (("n",), lambda n: 864 * n - 1694, lambda n: n >= 4),
    "EX_CLOSED_FENCE": (("n",), lambda n: 816 * n + 2, lambda n: n >= 3),
}

#: Formula ids evaluated over a family parameter grid (vs. random factors).
FAMILY_FORMULA_IDS = tuple(_FAMILY_CLOSED)


def formula_params(formula_id: str) -> tuple[str, ...]:
    """Parameter names of a family formula."""
    return _FAMILY_CLOSED[formula_id][0]


def in_stated_range(formula_id: str, **params: int) -> bool:
    """Whether the parameters satisfy the formula's catalogued constraint."""
    names, _, pred = _FAMILY_CLOSED[formula_id]
    if pred is None:
        return True
    return pred(*(params[name] for name in names))


def example_formula(formula_id: str, **params: int) -> int:
    """Evaluate a catalogued family polynomial verbatim.

    Out-of-range parameters are a warning, not an error: evaluation
    proceeds and the verification engine carries the flag in its report.
    """
    if formula_id not in _FAMILY_CLOSED:
        raise ValueError(
            f"{formula_id!r} is not a family formula; expected one of "
            f"{FAMILY_FORMULA_IDS}"
        )
    names, poly, _ = _FAMILY_CLOSED[formula_id]
    missing = [name for name in names if name not in params]
    if missing:
        raise ValueError(f"{formula_id} needs parameters {names}, missing {missing}")
    if not in_stated_range(formula_id, **params):
        warnings.warn(
            f"{formula_id} evaluated outside its stated parameter range: "
            f"{ {name: params[name] for name in names} }",
            ParamOutOfStatedRangeWarning,
            stacklevel=2,
        )
    return poly(*(params[name] for name in names))
