"""Restricted alkane-name parser and the embedded octane dataset.

The parser covers exactly the nomenclature needed for the octane work
(hydrogen-suppressed carbon skeletons):

    name        := ["n-"] group (("-" | " ")? group)* (" ")? parent
    group       := locants "-" multiplier? substituent
    locants     := int ("," int)*
    multiplier  := "di" | "tri" | "tetra"
    substituent := "methyl" | "ethyl"
    parent      := "butane" | "pentane" | "hexane" | "heptane" | "octane"

Names are case-insensitive.  Locants are grammar-checked against the
parent chain length only (1..length is accepted, so a chain-end locant
such as "5-methylpentane" parses to the hexane skeleton); no IUPAC
lowest-locant canonicalization is attempted, since distinct strings may
legally name isomorphic trees.  Every parsed structure must satisfy the
carbon valence bound (degree <= 4).
"""

from __future__ import annotations

import io
import csv
from dataclasses import dataclass

from .graphs import Graph
from .indices import neighbourhood_zagreb


class AlkaneNameError(ValueError):
    """Base class for alkane-name parsing errors."""


class AlkaneSyntaxError(AlkaneNameError):
    """Ungrammatical name; ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position


class LocantOutOfRangeError(AlkaneNameError):
    """A locant falls outside the parent chain."""


class MultiplierMismatchError(AlkaneNameError):
    """Locant count does not match the multiplier prefix."""


class ValenceExceededError(AlkaneNameError):
    """The named structure would give some carbon more than 4 bonds."""


_PARENTS = {
    "butane": 4,
    "pentane": 5,
    "hexane": 6,
    "heptane": 7,
    "octane": 8,
}
_MULTIPLIERS = {"di": 2, "tri": 3, "tetra": 4}
_SUBSTITUENTS = ("methyl", "ethyl")


def parse_alkane_name(text: str) -> Graph:
    """Parse an alkane name into its hydrogen-suppressed carbon tree."""
    offset = len(text) - len(text.lstrip())
    s = text.strip().lower()
    if not s:
        raise AlkaneSyntaxError("empty name", offset)

    pos = 0
    if s.startswith("n-"):
        pos = 2

    groups: list[tuple[list[int], str]] = []
    parent_len: int | None = None
    while True:
        if pos < len(s) and s[pos].isdigit():
            locants, substituent, pos = _parse_group(s, pos, offset)
            groups.append((locants, substituent))
            # at most one separator before the next group or the parent
            if pos < len(s) and s[pos] in "- ":
                pos += 1
            continue
        parent_len, pos = _parse_parent(s, pos, offset)
        break
    if pos != len(s):
        raise AlkaneSyntaxError(f"unexpected trailing text {s[pos:]!r}", offset + pos)

    return _build_tree(parent_len, groups)


def _parse_int(s: str, pos: int, offset: int) -> tuple[int, int]:
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if start == pos:
        raise AlkaneSyntaxError("expected a locant", offset + start)
    return int(s[start:pos]), pos


def _parse_group(s: str, pos: int, offset: int) -> tuple[list[int], str, int]:
    locants = []
    value, pos = _parse_int(s, pos, offset)
    locants.append(value)
    while pos < len(s) and s[pos] == ",":
        value, pos = _parse_int(s, pos + 1, offset)
        locants.append(value)
    if pos >= len(s) or s[pos] != "-":
        raise AlkaneSyntaxError("expected '-' after locants", offset + pos)
    pos += 1
    multiplier = None
    for word, count in _MULTIPLIERS.items():
        if s.startswith(word, pos):
            multiplier = count
            pos += len(word)
            break
    substituent = None
    for word in _SUBSTITUENTS:
        if s.startswith(word, pos):
            substituent = word
            pos += len(word)
            break
    if substituent is None:
        raise AlkaneSyntaxError("expected a substituent name", offset + pos)
    expected = multiplier if multiplier is not None else 1
    if len(locants) != expected:
        raise MultiplierMismatchError(
            f"{len(locants)} locant(s) with a multiplier for {expected}"
        )
    return locants, substituent, pos


def _parse_parent(s: str, pos: int, offset: int) -> tuple[int, int]:
    for word, length in _PARENTS.items():
        if s.startswith(word, pos):
            return length, pos + len(word)
    raise AlkaneSyntaxError("expected a parent chain name", offset + pos)


def _build_tree(parent_len: int, groups) -> Graph:
    edges = [(i, i + 1) for i in range(parent_len - 1)]
    n = parent_len
    for locants, substituent in groups:
        for locant in locants:
            if not 1 <= locant <= parent_len:
                raise LocantOutOfRangeError(
                    f"locant {locant} outside chain of length {parent_len}"
                )
            attach = locant - 1
            edges.append((attach, n))
            if substituent == "ethyl":
                edges.append((n, n + 1))
                n += 2
            else:
                n += 1
    graph = Graph(n, edges)
    worst = max(range(n), key=graph.degree)
    if graph.degree(worst) > 4:
        raise ValenceExceededError(
            f"carbon at position {worst + 1} would have {graph.degree(worst)} bonds"
        )
    return graph


# ---------------------------------------------------------------------------
# Octane dataset

@dataclass(frozen=True)
class OctaneRecord:
    """One octane isomer: tabulated properties plus the parsed skeleton.

    The acentric factor, entropy and reference index value are ``None``
    for the catalog-completing isomer that the property table omits.
    """

    name: str
    acentric_factor: float | None
    entropy: float | None
    mn_reference: int | None
    structure: Graph


# (name, acentric factor, entropy, tabulated neighbourhood Zagreb value)
_TABLE1_ROWS = (
    ("2,2,3,3-tetramethyl butane", 0.255294, 93.06, 194),
    ("2,3,4-trimethyl pentane", 0.317422, 102.39, 144),
    ("2,3,3-trimethyl pentane", 0.293177, 102.06, 164),
    ("2,2,3-trimethyl pentane", 0.300816, 101.31, 162),
    ("3-methyl-3-ethyl pentane", 0.306899, 101.48, 152),
    ("2-methyl-3-ethyl pentane", 0.332433, 106.06, 132),
    ("3,4-dimethyl hexane", 0.340345, 106.59, 130),
    ("3,3-dimethyl hexane", 0.322596, 104.74, 146),
    ("2,5-dimethyl hexane", 0.35683, 105.72, 118),
    ("2,4-dimethyl hexane", 0.344223, 106.98, 124),
    ("2,3-dimethyl hexane", 0.348247, 108.02, 126),
    ("2,2-dimethyl hexane", 0.339426, 103.42, 138),
    ("3-ethyl hexane", 0.362472, 109.43, 114),
    ("4-methyl heptane", 0.371504, 109.32, 110),
    ("3-methyl heptane", 0.371002, 111.26, 108),
    ("2-methyl heptane", 0.377916, 109.84, 104),
    ("n-octane", 0.397898, 111.67, 90),
)

#: The single constitutional octane isomer absent from the property table.
MISSING_ISOMER_NAME = "2,2,4-trimethyl pentane"


def octane_table1() -> list[OctaneRecord]:
    """The 17 tabulated octane isomers with their property values."""
    return [
        OctaneRecord(name, acentric, entropy, mn, parse_alkane_name(name))
        for name, acentric, entropy, mn in _TABLE1_ROWS
    ]


def octane_isomers_all() -> list[OctaneRecord]:
    """All 18 constitutional octane isomers.

    The 17 tabulated records come first; the table-omitted isomer
    (2,2,4-trimethylpentane) closes the list with no property values, and
    participates only in degeneracy analysis.
    """
    records = octane_table1()
    records.append(
        OctaneRecord(
            MISSING_ISOMER_NAME, None, None, None,
            parse_alkane_name(MISSING_ISOMER_NAME),
        )
    )
    return records


def octane_dataset_csv() -> str:
    """CSV export of the octane catalog.

    Columns: ``name,acentric,entropy,MN_paper,MN_computed``.  The isomer
    missing from the property table is flagged by its empty property
    fields.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "acentric", "entropy", "MN_paper", "MN_computed"])
    for rec in octane_isomers_all():
        writer.writerow(
            [
                rec.name,
                "" if rec.acentric_factor is None else repr(rec.acentric_factor),
                "" if rec.entropy is None else repr(rec.entropy),
                "" if rec.mn_reference is None else rec.mn_reference,
                neighbourhood_zagreb(rec.structure),
            ]
        )
    return buf.getvalue()
