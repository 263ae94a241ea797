"""Directed graph container, vertex attributes, and file I/O.

Vertices are dense integers ``0..n-1``.  Arcs are ordered pairs with set
semantics: no duplicates, no self-loops.  Graphs and attribute tables are
immutable after construction and safe to share between threads.

Edge-list format: UTF-8 lines ``src dst`` (space or tab separated),
``#`` comment lines, and an optional first line ``n=<int>`` declaring the
vertex count.  Attribute format: CSV with ``name:kind`` headers where kind
is one of ``ordinal``, ``categorical``, ``continuous``; one data row per
vertex in id order.
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

ATTRIBUTE_KINDS = ("ordinal", "categorical", "continuous")


class GraphFormatError(ValueError):
    """Raised for malformed edge-list or attribute-table input."""


class Graph:
    """Immutable simple directed graph on vertices ``0..n-1``."""

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        arc_set: set[tuple[int, int]] = set()
        for a, b in arcs:
            i, j = int(a), int(b)
            if i == j:
                raise ValueError(f"self-loop ({i}, {i}) is not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arc ({i}, {j}) has an endpoint outside [0, {n})")
            arc_set.add((i, j))
        self.n = n
        self.arcs: frozenset[tuple[int, int]] = frozenset(arc_set)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_list(self) -> tuple[tuple[int, int], ...]:
        """Arcs sorted by (src, dst)."""
        return tuple(sorted(self.arcs))

    @cached_property
    def arc_array(self) -> np.ndarray:
        """Sorted arcs as an (m, 2) int array; shape (0, 2) when empty."""
        if not self.arcs:
            return np.empty((0, 2), dtype=np.int64)
        return np.array(self.arc_list, dtype=np.int64)

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.arc_list:
            adj[i].append(j)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.arc_list:
            adj[j].append(i)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def out_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        if self.arcs:
            deg += np.bincount(self.arc_array[:, 0], minlength=self.n)
        return deg

    @cached_property
    def in_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        if self.arcs:
            deg += np.bincount(self.arc_array[:, 1], minlength=self.n)
        return deg

    @cached_property
    def total_degrees(self) -> np.ndarray:
        return self.out_degrees + self.in_degrees

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, arcs={self.arc_count})"


def _as_text(stream) -> str:
    if isinstance(stream, bytes):
        return stream.decode("utf-8")
    if isinstance(stream, str):
        return stream
    data = stream.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def load_edge_list(stream) -> Graph:
    """Parse an edge list into a Graph.

    ``stream`` may be text, bytes, or a file-like object.  The vertex count
    is ``1 + max id`` unless an ``n=<int>`` header line declares it.
    Duplicate arcs are collapsed; a warning reports how many.
    """
    text = _as_text(stream)
    declared_n: int | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    saw_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not saw_content and line.startswith("n="):
            saw_content = True
            try:
                declared_n = int(line[2:])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex-count header {line!r}")
            if declared_n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count {declared_n}")
            continue
        saw_content = True
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'src dst', got {line!r}")
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {line!r}")
        if i < 0 or j < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id in {line!r}")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop ({i}, {j})")
        if declared_n is not None and (i >= declared_n or j >= declared_n):
            raise GraphFormatError(
                f"line {lineno}: vertex id out of declared range n={declared_n}"
            )
        if (i, j) in seen:
            duplicates += 1
            continue
        seen.add((i, j))
        pairs.append((i, j))
    if duplicates:
        warnings.warn(f"{duplicates} duplicate arc(s) collapsed", stacklevel=2)
    if declared_n is not None:
        n = declared_n
    elif pairs:
        n = 1 + max(max(i, j) for i, j in pairs)
    else:
        n = 0
    return Graph(n, pairs)


def save_edge_list(g: Graph) -> str:
    """Serialize a Graph; ``load_edge_list(save_edge_list(g))`` reproduces g.

    The ``n=`` header is emitted only when the vertex count cannot be
    inferred from the arcs.
    """
    lines = []
    max_id = max((max(i, j) for i, j in g.arcs), default=-1)
    if not g.arcs or g.n != max_id + 1:
        lines.append(f"n={g.n}")
    lines.extend(f"{i} {j}" for i, j in g.arc_list)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AttributeColumn:
    """One per-vertex attribute: numeric (ordinal/continuous) or categorical."""

    name: str
    kind: str
    values: tuple

    def __post_init__(self):
        if self.kind not in ATTRIBUTE_KINDS:
            raise ValueError(f"unknown attribute kind {self.kind!r}")
        if self.kind == "categorical":
            object.__setattr__(self, "values", tuple(str(v) for v in self.values))
        else:
            vals = tuple(float(v) for v in self.values)
            if any(not np.isfinite(v) for v in vals):
                raise ValueError(f"non-finite value in numeric column {self.name!r}")
            object.__setattr__(self, "values", vals)

    @property
    def is_numeric(self) -> bool:
        return self.kind != "categorical"


class AttributeTable:
    """Immutable per-vertex attribute vectors, one column per attribute."""

    def __init__(self, columns: Sequence[AttributeColumn]):
        cols = tuple(columns)
        if cols:
            lengths = {len(c.values) for c in cols}
            if len(lengths) != 1:
                raise ValueError("attribute columns have inconsistent lengths")
        names = [c.name for c in cols]
        if len(set(names)) != len(names):
            raise ValueError("duplicate attribute names")
        self.columns = cols
        self._by_name = {c.name: c for c in cols}

    @property
    def n(self) -> int:
        return len(self.columns[0].values) if self.columns else 0

    @property
    def m(self) -> int:
        return len(self.columns)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.columns)

    def column(self, name: str) -> AttributeColumn:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValueError(f"no attribute named {name!r}") from None

    def numeric_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.columns if c.is_numeric)

    @cached_property
    def _numeric_arrays(self) -> dict:
        return {}

    def numeric_array(self, name: str) -> np.ndarray:
        col = self.column(name)
        if not col.is_numeric:
            raise ValueError(f"attribute {name!r} is categorical, expected numeric")
        cache = self._numeric_arrays
        if name not in cache:
            cache[name] = np.array(col.values, dtype=np.float64)
        return cache[name]

    @cached_property
    def _code_arrays(self) -> dict:
        return {}

    def labels(self, name: str) -> tuple[str, ...]:
        col = self.column(name)
        if col.is_numeric:
            raise ValueError(f"attribute {name!r} is numeric, expected categorical")
        return tuple(sorted(set(col.values)))

    def codes(self, name: str) -> np.ndarray:
        """Integer label codes for a categorical column (sorted-label order)."""
        cache = self._code_arrays
        if name not in cache:
            labels = {lab: k for k, lab in enumerate(self.labels(name))}
            col = self.column(name)
            cache[name] = np.array([labels[v] for v in col.values], dtype=np.int64)
        return cache[name]


def load_attributes(stream, expected_n: int | None = None) -> AttributeTable:
    """Parse a CSV attribute table with ``name:kind`` headers."""
    text = _as_text(stream)
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not rows:
        raise GraphFormatError("attribute table has no header row")
    header = rows[0]
    specs: list[tuple[str, str]] = []
    for cell in header:
        cell = cell.strip()
        if ":" not in cell:
            raise GraphFormatError(f"header cell {cell!r} is not 'name:kind'")
        name, kind = cell.rsplit(":", 1)
        name, kind = name.strip(), kind.strip()
        if kind not in ATTRIBUTE_KINDS:
            raise GraphFormatError(f"unknown attribute kind {kind!r} for column {name!r}")
        specs.append((name, kind))
    body = rows[1:]
    if expected_n is not None and len(body) != expected_n:
        raise GraphFormatError(
            f"attribute table has {len(body)} rows, expected {expected_n}"
        )
    raw_columns: list[list] = [[] for _ in specs]
    for rowno, row in enumerate(body, start=2):
        if len(row) != len(specs):
            raise GraphFormatError(
                f"row {rowno}: {len(row)} cells for {len(specs)} columns"
            )
        for colno, ((name, kind), cell) in enumerate(zip(specs, row)):
            cell = cell.strip()
            if kind == "categorical":
                raw_columns[colno].append(cell)
            else:
                try:
                    raw_columns[colno].append(float(cell))
                except ValueError:
                    raise GraphFormatError(
                        f"row {rowno}, column {name!r}: non-numeric value {cell!r}"
                    ) from None
    columns = [
        AttributeColumn(name, kind, tuple(values))
        for (name, kind), values in zip(specs, raw_columns)
    ]
    return AttributeTable(columns)


def save_attributes(table: AttributeTable) -> str:
    """Serialize an AttributeTable back to the CSV format of load_attributes."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([f"{c.name}:{c.kind}" for c in table.columns])
    for row in range(table.n):
        writer.writerow(
            [
                c.values[row] if c.kind == "categorical" else repr(c.values[row])
                for c in table.columns
            ]
        )
    return out.getvalue()


def symmetrize(g: Graph) -> Graph:
    """Add the reverse of every arc; idempotent."""
    arcs = set(g.arcs)
    arcs.update((j, i) for i, j in g.arcs)
    return Graph(g.n, arcs)


def out_degree_sequence(g: Graph) -> np.ndarray:
    """Out-degree of every vertex, in vertex order."""
    return g.out_degrees.copy()
