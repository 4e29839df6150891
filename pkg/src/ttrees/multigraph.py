"""Loopless multigraphs with parallel edges.

Edges are stored as an indexed sequence of normalized endpoint pairs, so
parallel edges are distinguishable by edge id.  Colourings and all other
structures in this package reference edges by id.  Vertex names (labels such
as "x" or "v16") live in a label map carried alongside the graph, never
inside it; the core algorithms are label-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class InputError(ValueError):
    """Malformed input: bad file contents, out-of-range ids, bad arguments."""


class PreconditionError(ValueError):
    """An operation was called on state that violates its preconditions."""


@dataclass(frozen=True)
class Multigraph:
    """A loopless multigraph.  Immutable after construction.

    vertex_count: number of vertices, ids 0..vertex_count-1.
    edges: tuple of (a, b) endpoint pairs with a <= b; the edge id is the
        position in this tuple.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    _incidence: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False, default=()
    )

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InputError("vertex_count must be non-negative")
        for eid, (a, b) in enumerate(self.edges):
            if a == b:
                raise InputError(f"edge {eid} is a loop at vertex {a}")
            if not (0 <= a <= b < self.vertex_count):
                raise InputError(f"edge {eid} endpoints ({a},{b}) out of range or unnormalized")
        incidence: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for eid, (a, b) in enumerate(self.edges):
            incidence[a].append(eid)
            incidence[b].append(eid)
        object.__setattr__(self, "_incidence", tuple(tuple(ids) for ids in incidence))

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build a graph, normalizing each endpoint pair so a <= b."""
        norm = tuple((a, b) if a <= b else (b, a) for a, b in pairs)
        return cls(vertex_count, norm)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise InputError(f"vertex id {v} out of range (vertex_count={self.vertex_count})")

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Edge ids incident to v, in increasing id order."""
        self.check_vertex(v)
        return self._incidence[v]

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise InputError(f"vertex {v} is not an endpoint of edge {eid}")

    def degree(self, v: int) -> int:
        """Number of incident edge ids, counting parallel edges separately."""
        return len(self.incident_edges(v))

    def max_degree(self) -> int:
        if self.vertex_count == 0:
            raise InputError("max_degree of an empty graph is undefined")
        return max(len(ids) for ids in self._incidence)

    def boundary_edges(self, s: Iterable[int]) -> set[int]:
        """Edge ids with exactly one endpoint in s."""
        sset = set(s)
        for v in sset:
            self.check_vertex(v)
        return {
            eid for eid, (a, b) in enumerate(self.edges) if (a in sset) != (b in sset)
        }

    def induced_edge_count(self, s: Iterable[int]) -> int:
        """Number of edges with both endpoints in s."""
        sset = set(s)
        for v in sset:
            self.check_vertex(v)
        return sum(1 for a, b in self.edges if a in sset and b in sset)


def parse_graph(text: str) -> tuple[Multigraph, dict[str, int]]:
    """Parse the text graph format.

    Line 1 is ``vertices N``; subsequent lines are ``edge A B`` with 0-based
    vertex ids, or ``label V NAME``.  ``#`` begins a comment; blank lines and
    trailing whitespace are ignored.
    """
    vertex_count: int | None = None
    pairs: list[tuple[int, int]] = []
    labels: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if vertex_count is not None:
                raise InputError(f"line {lineno}: duplicate 'vertices' line")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected 'vertices N'")
            vertex_count = int(parts[1])
        elif parts[0] == "edge":
            if vertex_count is None:
                raise InputError(f"line {lineno}: 'edge' before 'vertices'")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'edge A B'")
            pairs.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "label":
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'label V NAME'")
            v, name = int(parts[1]), parts[2]
            if name in labels:
                raise InputError(f"line {lineno}: duplicate label {name!r}")
            labels[name] = v
        else:
            raise InputError(f"line {lineno}: unknown directive {parts[0]!r}")
    if vertex_count is None:
        raise InputError("missing 'vertices N' line")
    try:
        g = Multigraph.from_edges(vertex_count, pairs)
    except InputError:
        raise
    for name, v in labels.items():
        g.check_vertex(v)
    return g, labels


def format_graph(g: Multigraph, labels: dict[str, int] | None = None) -> str:
    lines = [f"vertices {g.vertex_count}"]
    if labels:
        for name in sorted(labels, key=lambda s: labels[s]):
            lines.append(f"label {labels[name]} {name}")
    for a, b in g.edges:
        lines.append(f"edge {a} {b}")
    return "\n".join(lines) + "\n"
