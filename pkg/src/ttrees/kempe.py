"""Kempe chains: two-colour components and switches.

For a proper partial colouring, the edges carrying a fixed pair of colours
a, b induce a subgraph in which every vertex has degree at most two, so
each component is a doubled edge (two parallels on the same endpoint
pair), an alternating path, or an even cycle of length more than two.
A Kempe switch exchanges a and b on one component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import UNCOLOURED, PartialColouring, missing_at
from .multigraph import InputError, Multigraph, PreconditionError

DOUBLE_EDGE = "double-edge"
PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class KempeComponent:
    """One component of the subgraph induced by a colour pair.

    vertices and edge_ids walk the component in order; for a cycle the
    vertex sequence omits the repeat of the starting vertex.  A path with
    no edges (a vertex missing both colours) is the empty chain at that
    vertex.
    """

    colours: tuple[int, int]
    kind: str
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)


def _pair_subgraph(c: PartialColouring, g: Multigraph, a: int, b: int) -> dict[int, list[int]]:
    """Map vertex -> incident edge ids coloured a or b."""
    incident: dict[int, list[int]] = {}
    for eid, col in enumerate(c.colours):
        if col == a or col == b:
            for v in g.edges[eid]:
                incident.setdefault(v, []).append(eid)
    return incident


def _walk(g: Multigraph, incident: dict[int, list[int]], start: int) -> tuple[list[int], list[int], bool]:
    """Walk the component from a path endpoint, or around a cycle.

    Returns (vertices, edge_ids, is_cycle); a cycle's vertex list does not
    repeat the start.
    """
    verts = [start]
    eids: list[int] = []
    used: set[int] = set()
    v = start
    while True:
        nxt = [e for e in incident[v] if e not in used]
        if not nxt:
            return verts, eids, False
        eid = nxt[0]
        used.add(eid)
        eids.append(eid)
        v = g.other_end(eid, v)
        if v == start and all(e in used for e in incident[v]):
            return verts, eids, True
        verts.append(v)


def _canonical(comp_vertices: list[int], comp_edges: list[int], is_cycle: bool,
               colours: tuple[int, int]) -> KempeComponent:
    if not is_cycle:
        # Paths are oriented with the lower endpoint id first.
        if comp_vertices[0] > comp_vertices[-1]:
            comp_vertices = comp_vertices[::-1]
            comp_edges = comp_edges[::-1]
        return KempeComponent(colours, PATH, tuple(comp_vertices), tuple(comp_edges))
    if len(comp_edges) == 2:
        # A 2-cycle is two parallel edges: the doubled-edge component.
        vs = sorted(comp_vertices)
        return KempeComponent(colours, DOUBLE_EDGE, tuple(vs), tuple(sorted(comp_edges)))
    # Cycles start at the minimum vertex and step towards its smaller
    # neighbour, so the representation is rotation- and direction-free.
    n = len(comp_vertices)
    i = comp_vertices.index(min(comp_vertices))
    verts = comp_vertices[i:] + comp_vertices[:i]
    edges = comp_edges[i:] + comp_edges[:i]
    # reversed orientation: last vertex becomes second
    rverts = [verts[0]] + verts[1:][::-1]
    redges = edges[::-1]
    if (rverts[1], redges[0]) < (verts[1], edges[0]):
        verts, edges = rverts, redges
    return KempeComponent(colours, CYCLE, tuple(verts), tuple(edges))


def bichromatic_components(c: PartialColouring, g: Multigraph, a: int, b: int) -> list[KempeComponent]:
    """Decompose all a- or b-coloured edges into classified components."""
    if a == b:
        raise InputError("colour pair must be distinct")
    for col in (a, b):
        if not (1 <= col <= c.k):
            raise InputError(f"colour {col} outside 1..{c.k}")
    pair = (a, b) if a < b else (b, a)
    incident = _pair_subgraph(c, g, a, b)
    seen_edges: set[int] = set()
    comps: list[KempeComponent] = []
    # Start walks at degree-1 vertices (path endpoints) first, then sweep
    # the rest (cycles and doubled edges).
    starts = sorted(incident, key=lambda v: (len(incident[v]) != 1, v))
    for v in starts:
        first = [e for e in incident[v] if e not in seen_edges]
        if not first:
            continue
        verts, eids, is_cycle = _walk(g, incident, v)
        if any(e in seen_edges for e in eids):
            continue
        seen_edges.update(eids)
        comps.append(_canonical(verts, eids, is_cycle, pair))
    comps.sort(key=lambda comp: (comp.vertices, comp.edge_ids))
    return comps


def chain_from(c: PartialColouring, g: Multigraph, v: int, a: int, b: int) -> KempeComponent:
    """The unique (a,b)-component containing v.

    A vertex on no a- or b-edge yields the empty path at v; this is legal
    whenever v misses both colours (it arises when k exceeds Delta+1).
    """
    if a == b:
        raise InputError("colour pair must be distinct")
    g.check_vertex(v)
    pair = (a, b) if a < b else (b, a)
    incident = _pair_subgraph(c, g, a, b)
    if v not in incident:
        return KempeComponent(pair, PATH, (v,), ())
    if len(incident[v]) == 1:
        verts, eids, is_cycle = _walk(g, incident, v)
        return _canonical(verts, eids, is_cycle, pair)
    for comp in bichromatic_components(c, g, a, b):
        if v in comp.vertices:
            return comp
    raise AssertionError("unreachable: vertex has pair-coloured edges but no component")


def kempe_switch(c: PartialColouring, g: Multigraph, comp: KempeComponent) -> PartialColouring:
    """Exchange the two colours on comp's edges; all other edges unchanged.

    Raises PreconditionError if comp is stale, i.e. its edges no longer
    carry the colours it was built from.
    """
    a, b = comp.colours
    for eid in comp.edge_ids:
        if c.colours[eid] not in (a, b):
            raise PreconditionError(f"stale component: edge {eid} is no longer coloured {a} or {b}")
    out = c.copy()
    for eid in comp.edge_ids:
        out.colours[eid] = b if c.colours[eid] == a else a
    return out


def endpoints_share_missing(c: PartialColouring, g: Multigraph, eid: int) -> bool:
    """True iff the two ends of edge eid have a common missing colour."""
    a, b = g.edges[eid]
    return bool(missing_at(c, g, a) & missing_at(c, g, b))
