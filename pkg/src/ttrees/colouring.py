"""Partial k-edge-colourings with explicit uncoloured edges.

Colours are the integers 1..k.  The sentinel ``UNCOLOURED`` (0) marks an
edge with no colour; it is distinct from every real colour, so partial
colourings are first-class values.  Missing-colour sets are always
recomputed from the assignment; callers may cache but the recomputed value
is the contract.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .multigraph import InputError, Multigraph

UNCOLOURED = 0


@dataclass
class PartialColouring:
    """An edge -> colour assignment over colours 1..k.

    colours[eid] is the colour of edge eid, or UNCOLOURED.
    """

    k: int
    colours: list[int]

    def copy(self) -> "PartialColouring":
        return PartialColouring(self.k, list(self.colours))

    def uncoloured_edges(self) -> list[int]:
        return [eid for eid, c in enumerate(self.colours) if c == UNCOLOURED]

    def coloured_count(self) -> int:
        return sum(1 for c in self.colours if c != UNCOLOURED)

    def key(self) -> tuple[int, ...]:
        """Hashable snapshot of the assignment."""
        return tuple(self.colours)


def colours_at(c: PartialColouring, g: Multigraph, v: int) -> set[int]:
    """The set of colours present on edges incident to v."""
    return {
        c.colours[eid]
        for eid in g.incident_edges(v)
        if c.colours[eid] != UNCOLOURED
    }


def missing_at(c: PartialColouring, g: Multigraph, v: int) -> set[int]:
    """Colours of 1..k not used on any edge incident to v."""
    return set(range(1, c.k + 1)) - colours_at(c, g, v)


def proper_violation(c: PartialColouring, g: Multigraph) -> tuple[int, int] | None:
    """Return (vertex, colour) of the first repeated colour, or None.

    Raises InputError if an assigned colour lies outside 1..k or the
    assignment length does not match the edge count.
    """
    if len(c.colours) != g.edge_count:
        raise InputError(
            f"colouring covers {len(c.colours)} edges but graph has {g.edge_count}"
        )
    for eid, col in enumerate(c.colours):
        if col != UNCOLOURED and not (1 <= col <= c.k):
            raise InputError(f"edge {eid} has colour {col} outside 1..{c.k}")
    for v in range(g.vertex_count):
        seen: set[int] = set()
        for eid in g.incident_edges(v):
            col = c.colours[eid]
            if col == UNCOLOURED:
                continue
            if col in seen:
                return (v, col)
            seen.add(col)
    return None


def is_proper(c: PartialColouring, g: Multigraph) -> bool:
    """True iff no colour repeats at any vertex."""
    return proper_violation(c, g) is None


def is_elementary(c: PartialColouring, g: Multigraph, s: Iterable[int]) -> bool:
    """True iff the missing sets of distinct vertices of s are pairwise disjoint."""
    seen: set[int] = set()
    for v in set(s):
        miss = missing_at(c, g, v)
        if seen & miss:
            return False
        seen |= miss
    return True


def greedy_max_domain(g: Multigraph, k: int, seed: int = 0) -> PartialColouring:
    """Greedy proper partial k-colouring, locally maximal.

    Edges are visited in a seeded random order and given the smallest colour
    missing at both ends, then re-visited until no uncoloured edge has a
    colour simultaneously missing at both ends.  No claim of globally
    maximum domain is made.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    c = PartialColouring(k, [UNCOLOURED] * g.edge_count)
    order = list(range(g.edge_count))
    random.Random(seed).shuffle(order)
    present: list[set[int]] = [set() for _ in range(g.vertex_count)]
    progress = True
    while progress:
        progress = False
        for eid in order:
            if c.colours[eid] != UNCOLOURED:
                continue
            a, b = g.edges[eid]
            free = [col for col in range(1, k + 1) if col not in present[a] and col not in present[b]]
            if free:
                col = free[0]
                c.colours[eid] = col
                present[a].add(col)
                present[b].add(col)
                progress = True
    return c


def parse_colouring(text: str, g: Multigraph) -> PartialColouring:
    """Parse the text colouring format: ``colours K`` then ``set E C`` lines.

    Edges absent from the file stay uncoloured.  Properness is not checked
    here; callers validate with proper_violation and report the offender.
    """
    k: int | None = None
    colours = [UNCOLOURED] * g.edge_count
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "colours":
            if k is not None:
                raise InputError(f"line {lineno}: duplicate 'colours' line")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected 'colours K'")
            k = int(parts[1])
        elif parts[0] == "set":
            if k is None:
                raise InputError(f"line {lineno}: 'set' before 'colours'")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'set E C'")
            eid, col = int(parts[1]), int(parts[2])
            if not (0 <= eid < g.edge_count):
                raise InputError(f"line {lineno}: edge id {eid} out of range")
            if not (1 <= col <= k):
                raise InputError(f"line {lineno}: colour {col} outside 1..{k}")
            if colours[eid] != UNCOLOURED:
                raise InputError(f"line {lineno}: edge {eid} coloured twice")
            colours[eid] = col
        else:
            raise InputError(f"line {lineno}: unknown directive {parts[0]!r}")
    if k is None:
        raise InputError("missing 'colours K' line")
    return PartialColouring(k, colours)


def format_colouring(c: PartialColouring) -> str:
    lines = [f"colours {c.k}"]
    for eid, col in enumerate(c.colours):
        if col != UNCOLOURED:
            lines.append(f"set {eid} {col}")
    return "\n".join(lines) + "\n"
