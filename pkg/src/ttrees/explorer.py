"""Exhaustive search over colourings reachable by Kempe changes, collapsed
to canonical classes.

Two coloured multigraphs are in the same class when one is the other
after renaming colours and applying a graph automorphism (the designated
uncoloured edge must map to itself's image, which the fingerprint marks
specially).  Kempe switches commute with both renamings, so breadth-first
closure over classes is the exact quotient of plain reachability; the set
of scope sizes seen over the closure equals the set seen by brute force.

The canonical form is exact: partition refinement plus backtracking over
the remaining symmetry, minimizing an encoded edge list.  No sampled or
probabilistic hashing is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .colouring import UNCOLOURED, PartialColouring, is_elementary, is_proper, missing_at
from .kempe import DOUBLE_EDGE, bichromatic_components, endpoints_share_missing, kempe_switch
from .multigraph import InputError, Multigraph
from .tashkinov import build_tree, defective_colours

# Fixed edge tokens; real colours are relabellable and get ids >= 1.
_TOKEN_E0 = -2
_TOKEN_UNCOLOURED = -1


def _compress(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def canonical_fingerprint(g: Multigraph, c: PartialColouring, e0: int | None = None) -> bytes:
    """Exact canonical form of (g, c) modulo colour permutation and graph
    automorphism; the designated edge e0 is marked and never relabelled.

    Colourings related by renaming colours and/or an automorphism map to
    identical byte strings; different classes map to different strings.
    Partition refinement narrows the vertex symmetry, a backtracking
    search individualizes what remains, and the minimum encoding over the
    resulting orderings is the class representative.
    """
    n = g.vertex_count
    class_size: dict[int, int] = {}
    for col in c.colours:
        if col != UNCOLOURED:
            class_size[col] = class_size.get(col, 0) + 1

    # Per-edge invariant token (colour-name free), grouped per vertex pair.
    bundles: dict[tuple[int, int], list[tuple]] = {}
    for eid, (a, b) in enumerate(g.edges):
        col = c.colours[eid]
        if eid == e0:
            tok: tuple = ("e",)
        elif col == UNCOLOURED:
            tok = ("u",)
        else:
            tok = ("c", class_size[col])
        bundles.setdefault((a, b), []).append(tok)
    nbrs: list[list[tuple[int, tuple]]] = [[] for _ in range(n)]
    for (u, v), toks in bundles.items():
        key = tuple(sorted(toks))
        nbrs[u].append((v, key))
        nbrs[v].append((u, key))

    def refine(labels: list[int]) -> list[int]:
        while True:
            keys = [
                (labels[v], tuple(sorted((labels[u], key) for u, key in nbrs[v])))
                for v in range(n)
            ]
            new = _compress(keys)
            if new == labels:
                return labels
            labels = new

    init = _compress([
        (g.degree(v), tuple(sorted(key for _, key in nbrs[v]))) for v in range(n)
    ])

    # Static encode inputs: endpoint pairs with fixed/colour split.
    edge_info = []
    for eid, (a, b) in enumerate(g.edges):
        if eid == e0:
            edge_info.append((a, b, _TOKEN_E0))
        elif c.colours[eid] == UNCOLOURED:
            edge_info.append((a, b, _TOKEN_UNCOLOURED))
        else:
            edge_info.append((a, b, c.colours[eid]))

    best: tuple | None = None

    def encode(labels: list[int]) -> tuple:
        pos = sorted(range(n), key=labels.__getitem__)
        inv = [0] * n
        for p, v in enumerate(pos):
            inv[v] = p
        # Colour names are canonicalized by each class's positioned edges.
        sigs: dict[int, list[tuple[int, int]]] = {}
        fixed: list[tuple[int, int, int]] = []
        for a, b, t in edge_info:
            pa, pb = inv[a], inv[b]
            if pa > pb:
                pa, pb = pb, pa
            if t < 0:
                fixed.append((pa, pb, t))
            else:
                sigs.setdefault(t, []).append((pa, pb))
        for lst in sigs.values():
            lst.sort()
        items = fixed
        for i, col in enumerate(sorted(sigs, key=sigs.__getitem__)):
            items.extend((pa, pb, i + 1) for pa, pb in sigs[col])
        items.sort()
        return tuple(items)

    def search(labels: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(labels[v], []).append(v)
        target = None
        for lab in sorted(cells):
            if len(cells[lab]) > 1:
                target = cells[lab]
                break
        if target is None:
            enc = encode(labels)
            if best is None or enc < best:
                best = enc
            return
        marker = n + 1
        for v in target:
            branched = list(labels)
            branched[v] = marker
            search(refine(branched))

    search(refine(init))
    assert best is not None
    return repr((n, best)).encode()


@dataclass(frozen=True)
class CanonicalState:
    fingerprint: bytes
    representative: PartialColouring
    e0: int
    depth: int


@dataclass
class ExplorationReport:
    states_visited: int
    max_w_size: int
    extendable_found: bool
    defect_free_found: bool
    complete: bool
    per_state: list[dict] = field(default_factory=list)

    def w_sizes(self) -> set[int]:
        return {s["w_size"] for s in self.per_state}


def neighbours(g: Multigraph, c: PartialColouring, prune_trivial: bool = True
               ) -> list[PartialColouring]:
    """One colouring per Kempe switch, optionally without the provably
    class-preserving ones.

    Switching every component of a pair at once is just a renaming of the
    two colours, so switching all components but one lands in the same
    class as switching that one.  Consequences used for pruning:

    - a doubled-edge switch is an automorphism (swap the two parallels);
    - a pair with at most one non-doubled component only yields switches
      in the current class;
    - a pair with exactly two non-doubled components yields the same class
      from either, so one suffices.

    None of these shrink the class closure; tests confirm pruned moves'
    fingerprints against the kept ones.
    """
    out: list[PartialColouring] = []
    for a in range(1, c.k + 1):
        for b in range(a + 1, c.k + 1):
            comps = bichromatic_components(c, g, a, b)
            if prune_trivial:
                nontrivial = [comp for comp in comps if comp.kind != DOUBLE_EDGE]
                if len(nontrivial) <= 1:
                    continue
                comps = nontrivial[:1] if len(nontrivial) == 2 else nontrivial
            for comp in comps:
                out.append(kempe_switch(c, g, comp))
    return out


def _e0_shift_moves(g: Multigraph, c: PartialColouring, e0: int) -> list[tuple[PartialColouring, int]]:
    """Single-edge shifts: uncolour some edge f so its colour becomes
    placeable on e0, colour e0 with it, and designate f as the new
    uncoloured edge of interest."""
    x, y = g.edges[e0]
    moves: list[tuple[PartialColouring, int]] = []
    for f, col in enumerate(c.colours):
        if col == UNCOLOURED or f == e0:
            continue
        trial = c.copy()
        trial.colours[f] = UNCOLOURED
        if col in missing_at(trial, g, x) and col in missing_at(trial, g, y):
            trial.colours[e0] = col
            moves.append((trial, f))
    return moves


def explore(g: Multigraph, c: PartialColouring, e0: int,
            max_depth: int | None = None, allow_e0_shift: bool = False,
            budget: int = 10**6, prune_trivial: bool = True) -> ExplorationReport:
    """Breadth-first closure over canonical classes reachable from c.

    Per class the report records the scope size, defective colours and
    elementarity, plus whether e0 ever becomes directly colourable
    (a common missing colour at its ends) or the scope ever loses all
    defective colours.
    """
    if c.colours[e0] != UNCOLOURED:
        raise InputError("designated edge e0 must be uncoloured")
    if not is_proper(c, g):
        raise InputError("starting colouring is not proper")

    start_unc = len(c.uncoloured_edges())
    visited: dict[bytes, dict] = {}
    fp_cache: dict[tuple, bytes] = {}

    def fingerprint(col: PartialColouring, e: int) -> bytes:
        key = (col.key(), e)
        fp = fp_cache.get(key)
        if fp is None:
            fp = canonical_fingerprint(g, col, e)
            fp_cache[key] = fp
        return fp

    def metrics(col: PartialColouring, e: int, fp: bytes, depth: int) -> dict:
        state = build_tree(col, g, e)
        elem = is_elementary(col, g, state.w_set)
        return {
            "fingerprint": fp.hex(),
            "depth": depth,
            "w_size": len(state.w_set),
            "defective": sorted(state.defective),
            "elementary": elem,
            "extendable": endpoints_share_missing(col, g, e),
        }

    complete = True
    fp0 = fingerprint(c, e0)
    visited[fp0] = metrics(c, e0, fp0, 0)
    frontier: list[tuple[PartialColouring, int, int]] = [(c.copy(), e0, 0)]
    while frontier:
        nxt: list[tuple[PartialColouring, int, int]] = []
        for col, e, depth in frontier:
            if max_depth is not None and depth >= max_depth:
                continue
            moves: list[tuple[PartialColouring, int]] = [
                (m, e) for m in neighbours(g, col, prune_trivial)
            ]
            if allow_e0_shift:
                moves.extend(_e0_shift_moves(g, col, e))
            for m, me in moves:
                assert len(m.uncoloured_edges()) == start_unc
                fp = fingerprint(m, me)
                if fp in visited:
                    continue
                if len(visited) >= budget:
                    complete = False
                    continue
                visited[fp] = metrics(m, me, fp, depth + 1)
                nxt.append((m, me, depth + 1))
        frontier = nxt

    per_state = sorted(visited.values(), key=lambda s: s["fingerprint"])
    return ExplorationReport(
        states_visited=len(visited),
        max_w_size=max(s["w_size"] for s in per_state),
        extendable_found=any(s["extendable"] for s in per_state),
        defect_free_found=any(not s["defective"] for s in per_state),
        complete=complete,
        per_state=per_state,
    )
