"""Maximal Tashkinov trees, their derived colour sets, and the escalation
pipeline.

A tree grows from an uncoloured edge e0 by repeatedly attaching a coloured
edge that joins the current vertex set W to a new vertex, provided the
edge's colour is missing at some vertex already in W.  The vertex set of
any maximal such tree is independent of the growth order; the order only
affects which edges form the tree and hence which colours it uses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .colouring import UNCOLOURED, PartialColouring, greedy_max_domain, is_elementary, missing_at
from .density import ceil_fraction, elementary_lower_bound, rho
from .multigraph import InputError, Multigraph

Candidate = tuple[int, int, int]  # (colour, edge id, new vertex)


def _policy_chooser(policy: str):
    """Resolve an ordering-policy name to a chooser over sorted candidates."""
    if policy == "lex":
        return lambda cands, used, rng: cands[0]
    if policy == "revlex":
        return lambda cands, used, rng: cands[-1]
    if policy == "min-colours":
        # Prefer a colour already used on the tree; fall back to lex.
        def choose(cands: list[Candidate], used: set[int], rng) -> Candidate:
            reuse = [cand for cand in cands if cand[0] in used]
            return reuse[0] if reuse else cands[0]
        return choose
    if policy.startswith("random"):
        return lambda cands, used, rng: cands[rng.randrange(len(cands))]
    raise InputError(f"unknown tie-break policy {policy!r}")


def _policy_rng(policy: str) -> random.Random:
    seed = 0
    if policy.startswith("random:"):
        seed = int(policy.split(":", 1)[1])
    return random.Random(seed)


@dataclass(frozen=True)
class TashkinovState:
    """A maximal tree from e0 together with its derived colour sets.

    tree_edges lists e0 first and then each attachment edge in growth
    order.  missing_union is the set of colours missing somewhere in
    w_set; used_colours the colours appearing on the tree edges;
    defective the colours with two or more boundary edges.
    """

    e0: int
    tree_edges: tuple[int, ...]
    w_set: frozenset[int]
    used_colours: frozenset[int]
    missing_union: frozenset[int]
    defective: frozenset[int]
    boundary_counts: dict[int, int]
    outside_preconditions: bool


def boundary_colour_counts(c: PartialColouring, g: Multigraph, w: frozenset[int] | set[int]) -> dict[int, int]:
    """Colour -> number of boundary edges of w carrying it."""
    counts: dict[int, int] = {}
    for eid in g.boundary_edges(w):
        col = c.colours[eid]
        if col != UNCOLOURED:
            counts[col] = counts.get(col, 0) + 1
    return counts


def defective_colours(c: PartialColouring, g: Multigraph, w: frozenset[int] | set[int]) -> dict[int, int]:
    """Colours appearing on two or more boundary edges of w, with counts."""
    return {col: n for col, n in boundary_colour_counts(c, g, w).items() if n >= 2}


def build_tree(c: PartialColouring, g: Multigraph, e0: int, tie_break: str = "lex") -> TashkinovState:
    """Grow a maximal tree from e0 under the given tie-break policy."""
    if not (0 <= e0 < g.edge_count):
        raise InputError(f"edge id {e0} out of range")
    if c.colours[e0] != UNCOLOURED:
        raise InputError(f"e0 (edge {e0}) must be uncoloured")
    outside = c.k < g.max_degree() + 1

    chooser = _policy_chooser(tie_break)
    rng = _policy_rng(tie_break)

    a, b = g.edges[e0]
    w: set[int] = {a, b}
    tree = [e0]
    used: set[int] = set()
    miss_union: set[int] = missing_at(c, g, a) | missing_at(c, g, b)

    while True:
        cands: list[Candidate] = []
        for v in w:
            for eid in g.incident_edges(v):
                col = c.colours[eid]
                if col == UNCOLOURED or col not in miss_union:
                    continue
                u = g.other_end(eid, v)
                if u not in w:
                    cands.append((col, eid, u))
        if not cands:
            break
        cands.sort()
        col, eid, u = chooser(cands, used, rng)
        w.add(u)
        tree.append(eid)
        used.add(col)
        miss_union |= missing_at(c, g, u)

    counts = boundary_colour_counts(c, g, w)
    defect = frozenset(col for col, n in counts.items() if n >= 2)
    return TashkinovState(
        e0=e0,
        tree_edges=tuple(tree),
        w_set=frozenset(w),
        used_colours=frozenset(used),
        missing_union=frozenset(miss_union),
        defective=defect,
        boundary_counts=counts,
        outside_preconditions=outside,
    )


DEFAULT_POLICIES = ("lex", "revlex", "min-colours", "random:1", "random:2")


def w_set_invariance(c: PartialColouring, g: Multigraph, e0: int,
                     policies: tuple[str, ...] = DEFAULT_POLICIES) -> bool:
    """True iff every policy grows the same vertex set from e0."""
    sets = {build_tree(c, g, e0, p).w_set for p in policies}
    return len(sets) == 1


@dataclass
class PipelineStep:
    k: int
    coloured: int
    uncoloured: int
    w_size: int | None
    elementary: bool | None
    defective: tuple[int, ...] | None
    bound: int | None
    note: str


@dataclass
class PipelineReport:
    steps: list[PipelineStep]
    status: str  # certified | colourable | inconclusive
    lower_bound: int | None
    upper_bound: int | None
    chi_prime: int | None
    certificate_w: tuple[int, ...] | None


def induced_subgraph(g: Multigraph, s: set[int] | frozenset[int]) -> tuple[Multigraph, dict[int, int]]:
    """The subgraph induced on s, with a map old vertex -> new vertex."""
    verts = sorted(s)
    remap = {v: i for i, v in enumerate(verts)}
    pairs = [(remap[a], remap[b]) for a, b in g.edges if a in s and b in s]
    return Multigraph.from_edges(len(verts), pairs), remap


def escalation_pipeline(g: Multigraph, start_k: int, max_k: int, seed: int = 0,
                        initial: PartialColouring | None = None,
                        tie_break: str = "lex") -> PipelineReport:
    """Iteratively colour with k colours, inspect the tree scope, and raise
    k until the colouring completes or max_k is exhausted.

    Each k with an elementary, defect-free scope W certifies the lower
    bound max(ceil(rho(G[W])), the counting bound) on the chromatic index;
    a completed colouring gives the upper bound k.  When the two meet the
    report carries the certified chromatic index.
    """
    if start_k < g.max_degree() + 1:
        raise InputError("start_k must be at least max degree + 1")
    if initial is not None and initial.k != start_k:
        raise InputError("supplied colouring must use start_k colours")

    steps: list[PipelineStep] = []
    lower: int | None = None
    cert_w: tuple[int, ...] | None = None
    for k in range(start_k, max_k + 1):
        if k == start_k and initial is not None:
            c = initial
        else:
            c = greedy_max_domain(g, k, seed)
        unc = c.uncoloured_edges()
        if not unc:
            upper = k
            if lower is not None and lower >= upper:
                steps.append(PipelineStep(k, c.coloured_count(), 0, None, None, None, None,
                                          "complete; matches lower bound"))
                return PipelineReport(steps, "certified", lower, upper, upper, cert_w)
            steps.append(PipelineStep(k, c.coloured_count(), 0, None, None, None, None, "complete"))
            return PipelineReport(steps, "colourable", lower, upper, None, cert_w)

        state = build_tree(c, g, unc[0], tie_break)
        elem = is_elementary(c, g, state.w_set)
        defect = tuple(sorted(state.defective))
        bound: int | None = None
        if elem and not defect:
            w_size = len(state.w_set)
            bound = elementary_lower_bound(k, w_size) if w_size >= 3 and w_size % 2 == 1 else k + 1
            if w_size >= 3 and w_size % 2 == 1:
                sub, _ = induced_subgraph(g, state.w_set)
                bound = max(bound, rho(sub).ceiling)
            if lower is None or bound > lower:
                lower = bound
                cert_w = tuple(sorted(state.w_set))
            note = f"scope certifies chi' >= {bound}"
        elif not elem:
            note = "blocked: non-elementary"
        else:
            note = "blocked: defective"
        steps.append(PipelineStep(k, c.coloured_count(), len(unc), len(state.w_set), elem, defect, bound, note))
    return PipelineReport(steps, "inconclusive", lower, None, None, cert_w)
